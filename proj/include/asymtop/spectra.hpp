#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "asymtop/lambda_rep.hpp"

namespace asymtop {

/// Rotational constants of H = A L1^2 + B L2^2 + C L3^2, A >= B >= C > 0.
struct TopParams {
  double A = 1.0;
  double B = 1.0;
  double C = 1.0;

  /// Throws ParamsError unless A >= B >= C > 0 and all finite.
  void validate() const;
  /// A > B > C with both gaps above 1e-9 * A.
  bool strictly_asymmetric() const;
};

enum class Route { Wigner, Lambda, Lame };

std::string to_string(Route r);
std::optional<Route> parse_route(const std::string& s);

struct EnergyLevel {
  int j = 0;
  int s = 0;  ///< -j..j in ascending energy
  double E = 0.0;
  std::optional<int> lame_class;  ///< 1..4 on the Lamé route
  Route route = Route::Wigner;
};

// Matrix routes ------------------------------------------------------------

/// Standard spin-j matrices on the ascending basis n = -j..j:
/// J3 = diag(n), [J1, J2] = i J3 (cyclic).
std::array<RepMatrix, 3> angular_momentum_matrices(int j);

/// Matrices of the body-frame components -L_a on span{|j,m,n>} with
/// <g|j,m,n> = D^j_{mn}(g). In terms of the standard spin matrices they are
/// (-J2, -J1, J3); they obey the body-frame relation [K1, K2] = -i K3.
std::array<RepMatrix, 3> body_frame_matrices(int j);

/// H_{n n'} = <j,m,n| A L1^2 + B L2^2 + C L3^2 |j,m,n'>. Independent of m.
RepMatrix h_matrix_wigner(int j, const TopParams& p);

/// H(-i ell) on the psi_n basis, assembled from ell_matrix.
RepMatrix h_matrix_lambda(int j, const TopParams& p);

/// The same operator obtained by applying the reduced second-order ODE
/// (trigonometric coefficients in q') to exp(i n q').
RepMatrix h_matrix_lambda_ode(int j, const TopParams& p);

/// G^{1/2} M G^{-1/2} for M = h_matrix_lambda; Hermitian.
Eigen::MatrixXcd lambda_symmetrized(int j, const TopParams& p);

/// 2j+1 levels in ascending order, s = -j..j. The Lamé route throws
/// DegenerateParamsError unless the top is strictly asymmetric.
std::vector<EnergyLevel> spectrum(int j, const TopParams& p, Route route);

// Lamé route ---------------------------------------------------------------

/// Lamé operator 4P L'' + 2P' L' - j(j+1) rho L + E L with
/// P = (rho-A)(rho-B)(rho-C). Solutions of class N are
///   (rho-A)^{a/2} (rho-C)^{c/2} sum_k coef_k (rho-B)^{mu-k}
/// with (a, c) = (0,0), (1,0), (0,1), (1,1) for N = 1..4.
struct LameClassShape {
  int klass = 1;
  double alpha = 0.0;  ///< exponent at rho = A
  double gamma = 0.0;  ///< exponent at rho = C
  double mu = 0.0;     ///< leading exponent of (rho - B)
  int size = 0;        ///< number of coefficients, i.e. number of roots
};

LameClassShape lame_class_shape(int klass, int j);

/// Tridiagonal matrix M with (M + E I) coef = 0 for the terminating series;
/// its E-roots are the eigenvalues of -M. May be 0x0.
struct LamePencil {
  LameClassShape shape;
  Eigen::MatrixXd M;
};

LamePencil lame_recurrence(int klass, int j, const TopParams& p);

/// Roots of one class, ascending.
std::vector<double> lame_class_roots(int klass, int j, const TopParams& p);

/// Union of the four classes, sorted, each tagged with its class. Throws
/// RootCountError if the class sizes do not add to 2j+1.
std::vector<EnergyLevel> lame_spectrum(int j, const TopParams& p);

struct LameSeries {
  LameClassShape shape;
  double E = 0.0;
  std::vector<double> coeffs;  ///< coef_0 = 1
  /// Relative residual of the last recurrence row, i.e. how far the first
  /// coefficient past the polynomial is from vanishing.
  double termination = 0.0;
};

/// Coefficients by forward recurrence from coef_0 = 1. Throws
/// NotTerminatingError if the termination ratio exceeds tol.
LameSeries lame_polynomial(int klass, int j, double E, const TopParams& p,
                           double tol = 1e-8);

/// Lambda(rho) for complex rho (principal square roots).
cplx lame_evaluate(const LameSeries& s, const TopParams& p, cplx rho);

/// |Lamé operator applied to Lambda| / scale at rho, evaluated from the ODE
/// with analytic derivatives of the prefactors.
double lame_residual(const LameSeries& s, int j, const TopParams& p, cplx rho);

/// rho(q') = 2(A-C)(B-C)/(A+B-2C-(A-B)cos 2q') + C. PoleError at a zero
/// of the denominator.
cplx rho_map(const ComplexQ& q, const TopParams& p);

// Eigenstates --------------------------------------------------------------

struct PhiState {
  FourierState state;
  double E = 0.0;
  int s = 0;
  /// Another level lies within 1e-9 * scale; the vector is then only
  /// defined up to a rotation inside the degenerate block.
  bool near_degenerate = false;
};

/// Phase convention for eigenfunctions: Phi is made real on real q', then
/// the largest of its real Fourier coefficients (a_0, a_1, b_1, a_2, ...) is
/// made positive.
void fix_phase(FourierState& u);

/// All 2j+1 normalized eigenfunctions of H(-i ell), (Phi_s, Phi_s')_Q =
/// (2j+1) delta_ss', ascending energy.
std::vector<PhiState> phi_states(int j, const TopParams& p);

PhiState phi_state(int j, int s, const TopParams& p);

/// Phi^{(N)}(q') = (2(A-C)(B-C)/(rho-C))^{j/2} Lambda^{(N)}(rho(q')) written as
/// a trigonometric polynomial, normalized and phase-fixed like phi_state.
FourierState phi_from_lame(const LameSeries& s, int j, const TopParams& p);

/// |(H(-i ell) - E) Phi|(q') / scale from the explicit reduced ODE, with the
/// Fourier series differentiated term by term.
double reduced_ode_residual(const FourierState& phi, double E, const TopParams& p,
                            const ComplexQ& q);

}  // namespace asymtop
