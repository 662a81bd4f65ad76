#pragma once

#include <array>

#include "asymtop/spectra.hpp"

namespace asymtop {

/// Pieces of the closed-form wavefunction at (q, g).
///   base = cos(theta) + i cos(q+phi) sin(theta)
///   w    = exp(i u), u = psi + v, where
///   base * exp(+-i v) = cos(q+phi) cos(theta) + i sin(theta) +- i sin(q+phi).
/// w equals exp(i q) at the identity; e^{i n u} needs no arctan branch.
struct MobiusPhase {
  cplx base;
  cplx w;
  cplx raise;  ///< base * exp(+i v)
  cplx lower;  ///< base * exp(-i v)
};

/// PoleError when base vanishes (w undefined).
MobiusPhase mobius_phase(const ComplexQ& q, const EulerAngles& g);

/// base^j * Phi(u) for an arbitrary Phi in F^j. Evaluated as
/// sum_n c_n exp(i n psi) raise^n base^{j-n} (n >= 0, lower^{|n|} for n < 0),
/// which stays finite where base = 0.
cplx psi_eval(const FourierState& phi, const ComplexQ& q, const EulerAngles& g);

/// Psi_{q,j,s}(g) for the top's eigenfunction Phi_{j,s}.
cplx psi_eval(const ComplexQ& q, int j, int s, const TopParams& p, const EulerAngles& g);

/// Kernel of T^j(g):
/// (2j+1)/C_j {[cos(phi+q) cos(q'* - psi) + 1] cos theta
///   + i [cos(phi+q) + cos(q'* - psi)] sin theta + sin(phi+q) sin(q'* - psi)}^j.
cplx kernel_eval(const ComplexQ& q, const ComplexQ& qp, int j, const EulerAngles& g);

/// The same kernel summed over the Wigner basis,
/// sum_{mn} sqrt(B_n B_m) exp(-i n q'* + i m q - i pi (m-n)/2) D^j_{mn}(g).
cplx kernel_from_wigner(const ComplexQ& q, const ComplexQ& qp, int j, const EulerAngles& g);

/// Matrix of T^j(g) on the psi_n basis,
/// t_{mn} = sqrt(B_m/B_n) exp(-i pi (m-n)/2) D^j_{mn}(g).
struct TMatrix {
  int j = 0;
  Eigen::MatrixXcd t;

  FourierState apply(const FourierState& u) const;
};

TMatrix t_matrix(int j, const EulerAngles& g);

/// Gram matrix element (psi_m, T psi_n)_Q.
cplx t_gram_element(const TMatrix& t, int m, int n);

/// evaluate_state(T^j(g) Phi, q).
cplx psi_via_kernel(const FourierState& phi, const ComplexQ& q, const EulerAngles& g);
cplx psi_via_kernel(const ComplexQ& q, int j, int s, const TopParams& p, const EulerAngles& g);

/// D^j_{mn}(g) recovered from the kernel by the double integral over Q x Q
/// with C^j_{mn} = sqrt(B_n B_m) exp(i pi (m-n)/2). Rows m, columns n.
Eigen::MatrixXcd wigner_from_kernel_quadrature(int j, const EulerAngles& g, int n_beta = 160,
                                  double tail_tolerance = 1e-10);

/// |j,m,s> in the |j,m,n> basis (entries n = -j..j), normalized so that
/// <j,m,s|j,m,s> = sum |a_n|^2 / (2j+1) = 1 under the Haar measure.
struct JmsState {
  int j = 0;
  int m = 0;
  int s = 0;
  double E = 0.0;
  Eigen::VectorXcd coeffs;
  bool near_degenerate = false;

  cplx evaluate(const EulerAngles& g) const;
};

JmsState state_jms(int j, int m, int s, const TopParams& p);

struct PdeResidual {
  double schrodinger = 0.0;
  std::array<double, 3> symmetry{};

  double symmetry_norm() const;
};

/// |H(-i xi) Psi - E Psi| and |(eta_a + ell_a(q, d/dq, j)) Psi| at g, all
/// derivatives by central differences of step h (d/dq along Re q).
PdeResidual pde_residual(const ComplexQ& q, int j, int s, const TopParams& p,
                         const EulerAngles& g, double h, double pole_guard = 1e-3);

/// Haar quadrature of |Psi_{q,j,s}|^2; equals delta_j(q, conj q).
double so3_norm(const ComplexQ& q, int j, int s, const TopParams& p, const HaarRule& rule);

struct KernelGramResult {
  cplx computed;
  cplx expected;
  double defect = 0.0;
};

/// Haar quadrature of conj(D^j_{q q'}) D^jt_{qt qt'} against
/// delta_{j jt}/(2j+1) * delta_j(qt, conj q) * delta_j(q', conj qt').
KernelGramResult kernel_gram(int j, int jt, const HaarRule& rule, const ComplexQ& q,
                             const ComplexQ& qp, const ComplexQ& qt, const ComplexQ& qtp);

/// |sum_s |Phi_{j,s}(q)|^2 / (2j+1) - delta_j(q, conj q)|.
double completeness_defect(int j, const TopParams& p, const ComplexQ& q);

/// (Delta K)^2 = j(j+1) delta_j(q, conj q).
double uncertainty(const ComplexQ& q, int j);

}  // namespace asymtop
