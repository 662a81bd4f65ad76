#pragma once

#include <Eigen/Dense>
#include <vector>

#include "asymtop/so3.hpp"

namespace asymtop {

/// q = alpha + i beta on the strip Q.
struct ComplexQ {
  double alpha = 0.0;
  double beta = 0.0;

  cplx value() const { return {alpha, beta}; }
  static ComplexQ from(cplx q) { return {q.real(), q.imag()}; }
};

/// Element of F^j: Psi(q) = sum_{n=-j}^{j} c_n exp(i n q).
class FourierState {
 public:
  explicit FourierState(int j);
  FourierState(int j, Eigen::VectorXcd coeffs);

  /// The basis function psi_n(q) = exp(i n q).
  static FourierState basis(int j, int n);

  int j() const { return j_; }
  int dim() const { return 2 * j_ + 1; }
  cplx& operator[](int n) { return c_(n + j_); }
  cplx operator[](int n) const { return c_(n + j_); }
  const Eigen::VectorXcd& coeffs() const { return c_; }
  Eigen::VectorXcd& coeffs() { return c_; }

 private:
  int j_;
  Eigen::VectorXcd c_;
};

/// An operator on F^j (or on span{|j,m,n>}), rows and columns indexed by
/// n = -j..j.
struct RepMatrix {
  int j = 0;
  Eigen::MatrixXcd m;

  cplx operator()(int row, int col) const { return m(row + j, col + j); }
  cplx& operator()(int row, int col) { return m(row + j, col + j); }
};

/// B_{nj} = (j!)^2 / ((j-n)!(j+n)!). DomainError when |n| > j.
double weight_B(int n, int j);

/// C_j = (2j+1)! / (2^j (j!)^2).
double const_C(int j);

/// Gram metric diag(1/B_{nj}) of the psi_n basis.
Eigen::VectorXd gram_diagonal(int j);

/// Matrix of ell_a(q, d/dq, j) on psi_n. ell_3 = diag(i n),
/// ell_1 psi_n = i(j-n)/2 psi_{n+1} + i(j+n)/2 psi_{n-1},
/// ell_2 psi_n = -(j-n)/2 psi_{n+1} + (j+n)/2 psi_{n-1}.
RepMatrix ell_matrix(int axis, int j);

/// sum_a (-i ell_a)^2, equal to j(j+1) I.
RepMatrix casimir_matrix(int j);

/// (u, v)_Q evaluated through the orthogonality (psi_n, psi_m) = delta/B_{nj}.
cplx inner_product(const FourierState& u, const FourierState& v);

struct QuadratureOptions {
  /// Half-width of the beta window; <= 0 picks it from the tail bound.
  double beta_max = 0.0;
  int n_alpha = 0;  ///< <= 0 picks 2j+2
  int n_beta = 400;
  double tail_tolerance = 1e-10;
};

struct QuadratureResult {
  cplx value;
  double beta_max = 0.0;
  /// Analytic bound on the discarded |beta| > beta_max part.
  double tail_bound = 0.0;
  /// False when tail_bound exceeds the requested tolerance.
  bool tail_ok = true;
};

/// Normalization of the real-form measure kappa_j dalpha dbeta /
/// (1 + cosh 2 beta)^{j+1}, fixed by (psi_0, psi_0)_Q = 1.
double measure_kappa(int j);

/// Upper bound on the beta-tail of |conj(psi_n) psi_m| density beyond beta_max.
double measure_tail_bound(int j, double beta_max);

/// Smallest beta_max whose tail bound is below tol.
double measure_beta_max(int j, double tol);

/// Measure density kappa_j / (1 + cosh 2 beta)^{j+1} at beta.
double measure_density(int j, double beta);

/// (u, v)_Q by direct quadrature over Q: trapezoid in alpha, Gauss-Legendre
/// in beta on [-beta_max, beta_max].
QuadratureResult inner_product_quadrature(const FourierState& u, const FourierState& v,
                                          const QuadratureOptions& opt = {});

/// delta_j(q, conj(q')) = (2j+1)/C_j (1 + cos(q - conj(q')))^j.
cplx delta_j(const ComplexQ& q, const ComplexQ& qp, int j);

/// The same kernel summed as sum_n B_{nj} exp(i n (q - conj(q'))).
cplx delta_j_series(const ComplexQ& q, const ComplexQ& qp, int j);

/// |Im q| above which exp(i n q) is refused.
inline constexpr double kMaxAbsBeta = 50.0;

/// Psi(q) = sum c_n exp(i n q). OverflowError when |beta| > kMaxAbsBeta.
cplx evaluate_state(const FourierState& u, const ComplexQ& q);

/// d/dq and d^2/dq^2 of the trigonometric polynomial, term by term.
cplx evaluate_state_derivative(const FourierState& u, const ComplexQ& q, int order);

}  // namespace asymtop
