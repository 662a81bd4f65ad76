#include "asymtop/lambda_rep.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "asymtop/errors.hpp"
#include "asymtop/quadrature.hpp"

namespace asymtop {

namespace {

constexpr cplx kI{0.0, 1.0};

double log_factorial(int n) { return std::lgamma(n + 1.0); }

void check_j(int j) {
  if (j < 0) throw DomainError("angular momentum j must be non-negative");
}

}  // namespace

FourierState::FourierState(int j) : j_(j), c_(Eigen::VectorXcd::Zero(2 * j + 1)) {
  check_j(j);
}

FourierState::FourierState(int j, Eigen::VectorXcd coeffs) : j_(j), c_(std::move(coeffs)) {
  check_j(j);
  if (c_.size() != 2 * j + 1) throw DimensionError("FourierState needs 2j+1 coefficients");
  for (Eigen::Index i = 0; i < c_.size(); ++i) {
    if (!std::isfinite(c_(i).real()) || !std::isfinite(c_(i).imag())) {
      throw DomainError("FourierState coefficients must be finite");
    }
  }
}

FourierState FourierState::basis(int j, int n) {
  if (std::abs(n) > j) throw DomainError("basis index |n| > j");
  FourierState s(j);
  s[n] = 1.0;
  return s;
}

double weight_B(int n, int j) {
  check_j(j);
  if (std::abs(n) > j) throw DomainError("weight_B: |n| > j");
  return std::exp(2.0 * log_factorial(j) - log_factorial(j - n) - log_factorial(j + n));
}

double const_C(int j) {
  check_j(j);
  return std::exp(log_factorial(2 * j + 1) - j * std::log(2.0) - 2.0 * log_factorial(j));
}

Eigen::VectorXd gram_diagonal(int j) {
  Eigen::VectorXd g(2 * j + 1);
  for (int n = -j; n <= j; ++n) g(n + j) = 1.0 / weight_B(n, j);
  return g;
}

RepMatrix ell_matrix(int axis, int j) {
  check_j(j);
  if (axis < 1 || axis > 3) throw DomainError("ell_matrix: axis must be 1..3");
  RepMatrix r{j, Eigen::MatrixXcd::Zero(2 * j + 1, 2 * j + 1)};
  for (int n = -j; n <= j; ++n) {
    const double up = 0.5 * (j - n), down = 0.5 * (j + n);
    switch (axis) {
      case 1:
        if (n < j) r(n + 1, n) = kI * up;
        if (n > -j) r(n - 1, n) = kI * down;
        break;
      case 2:
        if (n < j) r(n + 1, n) = -up;
        if (n > -j) r(n - 1, n) = down;
        break;
      default:
        r(n, n) = kI * static_cast<double>(n);
    }
  }
  return r;
}

RepMatrix casimir_matrix(int j) {
  RepMatrix k{j, Eigen::MatrixXcd::Zero(2 * j + 1, 2 * j + 1)};
  for (int a = 1; a <= 3; ++a) {
    const Eigen::MatrixXcd f = -kI * ell_matrix(a, j).m;
    k.m += f * f;
  }
  return k;
}

cplx inner_product(const FourierState& u, const FourierState& v) {
  if (u.j() != v.j()) throw DimensionError("inner_product: j mismatch");
  const int j = u.j();
  cplx s{};
  for (int n = -j; n <= j; ++n) s += std::conj(u[n]) * v[n] / weight_B(n, j);
  return s;
}

double measure_kappa(int j) { return const_C(j) / (2.0 * std::numbers::pi); }

double measure_tail_bound(int j, double beta_max) {
  return 4.0 * std::numbers::pi * measure_kappa(j) * std::pow(2.0, j) *
         std::exp(-2.0 * beta_max);
}

double measure_beta_max(int j, double tol) {
  // nudged up so the bound at the returned width is not above tol by rounding
  return 0.5 * std::log(4.0 * std::numbers::pi * measure_kappa(j) * std::pow(2.0, j) / tol) + 1e-9;
}

double measure_density(int j, double beta) {
  return measure_kappa(j) / std::pow(1.0 + std::cosh(2.0 * beta), j + 1);
}

QuadratureResult inner_product_quadrature(const FourierState& u, const FourierState& v,
                                          const QuadratureOptions& opt) {
  if (u.j() != v.j()) throw DimensionError("inner_product_quadrature: j mismatch");
  const int j = u.j();
  const int n_alpha = opt.n_alpha > 0 ? opt.n_alpha : 2 * j + 2;
  if (n_alpha < 2 * j + 1 || opt.n_beta < 2) {
    throw DomainError("inner_product_quadrature: too few nodes");
  }
  const double scale = u.coeffs().cwiseAbs().sum() * v.coeffs().cwiseAbs().sum();

  QuadratureResult res;
  res.beta_max = opt.beta_max > 0.0 ? opt.beta_max
                                    : measure_beta_max(j, opt.tail_tolerance / std::max(scale, 1e-300));
  res.tail_bound = scale * measure_tail_bound(j, res.beta_max);
  res.tail_ok = res.tail_bound <= opt.tail_tolerance;

  const GaussRule gl = gauss_legendre(opt.n_beta, -res.beta_max, res.beta_max);
  const double w_alpha = 2.0 * std::numbers::pi / n_alpha;
  cplx sum{};
  for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
    const double beta = gl.nodes[k];
    const double w = gl.weights[k] * measure_density(j, beta) * w_alpha;
    cplx row{};
    for (int i = 0; i < n_alpha; ++i) {
      const ComplexQ q{w_alpha * i, beta};
      row += std::conj(evaluate_state(u, q)) * evaluate_state(v, q);
    }
    sum += w * row;
  }
  res.value = sum;
  return res;
}

cplx delta_j(const ComplexQ& q, const ComplexQ& qp, int j) {
  check_j(j);
  const cplx diff = q.value() - std::conj(qp.value());
  return (2.0 * j + 1.0) / const_C(j) * std::pow(1.0 + std::cos(diff), j);
}

cplx delta_j_series(const ComplexQ& q, const ComplexQ& qp, int j) {
  check_j(j);
  const cplx diff = q.value() - std::conj(qp.value());
  cplx s{};
  for (int n = -j; n <= j; ++n) s += weight_B(n, j) * std::exp(kI * static_cast<double>(n) * diff);
  return s;
}

cplx evaluate_state(const FourierState& u, const ComplexQ& q) {
  return evaluate_state_derivative(u, q, 0);
}

cplx evaluate_state_derivative(const FourierState& u, const ComplexQ& q, int order) {
  const int j = u.j();
  if (std::abs(q.beta) > kMaxAbsBeta || j * std::abs(q.beta) > 700.0) {
    throw OverflowError("evaluate_state: |Im q| too large");
  }
  const cplx z = std::exp(kI * q.value());
  const cplx zinv = 1.0 / z;
  // Horner in z starting from the lowest power z^{-j}.
  cplx acc{};
  for (int n = j; n >= -j; --n) {
    cplx c = u[n];
    if (order > 0) c *= std::pow(kI * static_cast<double>(n), order);
    acc = acc * z + c;
  }
  return acc * std::pow(zinv, j);
}

}  // namespace asymtop
