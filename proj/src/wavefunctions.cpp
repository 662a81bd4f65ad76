#include "asymtop/wavefunctions.hpp"

#include <cmath>
#include <numbers>

#include "asymtop/errors.hpp"
#include "asymtop/quadrature.hpp"
#include "asymtop/wigner.hpp"

namespace asymtop {

namespace {

constexpr cplx kI{0.0, 1.0};

// i^k for any integer k
cplx ipow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

cplx cpow_int(cplx z, int k) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

MobiusPhase mobius_phase(const ComplexQ& q, const EulerAngles& g) {
  const cplx a = q.value() + g.phi;
  const double ct = std::cos(g.theta), st = std::sin(g.theta);
  const cplx ca = std::cos(a), sa = std::sin(a);
  MobiusPhase r;
  r.base = ct + kI * ca * st;
  r.raise = ca * ct + kI * st + kI * sa;
  r.lower = ca * ct + kI * st - kI * sa;
  const double scale = std::abs(r.raise) + std::abs(r.lower) + 1.0;
  if (std::abs(r.base) < 1e-14 * scale) throw PoleError("mobius_phase: w undefined (base = 0)");
  r.w = std::exp(kI * g.psi) * r.raise / r.base;
  return r;
}

cplx psi_eval(const FourierState& phi, const ComplexQ& q, const EulerAngles& g) {
  const int j = phi.j();
  const cplx a = q.value() + g.phi;
  const double ct = std::cos(g.theta), st = std::sin(g.theta);
  const cplx ca = std::cos(a), sa = std::sin(a);
  const cplx base = ct + kI * ca * st;
  const cplx up = ca * ct + kI * st + kI * sa;
  const cplx dn = ca * ct + kI * st - kI * sa;
  const cplx eps = std::exp(kI * g.psi);

  // base^{j-|n|} shared by +-n
  std::vector<cplx> bpow(j + 1);
  bpow[0] = 1.0;
  for (int k = 1; k <= j; ++k) bpow[k] = bpow[k - 1] * base;

  cplx sum = phi[0] * bpow[j];
  cplx pu{1.0, 0.0}, pd{1.0, 0.0}, ep{1.0, 0.0}, em{1.0, 0.0};
  for (int n = 1; n <= j; ++n) {
    pu *= up;
    pd *= dn;
    ep *= eps;
    em /= eps;
    sum += bpow[j - n] * (phi[n] * ep * pu + phi[-n] * em * pd);
  }
  if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
    throw OverflowError("psi_eval: non-finite value");
  }
  return sum;
}

cplx psi_eval(const ComplexQ& q, int j, int s, const TopParams& p, const EulerAngles& g) {
  return psi_eval(phi_state(j, s, p).state, q, g);
}

cplx kernel_eval(const ComplexQ& q, const ComplexQ& qp, int j, const EulerAngles& g) {
  if (j < 0) throw DomainError("kernel_eval: j < 0");
  const cplx a = g.phi + q.value();
  const cplx b = std::conj(qp.value()) - g.psi;
  const cplx ca = std::cos(a), cb = std::cos(b);
  const double ct = std::cos(g.theta), st = std::sin(g.theta);
  const cplx brace = (ca * cb + 1.0) * ct + kI * (ca + cb) * st + std::sin(a) * std::sin(b);
  return (2.0 * j + 1.0) / const_C(j) * cpow_int(brace, j);
}

cplx kernel_from_wigner(const ComplexQ& q, const ComplexQ& qp, int j, const EulerAngles& g) {
  const Eigen::MatrixXcd D = wigner_D_matrix(j, g);
  const cplx qv = q.value(), qb = std::conj(qp.value());
  cplx sum{};
  for (int m = -j; m <= j; ++m) {
    for (int n = -j; n <= j; ++n) {
      sum += std::sqrt(weight_B(n, j) * weight_B(m, j)) *
             std::exp(-kI * static_cast<double>(n) * qb + kI * static_cast<double>(m) * qv) *
             ipow(n - m) * D(m + j, n + j);
    }
  }
  return sum;
}

FourierState TMatrix::apply(const FourierState& u) const {
  if (u.j() != j) throw DimensionError("TMatrix::apply: j mismatch");
  return FourierState(j, t * u.coeffs());
}

TMatrix t_matrix(int j, const EulerAngles& g) {
  TMatrix r;
  r.j = j;
  r.t = wigner_D_matrix(j, g);
  for (int m = -j; m <= j; ++m) {
    for (int n = -j; n <= j; ++n) {
      r.t(m + j, n + j) *= std::sqrt(weight_B(m, j) / weight_B(n, j)) * ipow(n - m);
    }
  }
  return r;
}

cplx t_gram_element(const TMatrix& t, int m, int n) {
  return inner_product(FourierState::basis(t.j, m), t.apply(FourierState::basis(t.j, n)));
}

cplx psi_via_kernel(const FourierState& phi, const ComplexQ& q, const EulerAngles& g) {
  return evaluate_state(t_matrix(phi.j(), g).apply(phi), q);
}

cplx psi_via_kernel(const ComplexQ& q, int j, int s, const TopParams& p, const EulerAngles& g) {
  return psi_via_kernel(phi_state(j, s, p).state, q, g);
}

Eigen::MatrixXcd wigner_from_kernel_quadrature(int j, const EulerAngles& g, int n_beta, double tail_tolerance) {
  if (j < 0) throw DomainError("wigner_from_kernel_quadrature: j < 0");
  const int n_alpha = 2 * j + 2;
  const int dim = 2 * j + 1;
  const double beta_max = measure_beta_max(j, tail_tolerance);
  const GaussRule gl = gauss_legendre(n_beta, -beta_max, beta_max);
  const double w_alpha = 2.0 * std::numbers::pi / n_alpha;

  std::vector<ComplexQ> nodes;
  std::vector<double> weights;
  for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
    const double w = gl.weights[k] * measure_density(j, gl.nodes[k]) * w_alpha;
    for (int i = 0; i < n_alpha; ++i) {
      nodes.push_back({w_alpha * i, gl.nodes[k]});
      weights.push_back(w);
    }
  }
  const std::size_t N = nodes.size();

  // psi_n at every node
  Eigen::MatrixXcd psi(N, dim);
  for (std::size_t k = 0; k < N; ++k) {
    for (int n = -j; n <= j; ++n) {
      psi(k, n + j) = std::exp(kI * static_cast<double>(n) * nodes[k].value());
    }
  }
  Eigen::MatrixXcd K(N, N);
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) K(a, b) = kernel_eval(nodes[a], nodes[b], j, g);
  }
  Eigen::VectorXd w = Eigen::Map<Eigen::VectorXd>(weights.data(), N);
  // sum_{ab} w_a w_b conj(psi_m(q_a)) K_ab psi_n(q_b)
  Eigen::MatrixXcd I = psi.adjoint() * w.asDiagonal() * K * w.asDiagonal() * psi;
  for (int m = -j; m <= j; ++m) {
    for (int n = -j; n <= j; ++n) {
      I(m + j, n + j) *= std::sqrt(weight_B(n, j) * weight_B(m, j)) * ipow(m - n);
    }
  }
  return I;
}

cplx JmsState::evaluate(const EulerAngles& g) const {
  const Eigen::MatrixXcd D = wigner_D_matrix(j, g);
  cplx sum{};
  for (int n = -j; n <= j; ++n) sum += coeffs(n + j) * D(m + j, n + j);
  return sum;
}

JmsState state_jms(int j, int m, int s, const TopParams& p) {
  if (j < 0 || std::abs(m) > j) throw DomainError("state_jms: need |m| <= j");
  const PhiState ph = phi_state(j, s, p);
  JmsState r;
  r.j = j;
  r.m = m;
  r.s = s;
  r.E = ph.E;
  r.near_degenerate = ph.near_degenerate;
  r.coeffs.resize(2 * j + 1);
  // The q-integral leaves sqrt(B_m) (psi_m, psi_m) sqrt(B_m) = 1; the q'-integral
  // leaves (psi_n, Phi) = c_n / B_n, times sqrt(B_n) from the expansion.
  for (int n = -j; n <= j; ++n) {
    const double Bn = weight_B(n, j);
    const double Bm = weight_B(m, j);
    const cplx q_int = std::sqrt(Bm) * inner_product(FourierState::basis(j, m), FourierState::basis(j, m)) * std::sqrt(Bm);
    const cplx qp_int = inner_product(FourierState::basis(j, n), ph.state);
    r.coeffs(n + j) = q_int * std::sqrt(Bn) * qp_int * ipow(n - m);
  }
  return r;
}

double PdeResidual::symmetry_norm() const {
  return std::sqrt(symmetry[0] * symmetry[0] + symmetry[1] * symmetry[1] +
                   symmetry[2] * symmetry[2]);
}

PdeResidual pde_residual(const ComplexQ& q, int j, int s, const TopParams& p,
                         const EulerAngles& g, double h, double pole_guard) {
  if (!(h > 0.0)) throw DomainError("pde_residual: h must be positive");
  const PhiState ph = phi_state(j, s, p);
  const FieldOptions opt{h, pole_guard};
  if (g.theta < pole_guard + 2 * h || g.theta > std::numbers::pi - pole_guard - 2 * h) {
    throw DomainError("pde_residual: theta too close to a pole");
  }

  const GroupFunction psi = [&](const EulerAngles& x) { return psi_eval(ph.state, q, x); };
  const cplx value = psi(g);

  PdeResidual r;
  const std::array<double, 3> coef{p.A, p.B, p.C};
  cplx hpsi{};
  for (int a = 1; a <= 3; ++a) {
    const GroupFunction xi = invariant_field(FieldSide::LeftInvariant, a, psi, opt);
    hpsi -= coef[a - 1] * invariant_field_apply(FieldSide::LeftInvariant, a, xi, g, opt);
  }
  r.schrodinger = std::abs(hpsi - ph.E * value);

  // d/dq along alpha
  const auto at_q = [&](double da) {
    return psi_eval(ph.state, ComplexQ{q.alpha + da, q.beta}, g);
  };
  const cplx dq = (at_q(h) - at_q(-h)) / (2.0 * h);
  const cplx qv = q.value();
  const double jj = j;
  // ell_1 = i j cos q - i sin q d/dq, ell_2 = -i j sin q - i cos q d/dq, ell_3 = d/dq
  const std::array<cplx, 3> ell{
      kI * jj * std::cos(qv) * value - kI * std::sin(qv) * dq,
      -kI * jj * std::sin(qv) * value - kI * std::cos(qv) * dq,
      dq};
  for (int a = 1; a <= 3; ++a) {
    const cplx eta = invariant_field_apply(FieldSide::RightInvariant, a, psi, g, opt);
    r.symmetry[a - 1] = std::abs(eta + ell[a - 1]);
  }
  return r;
}

double so3_norm(const ComplexQ& q, int j, int s, const TopParams& p, const HaarRule& rule) {
  if (rule.degree < j) throw DomainError("so3_norm: rule degree below j");
  const PhiState ph = phi_state(j, s, p);
  double sum = 0.0;
  for (const auto& node : rule.nodes) sum += node.weight * std::norm(psi_eval(ph.state, q, node.g));
  return sum;
}

KernelGramResult kernel_gram(int j, int jt, const HaarRule& rule, const ComplexQ& q,
                             const ComplexQ& qp, const ComplexQ& qt, const ComplexQ& qtp) {
  if (rule.degree < std::max(j, jt)) throw DomainError("kernel_gram: rule degree too low");
  KernelGramResult r;
  for (const auto& node : rule.nodes) {
    r.computed += node.weight * std::conj(kernel_eval(q, qp, j, node.g)) *
                  kernel_eval(qt, qtp, jt, node.g);
  }
  r.expected = j == jt ? delta_j(qt, q, j) * delta_j(qp, qtp, j) / (2.0 * j + 1.0) : cplx{};
  r.defect = std::abs(r.computed - r.expected);
  return r;
}

double completeness_defect(int j, const TopParams& p, const ComplexQ& q) {
  double sum = 0.0;
  for (const auto& ph : phi_states(j, p)) sum += std::norm(evaluate_state(ph.state, q));
  return std::abs(sum / (2.0 * j + 1.0) - delta_j(q, q, j));
}

double uncertainty(const ComplexQ& q, int j) {
  if (j < 0) throw DomainError("uncertainty: j < 0");
  return j * (j + 1.0) * delta_j(q, q, j).real();
}

}  // namespace asymtop
