#include "asymtop/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "asymtop/errors.hpp"

namespace asymtop {

namespace {

constexpr cplx kI{0.0, 1.0};

RepMatrix zero_rep(int j) { return {j, Eigen::MatrixXcd::Zero(2 * j + 1, 2 * j + 1)}; }

void check_j(int j) {
  if (j < 0) throw DomainError("angular momentum j must be non-negative");
}

double level_scale(int j, const TopParams& p) { return p.A * std::max(1, j * (j + 1)); }

std::vector<EnergyLevel> to_levels(int j, const Eigen::VectorXd& E, Route route) {
  std::vector<EnergyLevel> out;
  out.reserve(E.size());
  for (Eigen::Index k = 0; k < E.size(); ++k) {
    out.push_back({j, static_cast<int>(k) - j, E(k), std::nullopt, route});
  }
  return out;
}

}  // namespace

void TopParams::validate() const {
  if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C)) {
    throw ParamsError("rotational constants must be finite");
  }
  if (!(C > 0.0)) throw ParamsError("rotational constants must be positive");
  if (!(A >= B && B >= C)) throw ParamsError("rotational constants must satisfy A >= B >= C");
}

bool TopParams::strictly_asymmetric() const {
  return (A - B) > 1e-9 * A && (B - C) > 1e-9 * A;
}

std::string to_string(Route r) {
  switch (r) {
    case Route::Wigner:
      return "wigner";
    case Route::Lambda:
      return "lambda";
    case Route::Lame:
      return "lame";
  }
  return "?";
}

std::optional<Route> parse_route(const std::string& s) {
  if (s == "wigner") return Route::Wigner;
  if (s == "lambda") return Route::Lambda;
  if (s == "lame") return Route::Lame;
  return std::nullopt;
}

std::array<RepMatrix, 3> angular_momentum_matrices(int j) {
  check_j(j);
  RepMatrix raise = zero_rep(j);
  for (int n = -j; n < j; ++n) {
    raise(n + 1, n) = std::sqrt(static_cast<double>(j * (j + 1) - n * (n + 1)));
  }
  const Eigen::MatrixXcd lower = raise.m.adjoint();
  std::array<RepMatrix, 3> J{zero_rep(j), zero_rep(j), zero_rep(j)};
  J[0].m = 0.5 * (raise.m + lower);
  J[1].m = (raise.m - lower) / (2.0 * kI);
  for (int n = -j; n <= j; ++n) J[2](n, n) = static_cast<double>(n);
  return J;
}

std::array<RepMatrix, 3> body_frame_matrices(int j) {
  auto J = angular_momentum_matrices(j);
  return {RepMatrix{j, -J[1].m}, RepMatrix{j, -J[0].m}, J[2]};
}

RepMatrix h_matrix_wigner(int j, const TopParams& p) {
  const auto K = body_frame_matrices(j);
  RepMatrix h = zero_rep(j);
  h.m = p.A * K[0].m * K[0].m + p.B * K[1].m * K[1].m + p.C * K[2].m * K[2].m;
  return h;
}

RepMatrix h_matrix_lambda(int j, const TopParams& p) {
  RepMatrix h = zero_rep(j);
  const double w[3] = {p.A, p.B, p.C};
  for (int a = 1; a <= 3; ++a) {
    const Eigen::MatrixXcd f = -kI * ell_matrix(a, j).m;
    h.m += w[a - 1] * f * f;
  }
  return h;
}

RepMatrix h_matrix_lambda_ode(int j, const TopParams& p) {
  check_j(j);
  const double A = p.A, B = p.B, C = p.C;
  const double jj = j;
  // Fourier components (k = -2, 0, +2) of the three ODE coefficients:
  //   a2 = A sin^2 + B cos^2 - C
  //   a1 = (1 - 2j)(A - B) sin cos
  //   a0 = j^2 (A cos^2 + B sin^2) + j (A sin^2 + B cos^2)
  const cplx a2[3] = {(B - A) / 4.0, (A + B) / 2.0 - C, (B - A) / 4.0};
  const cplx s2 = (1.0 - 2.0 * jj) * (A - B) / (4.0 * kI);
  const cplx a1[3] = {-s2, 0.0, s2};
  const double side0 = (A - B) * (jj * jj - jj) / 4.0;
  const cplx a0[3] = {side0, (jj * jj + jj) * (A + B) / 2.0, side0};

  RepMatrix h = zero_rep(j);
  const double tol = 1e-12 * level_scale(j, p);
  for (int n = -j; n <= j; ++n) {
    const cplx d2 = -static_cast<double>(n * n);
    const cplx d1 = kI * static_cast<double>(n);
    for (int t = 0; t < 3; ++t) {
      const int row = n + 2 * (t - 1);
      const cplx v = a2[t] * d2 + a1[t] * d1 + a0[t];
      if (row < -j || row > j) {
        if (std::abs(v) > tol) throw DomainError("reduced ODE leaks out of F^j");
        continue;
      }
      h(row, n) += v;
    }
  }
  return h;
}

Eigen::MatrixXcd lambda_symmetrized(int j, const TopParams& p) {
  const Eigen::VectorXd g = gram_diagonal(j);
  const Eigen::VectorXd gs = g.cwiseSqrt();
  const Eigen::MatrixXcd M = h_matrix_lambda(j, p).m;
  Eigen::MatrixXcd S = gs.asDiagonal() * M * gs.cwiseInverse().asDiagonal();
  // Remove the rounding-level anti-Hermitian part.
  return 0.5 * (S + S.adjoint());
}

std::vector<EnergyLevel> spectrum(int j, const TopParams& p, Route route) {
  check_j(j);
  p.validate();
  switch (route) {
    case Route::Wigner: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h_matrix_wigner(j, p).m,
                                                         Eigen::EigenvaluesOnly);
      return to_levels(j, es.eigenvalues(), route);
    }
    case Route::Lambda: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(lambda_symmetrized(j, p),
                                                         Eigen::EigenvaluesOnly);
      return to_levels(j, es.eigenvalues(), route);
    }
    case Route::Lame:
      return lame_spectrum(j, p);
  }
  return {};
}

void fix_phase(FourierState& u) {
  const int j = u.j();
  Eigen::VectorXcd& c = u.coeffs();
  Eigen::Index imax = 0;
  c.cwiseAbs().maxCoeff(&imax);
  const cplx lead = c(imax);
  if (std::abs(lead) == 0.0) return;
  // Real on the real axis means c_{-n} = conj(c_n).
  const cplx mirror = std::conj(c(2 * j - imax));
  cplx rot;
  if (std::abs(mirror) > 1e-8 * std::abs(lead)) {
    rot = std::sqrt(mirror / lead);
    rot /= std::abs(rot);
  } else {
    rot = std::conj(lead) / std::abs(lead);
  }
  c *= rot;

  // Real Fourier coefficients in the order a_0, a_1, b_1, a_2, b_2, ...
  std::vector<double> real_coeffs;
  real_coeffs.push_back(c(j).real());
  for (int n = 1; n <= j; ++n) {
    real_coeffs.push_back(2.0 * c(j + n).real());
    real_coeffs.push_back(-2.0 * c(j + n).imag());
  }
  double biggest = 0.0;
  for (double v : real_coeffs) biggest = std::max(biggest, std::abs(v));
  for (double v : real_coeffs) {
    if (std::abs(v) >= (1.0 - 1e-9) * biggest) {
      if (v < 0.0) c = -c;
      break;
    }
  }
}

std::vector<PhiState> phi_states(int j, const TopParams& p) {
  check_j(j);
  p.validate();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(lambda_symmetrized(j, p));
  const Eigen::VectorXd E = es.eigenvalues();
  Eigen::VectorXd sqrtB(2 * j + 1);
  for (int n = -j; n <= j; ++n) sqrtB(n + j) = std::sqrt(weight_B(n, j));
  const double norm = std::sqrt(2.0 * j + 1.0);
  const double degenerate_gap = 1e-9 * level_scale(j, p);

  std::vector<PhiState> out;
  out.reserve(2 * j + 1);
  for (int k = 0; k < 2 * j + 1; ++k) {
    Eigen::VectorXcd c = norm * sqrtB.asDiagonal() * es.eigenvectors().col(k);
    FourierState st(j, c);
    fix_phase(st);
    bool close = false;
    if (k > 0 && E(k) - E(k - 1) < degenerate_gap) close = true;
    if (k + 1 < 2 * j + 1 && E(k + 1) - E(k) < degenerate_gap) close = true;
    out.push_back({std::move(st), E(k), k - j, close});
  }
  return out;
}

PhiState phi_state(int j, int s, const TopParams& p) {
  if (std::abs(s) > j) throw DomainError("phi_state: |s| > j");
  return phi_states(j, p)[s + j];
}

cplx rho_map(const ComplexQ& q, const TopParams& p) {
  const cplx den = p.A + p.B - 2.0 * p.C - (p.A - p.B) * std::cos(2.0 * q.value());
  if (std::abs(den) < 1e-14 * p.A) throw PoleError("rho_map: denominator vanishes");
  return 2.0 * (p.A - p.C) * (p.B - p.C) / den + p.C;
}

double reduced_ode_residual(const FourierState& phi, double E, const TopParams& p,
                            const ComplexQ& q) {
  const double j = phi.j();
  const cplx z = q.value();
  const cplx s = std::sin(z), c = std::cos(z);
  const cplx a2 = p.A * s * s + p.B * c * c - p.C;
  const cplx a1 = (1.0 - 2.0 * j) * (p.A - p.B) * s * c;
  const cplx a0 = j * j * (p.A * c * c + p.B * s * s) + j * (p.A * s * s + p.B * c * c);
  const cplx f0 = evaluate_state(phi, q);
  const cplx f1 = evaluate_state_derivative(phi, q, 1);
  const cplx f2 = evaluate_state_derivative(phi, q, 2);
  const cplx r = a2 * f2 + a1 * f1 + (a0 - E) * f0;
  const double scale =
      std::abs(a2 * f2) + std::abs(a1 * f1) + std::abs(a0 * f0) + std::abs(E * f0);
  return scale > 0.0 ? std::abs(r) / scale : std::abs(r);
}

}  // namespace asymtop
