#include <algorithm>
#include <cmath>
#include <numbers>

#include "asymtop/errors.hpp"
#include "asymtop/spectra.hpp"

namespace asymtop {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_strict(const TopParams& p) {
  p.validate();
  if (!p.strictly_asymmetric()) {
    throw DegenerateParamsError("Lamé route needs A > B > C with gaps above 1e-9 A");
  }
}

// A term (rho-A)^alpha (rho-C)^gamma x^nu, x = rho - B, is mapped by the
// Lamé operator to (rho-A)^alpha (rho-C)^gamma x^{nu-1} (U x^2 + (V+E) x + W).
struct TermCoefficients {
  double U, V, W;
};

TermCoefficients term_coefficients(const LameClassShape& sh, int j, const TopParams& p,
                                   double nu) {
  const double J = j;
  const double gapA = p.A - p.B;  // rho - A = x - gapA
  const double gapC = p.C - p.B;  // rho - C = x - gapC
  const double lead = 2.0 * (nu + sh.alpha + sh.gamma);
  return {
      -(J - lead) * (J + lead + 1.0),
      -p.B * J * (J + 1.0) - gapA * std::pow(2.0 * nu + 2.0 * sh.gamma, 2) -
          gapC * std::pow(2.0 * nu + 2.0 * sh.alpha, 2),
      2.0 * gapA * gapC * nu * (2.0 * nu - 1.0),
  };
}

cplx cpow(cplx base, double e) {
  if (e == 0.0) return 1.0;
  return std::pow(base, e);
}

}  // namespace

LameClassShape lame_class_shape(int klass, int j) {
  if (klass < 1 || klass > 4) throw DomainError("Lamé class must be 1..4");
  if (j < 0) throw DomainError("angular momentum j must be non-negative");
  LameClassShape sh;
  sh.klass = klass;
  sh.alpha = (klass == 2 || klass == 4) ? 0.5 : 0.0;
  sh.gamma = (klass == 3 || klass == 4) ? 0.5 : 0.0;
  sh.mu = 0.5 * j - sh.alpha - sh.gamma;
  // The lowest exponent of (rho - B) is 0 or 1/2, the roots of W.
  const double lowest = sh.mu - std::floor(sh.mu);
  sh.size = sh.mu >= lowest ? static_cast<int>(std::lround(sh.mu - lowest)) + 1 : 0;
  return sh;
}

LamePencil lame_recurrence(int klass, int j, const TopParams& p) {
  require_strict(p);
  LamePencil pencil;
  pencil.shape = lame_class_shape(klass, j);
  const int d = pencil.shape.size;
  pencil.M = Eigen::MatrixXd::Zero(d, d);
  for (int r = 0; r < d; ++r) {
    const double mu = pencil.shape.mu;
    pencil.M(r, r) = term_coefficients(pencil.shape, j, p, mu - r).V;
    if (r + 1 < d) pencil.M(r, r + 1) = term_coefficients(pencil.shape, j, p, mu - r - 1).U;
    if (r > 0) pencil.M(r, r - 1) = term_coefficients(pencil.shape, j, p, mu - r + 1).W;
  }
  return pencil;
}

std::vector<double> lame_class_roots(int klass, int j, const TopParams& p) {
  const LamePencil pencil = lame_recurrence(klass, j, p);
  const int d = pencil.shape.size;
  if (d == 0) return {};
  const Eigen::MatrixXd T = -pencil.M;

  bool symmetrizable = true;
  Eigen::VectorXd diag = T.diagonal();
  Eigen::VectorXd off(std::max(d - 1, 0));
  for (int r = 0; r + 1 < d; ++r) {
    const double prod = T(r, r + 1) * T(r + 1, r);
    if (!(prod > 0.0)) {
      symmetrizable = false;
      break;
    }
    off(r) = std::sqrt(prod);
  }

  std::vector<double> roots;
  if (symmetrizable) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    for (Eigen::Index k = 0; k < d; ++k) roots.push_back(es.eigenvalues()(k));
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(T, false);
    for (Eigen::Index k = 0; k < d; ++k) roots.push_back(es.eigenvalues()(k).real());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<EnergyLevel> lame_spectrum(int j, const TopParams& p) {
  require_strict(p);
  std::vector<EnergyLevel> out;
  int total = 0;
  for (int klass = 1; klass <= 4; ++klass) {
    const auto roots = lame_class_roots(klass, j, p);
    total += static_cast<int>(roots.size());
    for (double E : roots) out.push_back({j, 0, E, klass, Route::Lame});
  }
  if (total != 2 * j + 1) throw RootCountError("Lamé classes do not give 2j+1 roots");
  std::sort(out.begin(), out.end(),
            [](const EnergyLevel& a, const EnergyLevel& b) { return a.E < b.E; });
  for (int k = 0; k < total; ++k) out[k].s = k - j;
  return out;
}

LameSeries lame_polynomial(int klass, int j, double E, const TopParams& p, double tol) {
  require_strict(p);
  LameSeries s;
  s.shape = lame_class_shape(klass, j);
  s.E = E;
  const int d = s.shape.size;
  if (d == 0) throw NotTerminatingError("Lamé class has no terminating solutions for this j");
  const double mu = s.shape.mu;
  auto tc = [&](double nu) { return term_coefficients(s.shape, j, p, nu); };

  s.coeffs.assign(d + 1, 0.0);
  s.coeffs[0] = 1.0;
  for (int i = 1; i <= d; ++i) {
    const double prev2 = i >= 2 ? s.coeffs[i - 2] : 0.0;
    const double w = i >= 2 ? tc(mu - i + 2).W : 0.0;
    s.coeffs[i] = -((tc(mu - i + 1).V + E) * s.coeffs[i - 1] + w * prev2) / tc(mu - i).U;
  }
  // Relative residual of the last row of the truncated recurrence.
  const double prev = d >= 2 ? s.coeffs[d - 2] : 0.0;
  const double last_v = tc(mu - d + 1).V;
  const double last_w = d >= 2 ? tc(mu - d + 2).W : 0.0;
  // p.A keeps the scale finite when the row vanishes identically (j = 0)
  const double size = (std::abs(last_v) + std::abs(E) + p.A) * std::abs(s.coeffs[d - 1]) +
                      std::abs(last_w * prev);
  s.termination = std::abs(s.coeffs[d] * tc(mu - d).U) / size;
  s.coeffs.resize(d);
  if (!(s.termination <= tol)) {
    throw NotTerminatingError("Lamé series does not terminate at E = " + std::to_string(E));
  }
  return s;
}

cplx lame_evaluate(const LameSeries& s, const TopParams& p, cplx rho) {
  const cplx x = rho - p.B;
  cplx y{};
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
    y += s.coeffs[k] * cpow(x, s.shape.mu - static_cast<double>(k));
  }
  return cpow(rho - p.A, s.shape.alpha) * cpow(rho - p.C, s.shape.gamma) * y;
}

double lame_residual(const LameSeries& s, int j, const TopParams& p, cplx rho) {
  const cplx x = rho - p.B;
  cplx y{}, y1{}, y2{};
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
    const double nu = s.shape.mu - static_cast<double>(k);
    y += s.coeffs[k] * cpow(x, nu);
    if (nu != 0.0) y1 += s.coeffs[k] * nu * cpow(x, nu - 1.0);
    if (nu != 0.0 && nu != 1.0) y2 += s.coeffs[k] * nu * (nu - 1.0) * cpow(x, nu - 2.0);
  }
  const cplx ra = rho - p.A, rc = rho - p.C;
  const double al = s.shape.alpha, ga = s.shape.gamma;
  const cplx R = cpow(ra, al) * cpow(rc, ga);
  const cplx sl = al / ra + ga / rc;
  const cplx dsl = -al / (ra * ra) - ga / (rc * rc);
  const cplx L0 = R * y;
  const cplx L1 = R * (y1 + sl * y);
  const cplx L2 = R * (y2 + 2.0 * sl * y1 + (sl * sl + dsl) * y);

  const cplx P = ra * x * rc;
  const cplx dP = x * rc + ra * rc + ra * x;
  const double J = j;
  const cplx t2 = 4.0 * P * L2, t1 = 2.0 * dP * L1;
  const cplx t0 = (s.E - J * (J + 1.0) * rho) * L0;
  const double scale = std::abs(t2) + std::abs(t1) + std::abs(t0);
  const double r = std::abs(t2 + t1 + t0);
  return scale > 0.0 ? r / scale : r;
}

FourierState phi_from_lame(const LameSeries& s, int j, const TopParams& p) {
  require_strict(p);
  const double A = p.A, B = p.B, C = p.C;
  // Half powers of rho - A, rho - B, rho - C times sqrt(D), D the rho_map
  // denominator, written as trigonometric functions of q'.
  const double kA = std::sqrt(2.0 * (A - C) * (A - B));
  const double kB = std::sqrt(2.0 * (A - B) * (B - C));
  const double kC = std::sqrt(2.0 * (A - C) * (B - C));
  const int a2 = static_cast<int>(std::lround(2.0 * s.shape.alpha));
  const int g2 = static_cast<int>(std::lround(2.0 * s.shape.gamma));

  auto phi = [&](double q) {
    const double D = A + B - 2.0 * C - (A - B) * std::cos(2.0 * q);
    const cplx fa = kI * kA * std::sin(q);
    const double fb = kB * std::cos(q);
    cplx sum{};
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
      const int xb = static_cast<int>(std::lround(2.0 * (s.shape.mu - static_cast<double>(k))));
      sum += s.coeffs[k] * std::pow(D, static_cast<int>(k)) * std::pow(fb, xb);
    }
    return std::pow(fa, a2) * std::pow(kC, g2) * sum;
  };

  const int N = 2 * j + 1;
  FourierState out(j);
  for (int t = 0; t < N; ++t) {
    const double q = 2.0 * std::numbers::pi * t / N;
    const cplx v = phi(q);
    for (int n = -j; n <= j; ++n) out[n] += v * std::exp(-kI * (n * q)) / static_cast<double>(N);
  }
  const double norm2 = inner_product(out, out).real();
  out.coeffs() *= std::sqrt((2.0 * j + 1.0) / norm2);
  fix_phase(out);
  return out;
}

}  // namespace asymtop
