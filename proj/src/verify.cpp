#include "asymtop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "asymtop/errors.hpp"
#include "asymtop/wavefunctions.hpp"
#include "asymtop/wigner.hpp"

namespace asymtop {

namespace {

constexpr double kPi = std::numbers::pi;

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  EulerAngles angles(double guard = 0.0) {
    return {uniform(0.0, 2 * kPi), uniform(guard, kPi - guard), uniform(0.0, 2 * kPi)};
  }
  ComplexQ q(double beta = 1.0) { return {uniform(0.0, 2 * kPi), uniform(-beta, beta)}; }
};

double tol_of(const VerifyConfig& cfg, const std::string& name) {
  auto it = cfg.tolerances.find(name);
  if (it == cfg.tolerances.end()) throw ParamsError("unknown tolerance " + name);
  return it->second;
}

CheckResult make(const VerifyConfig& cfg, const std::string& name, double defect,
                 std::string detail = {}) {
  CheckResult r;
  r.name = name;
  r.tolerance = tol_of(cfg, name);
  r.defect = defect;
  r.pass = std::isfinite(defect) && defect <= r.tolerance;
  r.detail = std::move(detail);
  return r;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

int levi_civita(int a, int b, int c) {
  return (a - b) * (b - c) * (c - a) / 2;
}

}  // namespace

std::map<std::string, double> default_tolerances() {
  return {
      {"route_agreement", 1e-8},  {"sum_rule", 1e-10},      {"casimir", 1e-10},
      {"commutators", 1e-10},     {"gram_hermiticity", 1e-12}, {"wigner_orthogonality", 1e-10},
      {"kernel_group", 1e-10},    {"kernel_initial", 1e-12}, {"wigner_bridge", 1e-10},
      {"wave_routes", 1e-9},      {"pde_ratio", 0.8},        {"completeness", 1e-8},
      {"measure", 1e-6},          {"uncertainty", 1e-12},
  };
}

double route_disagreement(int j, const TopParams& p, const std::vector<Route>& routes) {
  std::vector<std::vector<EnergyLevel>> all;
  for (Route r : routes) {
    if (r == Route::Lame && !p.strictly_asymmetric()) continue;
    all.push_back(spectrum(j, p, r));
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      for (std::size_t k = 0; k < all[a].size(); ++k) {
        const double Ea = all[a][k].E, Eb = all[b][k].E;
        worst = std::max(worst, std::abs(Ea - Eb) / std::max({std::abs(Ea), std::abs(Eb), p.A}));
      }
    }
  }
  return worst;
}

std::vector<CheckResult> run_checks(const VerifyConfig& cfg) {
  cfg.params.validate();
  if (cfg.jmax < 0) throw ParamsError("jmax must be >= 0");
  for (const auto& [k, v] : cfg.tolerances) {
    if (!(v > 0.0)) throw ParamsError("tolerance " + k + " must be positive");
  }
  const TopParams& p = cfg.params;
  const int jmax = cfg.jmax;
  Sampler rnd(cfg.seed);
  std::vector<CheckResult> out;

  {  // spectra
    double dis = 0.0, trace = 0.0;
    for (int j = 0; j <= jmax; ++j) {
      dis = std::max(dis, route_disagreement(j, p, cfg.routes));
      const double expect = (p.A + p.B + p.C) * j * (j + 1.0) * (2.0 * j + 1.0) / 3.0;
      double sum = 0.0;
      for (const auto& lv : spectrum(j, p, Route::Wigner)) sum += lv.E;
      trace = std::max(trace, std::abs(sum - expect) / std::max(expect, 1.0));
    }
    out.push_back(make(cfg, "route_agreement", dis));
    out.push_back(make(cfg, "sum_rule", trace));
  }

  {  // lambda-irrep algebra
    double cas = 0.0, com = 0.0, gh = 0.0;
    for (int j = 0; j <= jmax; ++j) {
      const int d = 2 * j + 1;
      cas = std::max(cas, max_abs(casimir_matrix(j).m - j * (j + 1.0) * Eigen::MatrixXcd::Identity(d, d)));
      const std::array<RepMatrix, 3> l{ell_matrix(1, j), ell_matrix(2, j), ell_matrix(3, j)};
      const auto K = body_frame_matrices(j);
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          Eigen::MatrixXcd rl = l[a].m * l[b].m - l[b].m * l[a].m;
          Eigen::MatrixXcd rk = K[a].m * K[b].m - K[b].m * K[a].m;
          for (int c = 0; c < 3; ++c) {
            rl -= static_cast<double>(levi_civita(a, b, c)) * l[c].m;
            rk += cplx(0.0, 1.0) * static_cast<double>(levi_civita(a, b, c)) * K[c].m;
          }
          com = std::max({com, max_abs(rl), max_abs(rk)});
        }
      }
      const Eigen::MatrixXcd M = h_matrix_lambda(j, p).m;
      const Eigen::MatrixXcd G = gram_diagonal(j).cast<cplx>().asDiagonal();
      gh = std::max(gh, max_abs(M.adjoint() * G - G * M) / std::max(1.0, max_abs(G * M)));
    }
    out.push_back(make(cfg, "casimir", cas));
    out.push_back(make(cfg, "commutators", com));
    out.push_back(make(cfg, "gram_hermiticity", gh));
  }

  {  // Wigner orthogonality and unitarity
    const int jw = std::min(jmax, 5);
    const HaarRule rule = haar_rule(jw);
    double def = 0.0;
    for (int j = 0; j <= jw; ++j) {
      for (int jt = 0; jt <= jw; ++jt) def = std::max(def, wigner_gram(j, jt, rule).max_defect());
      const Eigen::MatrixXcd D = wigner_D_matrix(j, rnd.angles());
      def = std::max(def, max_abs(D * D.adjoint() - Eigen::MatrixXcd::Identity(2 * j + 1, 2 * j + 1)));
    }
    out.push_back(make(cfg, "wigner_orthogonality", def));
  }

  {  // kernel: group property, conjugation, initial condition, bridge
    const int jk = std::min(jmax, 5);
    double grp = 0.0, init = 0.0, bridge = 0.0;
    for (int j = 0; j <= jk; ++j) {
      const int d = 2 * j + 1;
      const EulerAngles g1 = rnd.angles(), g2 = rnd.angles();
      const TMatrix t1 = t_matrix(j, g1), t2 = t_matrix(j, g2);
      grp = std::max(grp, max_abs(t_matrix(j, compose(g1, g2)).t - t1.t * t2.t));
      const Eigen::MatrixXcd G = gram_diagonal(j).cast<cplx>().asDiagonal();
      grp = std::max(grp, max_abs(t_matrix(j, inverse(g1)).t - G.inverse() * t1.t.adjoint() * G));
      const ComplexQ q = rnd.q(), qp = rnd.q();
      const cplx k1 = std::conj(kernel_eval(q, qp, j, g1));
      const cplx k2 = kernel_eval(qp, q, j, inverse(g1));
      grp = std::max(grp, std::abs(k1 - k2) / std::max(1.0, std::abs(k1)));
      grp = std::max(grp, max_abs(t_matrix(j, EulerAngles::identity()).t - Eigen::MatrixXcd::Identity(d, d)));

      const cplx k0 = kernel_eval(q, qp, j, EulerAngles::identity());
      init = std::max(init, std::abs(k0 - delta_j(q, qp, j)) / std::max(1.0, std::abs(k0)));

      const cplx kw = kernel_from_wigner(q, qp, j, g2);
      const cplx kc = kernel_eval(q, qp, j, g2);
      bridge = std::max(bridge, std::abs(kw - kc) / std::max(1.0, std::abs(kc)));
      const Eigen::MatrixXcd D = wigner_D_matrix(j, g1);
      for (int m = -j; m <= j; ++m) {
        for (int n = -j; n <= j; ++n) {
          const double phase_k = 0.5 * kPi * (m - n);
          const cplx c = std::sqrt(weight_B(n, j) * weight_B(m, j)) * std::polar(1.0, phase_k);
          bridge = std::max(bridge, std::abs(c * t_gram_element(t1, m, n) - D(m + j, n + j)));
        }
      }
    }
    out.push_back(make(cfg, "kernel_group", grp));
    out.push_back(make(cfg, "kernel_initial", init));
    out.push_back(make(cfg, "wigner_bridge", bridge));
  }

  {  // wavefunction routes
    double def = 0.0;
    for (int j = 0; j <= std::min(jmax, 5); ++j) {
      for (const auto& ph : phi_states(j, p)) {
        for (int k = 0; k < 5; ++k) {
          const ComplexQ q = rnd.q();
          const EulerAngles g = rnd.angles();
          const cplx a = psi_eval(ph.state, q, g);
          const cplx b = psi_via_kernel(ph.state, q, g);
          def = std::max(def, std::abs(a - b) / std::max(1.0, std::abs(a)));
        }
      }
    }
    out.push_back(make(cfg, "wave_routes", def));
  }

  {  // PDE residual convergence
    double worst = 0.0;
    std::ostringstream det;
    for (int j = 0; j <= std::min(jmax, 3); ++j) {
      for (int s = -j; s <= j; ++s) {
        const ComplexQ q = rnd.q(0.5);
        const EulerAngles g = rnd.angles(0.4);
        const PdeResidual r1 = pde_residual(q, j, s, p, g, 1e-2);
        const PdeResidual r2 = pde_residual(q, j, s, p, g, 5e-3);
        if (j == 0) {
          worst = std::max({worst, r1.schrodinger, r2.symmetry_norm()});
          continue;
        }
        const double rs = r1.schrodinger / r2.schrodinger;
        const double ry = r1.symmetry_norm() / r2.symmetry_norm();
        worst = std::max({worst, std::abs(rs - 4.0), std::abs(ry - 4.0)});
      }
    }
    det << "|ratio - 4|";
    out.push_back(make(cfg, "pde_ratio", worst, det.str()));
  }

  {  // completeness and |j,m,s> eigenvectors
    double def = 0.0;
    for (int j = 0; j <= std::min(jmax, 6); ++j) {
      const ComplexQ q = rnd.q();
      def = std::max(def, completeness_defect(j, p, q) / std::abs(delta_j(q, q, j)));
      const RepMatrix H = h_matrix_wigner(j, p);
      for (int s = -j; s <= j; ++s) {
        const JmsState st = state_jms(j, std::min(j, 1), s, p);
        def = std::max(def, (H.m * st.coeffs - st.E * st.coeffs).norm() / std::max(1.0, p.A * j * (j + 1)));
      }
    }
    out.push_back(make(cfg, "completeness", def));
  }

  {  // measure calibration
    double def = 0.0;
    for (int j = 0; j <= std::min(jmax, 4); ++j) {
      for (int n = -j; n <= j; ++n) {
        for (int m = -j; m <= j; ++m) {
          const QuadratureResult r = inner_product_quadrature(FourierState::basis(j, n), FourierState::basis(j, m));
          const double expect = n == m ? 1.0 / weight_B(n, j) : 0.0;
          def = std::max(def, std::abs(r.value - expect));
        }
      }
    }
    out.push_back(make(cfg, "measure", def));
  }

  {  // uncertainty: (Delta K)^2 > j, and = 4 at j = 1, real q
    double def = std::abs(uncertainty(ComplexQ{rnd.uniform(0.0, 2 * kPi), 0.0}, 1) - 4.0);
    const int ju = std::max(jmax, 10);
    for (int j = 1; j <= ju; ++j) {
      for (int k = 0; k < 5; ++k) {
        const double u = uncertainty(rnd.q(2.0), j);
        if (!(u > j)) def = std::max(def, j - u + 1.0);
      }
    }
    out.push_back(make(cfg, "uncertainty", def));
  }
  return out;
}

}  // namespace asymtop
