#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "asymtop/errors.hpp"
#include "asymtop/spectra.hpp"
#include "support.hpp"

using namespace asymtop;
using testing_support::kPi;
using testing_support::Rng;

namespace {

std::vector<double> energies(const std::vector<EnergyLevel>& v) {
  std::vector<double> e;
  for (const auto& l : v) e.push_back(l.E);
  return e;
}

// closed-form j = 2 levels of an asymmetric rotor
std::vector<double> j2_levels(const TopParams& p) {
  const double A = p.A, B = p.B, C = p.C;
  const double r = std::sqrt((A - B) * (A - B) + (A - C) * (B - C));
  std::vector<double> e{4 * A + B + C, A + 4 * B + C, A + B + 4 * C, 2 * (A + B + C) + 2 * r,
                        2 * (A + B + C) - 2 * r};
  std::sort(e.begin(), e.end());
  return e;
}

const Route kRoutes[] = {Route::Wigner, Route::Lambda, Route::Lame};

}  // namespace

TEST(Spectra, ParamsValidation) {
  EXPECT_THROW((TopParams{1, 2, 0.5}.validate()), ParamsError);
  EXPECT_THROW((TopParams{3, 2, 0}.validate()), ParamsError);
  EXPECT_THROW((TopParams{3, 2, std::nan("")}.validate()), ParamsError);
  EXPECT_NO_THROW((TopParams{2, 2, 2}.validate()));
  EXPECT_TRUE((TopParams{3, 2, 1}.strictly_asymmetric()));
  EXPECT_FALSE((TopParams{2, 2, 1}.strictly_asymmetric()));
}

TEST(Spectra, RouteNames) {
  for (Route r : kRoutes) EXPECT_EQ(parse_route(to_string(r)), r);
  EXPECT_FALSE(parse_route("bogus").has_value());
}

TEST(Spectra, SpinMatricesAlgebra) {
  for (int j = 0; j <= 6; ++j) {
    const auto J = angular_momentum_matrices(j);
    const cplx i{0, 1};
    EXPECT_LT((J[0].m * J[1].m - J[1].m * J[0].m - i * J[2].m).cwiseAbs().maxCoeff(), 1e-12);
    const auto K = body_frame_matrices(j);
    EXPECT_LT((K[0].m * K[1].m - K[1].m * K[0].m + i * K[2].m).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Spectra, LowestLevels) {
  Rng rng(21);
  for (int k = 0; k < 20; ++k) {
    const TopParams p = rng.strict_params();
    for (Route r : kRoutes) {
      EXPECT_NEAR(spectrum(0, p, r).at(0).E, 0.0, 1e-10);
      const auto e = energies(spectrum(1, p, r));
      ASSERT_EQ(e.size(), 3u);
      EXPECT_NEAR(e[0], p.B + p.C, 1e-10);
      EXPECT_NEAR(e[1], p.A + p.C, 1e-10);
      EXPECT_NEAR(e[2], p.A + p.B, 1e-10);
      const auto e2 = energies(spectrum(2, p, r));
      const auto want = j2_levels(p);
      for (int s = 0; s < 5; ++s) EXPECT_NEAR(e2[s], want[s], 1e-9 * p.A);
    }
  }
}

TEST(Spectra, WorkedExample) {
  const TopParams p{3, 2, 1};
  const auto e = energies(spectrum(2, p, Route::Lame));
  const double r3 = std::sqrt(3.0);
  const std::vector<double> want{12 - 2 * r3, 9, 12, 15, 12 + 2 * r3};
  auto sorted = want;
  std::sort(sorted.begin(), sorted.end());
  for (int s = 0; s < 5; ++s) EXPECT_NEAR(e[s], sorted[s], 1e-10);
}

TEST(Spectra, SymmetricTopMatrixRoutes) {
  const TopParams prolate{2.0, 2.0, 0.5};
  for (int j = 0; j <= 6; ++j) {
    std::vector<double> want;
    for (int k = -j; k <= j; ++k) want.push_back(prolate.A * j * (j + 1) + (prolate.C - prolate.A) * k * k);
    std::sort(want.begin(), want.end());
    for (Route r : {Route::Wigner, Route::Lambda}) {
      const auto e = energies(spectrum(j, prolate, r));
      for (int s = 0; s < 2 * j + 1; ++s) EXPECT_NEAR(e[s], want[s], 1e-10 * (1 + want[s]));
    }
  }
  EXPECT_THROW(spectrum(2, prolate, Route::Lame), DegenerateParamsError);
}

TEST(Spectra, RoutesAgreeAndTrace) {
  Rng rng(22);
  for (int k = 0; k < 5; ++k) {
    const TopParams p = rng.strict_params();
    for (int j = 0; j <= 10; ++j) {
      const auto ew = energies(spectrum(j, p, Route::Wigner));
      const auto el = energies(spectrum(j, p, Route::Lambda));
      const auto ea = energies(spectrum(j, p, Route::Lame));
      ASSERT_EQ(ew.size(), static_cast<std::size_t>(2 * j + 1));
      ASSERT_EQ(ea.size(), ew.size());
      double sum = 0;
      for (std::size_t s = 0; s < ew.size(); ++s) {
        const double sc = std::max(std::abs(ew[s]), p.A);
        EXPECT_LT(std::abs(ew[s] - el[s]) / sc, 1e-8);
        EXPECT_LT(std::abs(ew[s] - ea[s]) / sc, 1e-8);
        sum += ew[s];
      }
      const double tr = (p.A + p.B + p.C) * j * (j + 1.0) * (2 * j + 1.0) / 3.0;
      EXPECT_LT(std::abs(sum - tr), 1e-10 * std::max(tr, 1.0));
      EXPECT_NEAR(h_matrix_wigner(j, p).m.trace().real(), tr, 1e-10 * std::max(tr, 1.0));
    }
  }
}

TEST(Spectra, LambdaMatrixFromOde) {
  Rng rng(23);
  const TopParams p = rng.strict_params();
  for (int j = 0; j <= 8; ++j) {
    const auto a = h_matrix_lambda(j, p).m, b = h_matrix_lambda_ode(j, p).m;
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-10 * p.A * (j + 1) * (j + 1));
  }
}

TEST(Spectra, GramHermiticity) {
  const TopParams p{4.1, 2.3, 0.7};
  for (int j = 0; j <= 10; ++j) {
    const Eigen::MatrixXcd M = h_matrix_lambda(j, p).m;
    const Eigen::MatrixXcd G = gram_diagonal(j).cast<cplx>().asDiagonal();
    EXPECT_LE((M.adjoint() * G - G * M).cwiseAbs().maxCoeff(), 1e-12 * (G * M).cwiseAbs().maxCoeff());
    const Eigen::MatrixXcd S = lambda_symmetrized(j, p);
    EXPECT_LE((S - S.adjoint()).cwiseAbs().maxCoeff(), 1e-12 * p.A * (j + 1) * (j + 1));
  }
}

TEST(Lame, ClassSizes) {
  for (int j = 0; j <= 8; ++j) {
    std::array<int, 4> n{};
    for (int c = 1; c <= 4; ++c) n[c - 1] = lame_class_shape(c, j).size;
    if (j % 2 == 0) {
      EXPECT_EQ(n[0], j / 2 + 1);
      for (int c = 1; c < 4; ++c) EXPECT_EQ(n[c], j / 2);
    } else {
      for (int c = 0; c < 3; ++c) EXPECT_EQ(n[c], (j + 1) / 2);
      EXPECT_EQ(n[3], (j - 1) / 2);
    }
    const TopParams p{3.3, 2.1, 0.4};
    int counted[4] = {0, 0, 0, 0};
    for (const auto& l : lame_spectrum(j, p)) counted[*l.lame_class - 1]++;
    for (int c = 0; c < 4; ++c) EXPECT_EQ(counted[c], n[c]);
  }
}

TEST(Lame, SpinOneClasses) {
  const TopParams p{3, 2, 1};
  EXPECT_NEAR(lame_class_roots(1, 1, p).at(0), p.A + p.C, 1e-12);
  EXPECT_NEAR(lame_class_roots(2, 1, p).at(0), p.B + p.C, 1e-12);
  EXPECT_NEAR(lame_class_roots(3, 1, p).at(0), p.A + p.B, 1e-12);
  EXPECT_TRUE(lame_class_roots(4, 1, p).empty());
}

TEST(Lame, SeriesSatisfyOde) {
  Rng rng(24);
  for (int k = 0; k < 3; ++k) {
    const TopParams p = rng.strict_params();
    for (int j = 0; j <= 8; ++j) {
      for (const auto& l : lame_spectrum(j, p)) {
        const LameSeries s = lame_polynomial(*l.lame_class, j, l.E, p);
        EXPECT_LT(s.termination, 1e-8);
        for (int t = 0; t < 5; ++t) {
          const cplx rho{rng.uni(p.C - 1, p.A + 1), rng.uni(-1, 1)};
          EXPECT_LT(lame_residual(s, j, p, rho), 1e-8) << j;
        }
      }
    }
  }
}

TEST(Lame, RejectsNonRoot) {
  const TopParams p{3, 2, 1};
  EXPECT_THROW(lame_polynomial(1, 2, 10.0, p), NotTerminatingError);
}

TEST(Lame, RefusesDegenerate) {
  EXPECT_THROW(lame_spectrum(2, TopParams{2, 1, 1}), DegenerateParamsError);
}

TEST(Eigenstates, SpinOneFunctions) {
  const TopParams p{3, 2, 1};
  const auto st = phi_states(1, p);
  const double r3 = std::sqrt(3.0);
  for (double a : {0.1, 0.9, 2.3}) {
    const ComplexQ q{a, 0.3};
    const cplx z = q.value();
    EXPECT_LT(std::abs(evaluate_state(st[0].state, q) - r3 * std::sin(z)), 1e-12);  // B + C
    EXPECT_LT(std::abs(evaluate_state(st[1].state, q) - r3 * std::cos(z)), 1e-12);  // A + C
    EXPECT_LT(std::abs(evaluate_state(st[2].state, q) - r3), 1e-12);                // A + B
  }
}

TEST(Eigenstates, OrthonormalAndOdeResidual) {
  Rng rng(25);
  const TopParams p = rng.strict_params();
  for (int j = 0; j <= 6; ++j) {
    const auto st = phi_states(j, p);
    for (std::size_t a = 0; a < st.size(); ++a) {
      for (std::size_t b = 0; b < st.size(); ++b) {
        const cplx ip = inner_product(st[a].state, st[b].state);
        EXPECT_LT(std::abs(ip - (a == b ? 2.0 * j + 1 : 0.0)), 1e-10 * (2 * j + 1));
      }
      for (int t = 0; t < 20; ++t) {
        EXPECT_LT(reduced_ode_residual(st[a].state, st[a].E, p, {rng.uni(0, 2 * kPi), 0.0}), 1e-8);
      }
    }
  }
}

TEST(Eigenstates, RealOnRealAxis) {
  const TopParams p{5, 3, 1};
  for (int j = 0; j <= 5; ++j)
    for (const auto& st : phi_states(j, p))
      for (double a : {0.2, 1.7, 4.0}) EXPECT_LT(std::abs(evaluate_state(st.state, {a, 0}).imag()), 1e-12);
}

TEST(Eigenstates, LameFunctionsMatchMatrixRoute) {
  Rng rng(26);
  const TopParams p = rng.strict_params();
  for (int j = 0; j <= 6; ++j) {
    const auto st = phi_states(j, p);
    const auto lv = lame_spectrum(j, p);
    for (std::size_t k = 0; k < lv.size(); ++k) {
      const FourierState f = phi_from_lame(lame_polynomial(*lv[k].lame_class, j, lv[k].E, p), j, p);
      EXPECT_LT((f.coeffs() - st[k].state.coeffs()).cwiseAbs().maxCoeff(), 1e-8) << j << " " << k;
    }
  }
}

TEST(Eigenstates, DegeneracyFlag) {
  const TopParams p{2, 2, 1};
  bool flagged = false;
  for (const auto& st : phi_states(1, p)) flagged = flagged || st.near_degenerate;
  EXPECT_TRUE(flagged);
  EXPECT_THROW(phi_state(1, 2, p), DomainError);
}

TEST(Eigenstates, RhoMapPole) {
  const TopParams p{3, 2, 1};
  // cos 2q = (A+B-2C)/(A-B) = 3 at q = i acosh(3)/2
  EXPECT_THROW(rho_map({0.0, std::acosh(3.0) / 2}, p), PoleError);
  EXPECT_NEAR(rho_map({0.0, 0.0}, p).real(), p.A, 1e-12);
  EXPECT_NEAR(rho_map({kPi / 2, 0.0}, p).real(), p.B, 1e-12);
}
