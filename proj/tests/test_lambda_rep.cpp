#include <gtest/gtest.h>

#include <cmath>

#include "asymtop/errors.hpp"
#include "asymtop/lambda_rep.hpp"
#include "support.hpp"

using namespace asymtop;
using testing_support::kPi;
using testing_support::Rng;

namespace {

const cplx I1{0.0, 1.0};

double binom(int n, int k) { return std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0)); }

// The first-order operators applied directly to exp(i n q).
cplx ell_direct(int axis, int j, int n, cplx q) {
  const cplx f = std::exp(I1 * static_cast<double>(n) * q);
  const cplx df = I1 * static_cast<double>(n) * f;
  switch (axis) {
    case 1: return -I1 * std::sin(q) * df + I1 * static_cast<double>(j) * std::cos(q) * f;
    case 2: return -I1 * std::cos(q) * df - I1 * static_cast<double>(j) * std::sin(q) * f;
    default: return df;
  }
}

}  // namespace

TEST(LambdaRep, WeightsAndConstant) {
  for (int j = 0; j <= 10; ++j) {
    for (int n = -j; n <= j; ++n)
      EXPECT_NEAR(weight_B(n, j), binom(2 * j, j + n) / binom(2 * j, j), 1e-12 * weight_B(n, j));
    EXPECT_NEAR(const_C(j), (2 * j + 1) * binom(2 * j, j) / std::pow(2.0, j), 1e-9 * const_C(j));
  }
  EXPECT_DOUBLE_EQ(weight_B(0, 3), 1.0);
  EXPECT_DOUBLE_EQ(weight_B(3, 3), 1.0 / 20.0);
  EXPECT_DOUBLE_EQ(const_C(1), 3.0);
  EXPECT_THROW(weight_B(4, 3), DomainError);
}

TEST(LambdaRep, MatricesMatchDifferentialOperators) {
  Rng rng(11);
  for (int j = 0; j <= 6; ++j) {
    for (int axis = 1; axis <= 3; ++axis) {
      const RepMatrix L = ell_matrix(axis, j);
      for (int n = -j; n <= j; ++n) {
        const cplx q = rng.q(0.5).value();
        cplx via_matrix{};
        for (int k = -j; k <= j; ++k) via_matrix += L(k, n) * std::exp(I1 * static_cast<double>(k) * q);
        const cplx want = ell_direct(axis, j, n, q);
        EXPECT_LT(std::abs(via_matrix - want), 1e-12 * (1 + std::abs(want))) << j << axis << n;
      }
    }
  }
}

TEST(LambdaRep, CommutatorsAndCasimir) {
  for (int j = 0; j <= 20; ++j) {
    const int d = 2 * j + 1;
    const Eigen::MatrixXcd l1 = ell_matrix(1, j).m, l2 = ell_matrix(2, j).m, l3 = ell_matrix(3, j).m;
    EXPECT_LT((l1 * l2 - l2 * l1 - l3).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((l2 * l3 - l3 * l2 - l1).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((l3 * l1 - l1 * l3 - l2).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((casimir_matrix(j).m - j * (j + 1.0) * Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(LambdaRep, GeneratorsHermitianInGram) {
  for (int j = 0; j <= 10; ++j) {
    const Eigen::MatrixXcd G = gram_diagonal(j).cast<cplx>().asDiagonal();
    for (int a = 1; a <= 3; ++a) {
      const Eigen::MatrixXcd f = -I1 * ell_matrix(a, j).m;
      EXPECT_LT((f.adjoint() * G - G * f).cwiseAbs().maxCoeff(), 1e-12 * G.cwiseAbs().maxCoeff());
    }
  }
}

TEST(LambdaRep, QuadratureReproducesOrthogonality) {
  for (int j = 0; j <= 4; ++j) {
    for (int n = -j; n <= j; ++n) {
      for (int m = -j; m <= j; ++m) {
        const auto r = inner_product_quadrature(FourierState::basis(j, n), FourierState::basis(j, m));
        EXPECT_TRUE(r.tail_ok);
        EXPECT_LT(std::abs(r.value - (n == m ? 1.0 / weight_B(n, j) : 0.0)), 1e-6) << j << n << m;
      }
    }
  }
}

TEST(LambdaRep, QuadratureOfGeneralStates) {
  Rng rng(12);
  const int j = 3;
  Eigen::VectorXcd a(7), b(7);
  for (int k = 0; k < 7; ++k) {
    a(k) = {rng.uni(-1, 1), rng.uni(-1, 1)};
    b(k) = {rng.uni(-1, 1), rng.uni(-1, 1)};
  }
  const FourierState u(j, a), v(j, b);
  EXPECT_LT(std::abs(inner_product_quadrature(u, v).value - inner_product(u, v)), 1e-6);
}

TEST(LambdaRep, TailBoundFlagsShortWindow) {
  QuadratureOptions opt;
  opt.beta_max = 1.0;
  const auto r = inner_product_quadrature(FourierState::basis(2, 1), FourierState::basis(2, 1), opt);
  EXPECT_FALSE(r.tail_ok);
}

TEST(LambdaRep, DeltaClosedFormMatchesSeries) {
  Rng rng(13);
  for (int j = 0; j <= 8; ++j) {
    const ComplexQ q = rng.q(), qp = rng.q();
    const cplx a = delta_j(q, qp, j), b = delta_j_series(q, qp, j);
    EXPECT_LT(std::abs(a - b), 1e-11 * std::max(1.0, std::abs(a)));
  }
  EXPECT_NEAR(delta_j({0.3, 0.0}, {0.3, 0.0}, 1).real(), 2.0, 1e-14);
}

TEST(LambdaRep, DeltaReproduces) {
  // (delta_j(., conj q0), Phi)_Q = Phi(q0)
  Rng rng(14);
  const int j = 4;
  Eigen::VectorXcd c(9);
  for (int k = 0; k < 9; ++k) c(k) = {rng.uni(-1, 1), rng.uni(-1, 1)};
  const FourierState phi(j, c);
  const ComplexQ q0 = rng.q();
  FourierState kern(j);
  for (int n = -j; n <= j; ++n)
    kern[n] = weight_B(n, j) * std::exp(-I1 * static_cast<double>(n) * std::conj(q0.value()));
  EXPECT_LT(std::abs(evaluate_state(kern, {0.2, 0.1}) - delta_j({0.2, 0.1}, q0, j)), 1e-11);
  const cplx want = evaluate_state(phi, q0);
  EXPECT_LT(std::abs(inner_product(kern, phi) - want), 1e-11 * (1 + std::abs(want)));
  // and by quadrature
  EXPECT_LT(std::abs(inner_product_quadrature(kern, phi).value - want), 1e-6 * (1 + std::abs(want)));
}

TEST(LambdaRep, EvaluateAndDerivatives) {
  Rng rng(15);
  const int j = 3;
  Eigen::VectorXcd c(7);
  for (int k = 0; k < 7; ++k) c(k) = {rng.uni(-1, 1), rng.uni(-1, 1)};
  const FourierState u(j, c);
  const ComplexQ q = rng.q();
  cplx direct{};
  for (int n = -j; n <= j; ++n) direct += u[n] * std::exp(I1 * static_cast<double>(n) * q.value());
  EXPECT_LT(std::abs(evaluate_state(u, q) - direct), 1e-12);
  const double h = 1e-4;
  const cplx fd1 = (evaluate_state(u, {q.alpha + h, q.beta}) - evaluate_state(u, {q.alpha - h, q.beta})) / (2 * h);
  EXPECT_LT(std::abs(evaluate_state_derivative(u, q, 1) - fd1), 1e-6);
  const cplx fd2 = (evaluate_state_derivative(u, {q.alpha + h, q.beta}, 1) -
                    evaluate_state_derivative(u, {q.alpha - h, q.beta}, 1)) / (2 * h);
  EXPECT_LT(std::abs(evaluate_state_derivative(u, q, 2) - fd2), 1e-5);
  EXPECT_THROW(evaluate_state(u, {0.0, 60.0}), OverflowError);
}

TEST(LambdaRep, StateValidation) {
  EXPECT_THROW(FourierState(2, Eigen::VectorXcd::Zero(3)), DimensionError);
  Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(3);
  bad(1) = {std::nan(""), 0.0};
  EXPECT_THROW(FourierState(1, bad), DomainError);
  EXPECT_THROW(FourierState::basis(1, 2), DomainError);
}
