#include "asymtop/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "asymtop/errors.hpp"

namespace asymtop {

namespace {

void check_index(const WignerIndex& idx) {
  if (idx.j < 0 || std::abs(idx.m) > idx.j || std::abs(idx.n) > idx.j) {
    throw DomainError("Wigner index out of range");
  }
}

// Generalized binomial coefficient binom(top, k) for real top, integer k >= 0.
double binomial(double top, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= (top - k + i) / i;
  return r;
}

double jacobi_sum(int n, double a, double b, double z) {
  const double xm = 0.5 * (z - 1.0), xp = 0.5 * (z + 1.0);
  double s = 0.0;
  for (int k = 0; k <= n; ++k) {
    s += binomial(n + a, n - k) * binomial(n + b, k) * std::pow(xm, k) *
         std::pow(xp, n - k);
  }
  return s;
}

}  // namespace

double jacobi_poly(int n, double alpha, double beta, double z) {
  if (n < 0) throw DomainError("jacobi_poly: negative degree");
  if (n == 0) return 1.0;
  const double ab = alpha + beta;
  double p0 = 1.0;
  double p1 = (alpha + 1.0) + (ab + 2.0) * 0.5 * (z - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * k + ab;
    const double a1 = 2.0 * k * (k + ab) * (c - 2.0);
    if (a1 == 0.0) return jacobi_sum(n, alpha, beta, z);
    const double a2 = (c - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (c - 2.0) * (c - 1.0) * c;
    const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c;
    const double p2 = ((a2 + a3 * z) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double wigner_small_d(const WignerIndex& idx, double theta) {
  check_index(idx);
  int m = idx.m, n = idx.n;
  double sign = 1.0;
  if (m - n < 0) {
    if ((n - m) % 2 != 0) sign = -sign;
    std::swap(m, n);
  }
  if (m + n < 0) {
    const int mm = -n, nn = -m;
    m = mm;
    n = nn;
  }
  const int j = idx.j;
  // Both exponents are now non-negative.
  const int a = m - n, b = m + n;
  const double log_ratio = 0.5 * (std::lgamma(j + m + 1.0) + std::lgamma(j - m + 1.0) -
                                  std::lgamma(j + n + 1.0) - std::lgamma(j - n + 1.0));
  const double phase = (a % 2 == 0) ? 1.0 : -1.0;
  const double half = 0.5 * theta;
  return sign * phase * std::exp(log_ratio) * std::pow(std::sin(half), a) *
         std::pow(std::cos(half), b) * jacobi_poly(j - m, a, b, std::cos(theta));
}

cplx wigner_D(const WignerIndex& idx, const EulerAngles& g) {
  const double d = wigner_small_d(idx, g.theta);
  return std::polar(d, idx.m * g.phi + idx.n * g.psi);
}

Eigen::MatrixXcd wigner_D_matrix(int j, const EulerAngles& g) {
  if (j < 0) throw DomainError("wigner_D_matrix: negative j");
  const int dim = 2 * j + 1;
  Eigen::MatrixXcd D(dim, dim);
  for (int m = -j; m <= j; ++m)
    for (int n = -j; n <= j; ++n) D(m + j, n + j) = wigner_D({j, m, n}, g);
  return D;
}

WignerGram::WignerGram(int j, int jt) : j_(j), jt_(jt) {
  const std::size_t a = 2 * j + 1, b = 2 * jt + 1;
  data_.assign(a * a * b * b, cplx{});
}

std::size_t WignerGram::offset(int m, int n, int mt, int nt) const {
  const std::size_t a = 2 * j_ + 1, b = 2 * jt_ + 1;
  return (((static_cast<std::size_t>(m + j_) * a + (n + j_)) * b + (mt + jt_)) * b) +
         (nt + jt_);
}

cplx& WignerGram::at(int m, int n, int mt, int nt) { return data_[offset(m, n, mt, nt)]; }

cplx WignerGram::at(int m, int n, int mt, int nt) const {
  return data_[offset(m, n, mt, nt)];
}

double WignerGram::expected(int m, int n, int mt, int nt) const {
  if (j_ != jt_ || m != mt || n != nt) return 0.0;
  return 1.0 / (2.0 * j_ + 1.0);
}

double WignerGram::max_defect() const {
  double worst = 0.0;
  for (int m = -j_; m <= j_; ++m)
    for (int n = -j_; n <= j_; ++n)
      for (int mt = -jt_; mt <= jt_; ++mt)
        for (int nt = -jt_; nt <= jt_; ++nt)
          worst = std::max(worst, std::abs(at(m, n, mt, nt) - expected(m, n, mt, nt)));
  return worst;
}

WignerGram wigner_gram(int j, int jt, const HaarRule& rule) {
  if (rule.degree < std::max(j, jt)) {
    throw DomainError("wigner_gram: Haar rule degree too low");
  }
  WignerGram gram(j, jt);
  for (const HaarNode& node : rule.nodes) {
    const Eigen::MatrixXcd D = wigner_D_matrix(j, node.g);
    const Eigen::MatrixXcd Dt = jt == j ? D : wigner_D_matrix(jt, node.g);
    for (int m = -j; m <= j; ++m)
      for (int n = -j; n <= j; ++n) {
        const cplx left = std::conj(D(m + j, n + j)) * node.weight;
        for (int mt = -jt; mt <= jt; ++mt)
          for (int nt = -jt; nt <= jt; ++nt)
            gram.at(m, n, mt, nt) += left * Dt(mt + jt, nt + jt);
      }
  }
  return gram;
}

}  // namespace asymtop
