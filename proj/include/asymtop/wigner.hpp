#pragma once

#include <Eigen/Dense>

#include "asymtop/so3.hpp"

namespace asymtop {

struct WignerIndex {
  int j = 0;
  int m = 0;
  int n = 0;
};

/// P_n^{(alpha,beta)}(z) by the three-term recurrence. Falls back to the
/// explicit binomial sum when a recurrence denominator vanishes (negative
/// integer parameters).
double jacobi_poly(int n, double alpha, double beta, double z);

/// d^j_{mn}(theta) = (-1)^{m-n} sqrt((j+m)!(j-m)!/((j+n)!(j-n)!))
///   sin^{m-n}(theta/2) cos^{m+n}(theta/2) P_{j-m}^{(m-n,m+n)}(cos theta).
/// Index pairs with m-n < 0 or m+n < 0 are reduced with the symmetries
/// d_{mn} = (-1)^{m-n} d_{nm} = d_{-n,-m} so the Jacobi parameters stay
/// non-negative and theta = 0 is regular.
double wigner_small_d(const WignerIndex& idx, double theta);

/// D^j_{mn}(g) = exp(i m phi + i n psi) d^j_{mn}(theta).
cplx wigner_D(const WignerIndex& idx, const EulerAngles& g);

/// Full (2j+1)x(2j+1) matrix, rows m = -j..j, columns n = -j..j.
Eigen::MatrixXcd wigner_D_matrix(int j, const EulerAngles& g);

/// Haar-quadrature Gram tensor of two Wigner blocks.
/// at(m, n, mt, nt) = \int conj(D^j_{mn}) D^jt_{mt nt} dmu(g).
class WignerGram {
 public:
  WignerGram(int j, int jt);

  cplx& at(int m, int n, int mt, int nt);
  cplx at(int m, int n, int mt, int nt) const;

  /// The exact value delta_{j jt} delta_{m mt} delta_{n nt} / (2j+1).
  double expected(int m, int n, int mt, int nt) const;

  /// max |computed - expected| over all entries.
  double max_defect() const;

  int j() const { return j_; }
  int jt() const { return jt_; }

 private:
  std::size_t offset(int m, int n, int mt, int nt) const;

  int j_, jt_;
  std::vector<cplx> data_;
};

WignerGram wigner_gram(int j, int jt, const HaarRule& rule);

}  // namespace asymtop
