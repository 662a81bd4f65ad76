#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace asymtop {

using cplx = std::complex<double>;

/// A point of SO(3) as z-x-z Euler angles, g = g_z(phi) g_x(theta) g_z(psi).
struct EulerAngles {
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;

  static EulerAngles identity() { return {}; }
};

/// Reduces phi and psi to [0, 2pi). theta is left as given.
EulerAngles normalized(EulerAngles g);

struct RotationMatrix {
  std::array<std::array<double, 3>, 3> m{};

  double operator()(int r, int c) const { return m[r][c]; }
  double& operator()(int r, int c) { return m[r][c]; }

  RotationMatrix operator*(const RotationMatrix& o) const;
  RotationMatrix transpose() const;
  double det() const;
};

RotationMatrix rotation_x(double t);
RotationMatrix rotation_y(double t);
RotationMatrix rotation_z(double t);

RotationMatrix euler_to_matrix(const EulerAngles& g);

/// Euler angles of a rotation matrix. At gimbal lock (sin theta below
/// ~1e-12) the whole z-rotation goes into phi and psi is set to 0.
EulerAngles matrix_to_euler(const RotationMatrix& m);

/// Euler angles of the product g1 * g2.
EulerAngles compose(const EulerAngles& g1, const EulerAngles& g2);

EulerAngles inverse(const EulerAngles& g);

/// Quadrature rule for the normalized Haar measure sin(theta) dphi dtheta
/// dpsi / (8 pi^2). Exact for products conj(D^j) D^jt with j, jt <= degree.
struct HaarNode {
  EulerAngles g;
  double weight;
};

struct HaarRule {
  std::vector<HaarNode> nodes;
  int degree = 0;
};

HaarRule haar_rule(int degree);

using GroupFunction = std::function<cplx(const EulerAngles&)>;

enum class FieldSide { LeftInvariant, RightInvariant };

struct FieldOptions {
  double step = 1e-5;
  /// Minimum distance of theta from 0 and pi.
  double pole_guard = 1e-3;
};

/// Applies xi_a (left-invariant) or eta_a (right-invariant), axis a in
/// 1..3, to f at g by central differences. Throws DomainError near the
/// theta poles.
cplx invariant_field_apply(FieldSide side, int axis, const GroupFunction& f,
                           const EulerAngles& g, const FieldOptions& opt = {});

/// Wraps f into the function g -> (field_a f)(g).
GroupFunction invariant_field(FieldSide side, int axis, GroupFunction f,
                              FieldOptions opt = {});

/// The Casimir operator L^2 in Euler angles, second-order central
/// differences.
cplx casimir_apply(const GroupFunction& f, const EulerAngles& g,
                   const FieldOptions& opt = {});

}  // namespace asymtop
