#include "asymtop/so3.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "asymtop/errors.hpp"
#include "asymtop/quadrature.hpp"

namespace asymtop {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGimbalSin = 1e-12;

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

void check_interior(const EulerAngles& g, const FieldOptions& opt) {
  if (!(opt.step > 0.0)) throw DomainError("finite-difference step must be positive");
  if (g.theta < opt.pole_guard || g.theta > std::numbers::pi - opt.pole_guard) {
    throw DomainError("theta = " + std::to_string(g.theta) +
                      " is within the pole guard of 0 or pi");
  }
}

struct Partials {
  cplx dphi, dtheta, dpsi;
};

Partials central_partials(const GroupFunction& f, const EulerAngles& g, double h,
                          bool need_phi, bool need_theta, bool need_psi) {
  Partials p{};
  const double inv = 1.0 / (2.0 * h);
  if (need_phi) {
    p.dphi = (f({g.phi + h, g.theta, g.psi}) - f({g.phi - h, g.theta, g.psi})) * inv;
  }
  if (need_theta) {
    p.dtheta = (f({g.phi, g.theta + h, g.psi}) - f({g.phi, g.theta - h, g.psi})) * inv;
  }
  if (need_psi) {
    p.dpsi = (f({g.phi, g.theta, g.psi + h}) - f({g.phi, g.theta, g.psi - h})) * inv;
  }
  return p;
}

}  // namespace

EulerAngles normalized(EulerAngles g) {
  g.phi = wrap_angle(g.phi);
  g.psi = wrap_angle(g.psi);
  return g;
}

RotationMatrix RotationMatrix::operator*(const RotationMatrix& o) const {
  RotationMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      double s = 0.0;
      for (int l = 0; l < 3; ++l) s += m[i][l] * o.m[l][k];
      r.m[i][k] = s;
    }
  return r;
}

RotationMatrix RotationMatrix::transpose() const {
  RotationMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r.m[i][k] = m[k][i];
  return r;
}

double RotationMatrix::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

RotationMatrix rotation_x(double t) {
  const double c = std::cos(t), s = std::sin(t);
  RotationMatrix r;
  r.m = {{{1, 0, 0}, {0, c, -s}, {0, s, c}}};
  return r;
}

RotationMatrix rotation_y(double t) {
  const double c = std::cos(t), s = std::sin(t);
  RotationMatrix r;
  r.m = {{{c, 0, s}, {0, 1, 0}, {-s, 0, c}}};
  return r;
}

RotationMatrix rotation_z(double t) {
  const double c = std::cos(t), s = std::sin(t);
  RotationMatrix r;
  r.m = {{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}};
  return r;
}

RotationMatrix euler_to_matrix(const EulerAngles& g) {
  return rotation_z(g.phi) * rotation_x(g.theta) * rotation_z(g.psi);
}

EulerAngles matrix_to_euler(const RotationMatrix& m) {
  // Third row is (sin th sin psi, sin th cos psi, cos th), third column is
  // (sin phi sin th, -cos phi sin th, cos th).
  const double s = std::hypot(m(2, 0), m(2, 1));
  EulerAngles g;
  g.theta = std::atan2(s, m(2, 2));
  if (s < kGimbalSin) {
    // theta = 0: M = g_z(phi + psi); theta = pi: M = g_z(phi - psi) diag(1,-1,-1).
    g.theta = m(2, 2) > 0.0 ? 0.0 : std::numbers::pi;
    g.phi = std::atan2(m(1, 0), m(0, 0));
    g.psi = 0.0;
  } else {
    g.phi = std::atan2(m(0, 2), -m(1, 2));
    g.psi = std::atan2(m(2, 0), m(2, 1));
  }
  return normalized(g);
}

EulerAngles compose(const EulerAngles& g1, const EulerAngles& g2) {
  return matrix_to_euler(euler_to_matrix(g1) * euler_to_matrix(g2));
}

EulerAngles inverse(const EulerAngles& g) {
  return matrix_to_euler(euler_to_matrix(g).transpose());
}

HaarRule haar_rule(int degree) {
  if (degree < 0) throw DomainError("haar_rule: degree must be non-negative");
  const int n_angle = 2 * degree + 1;
  const GaussRule gl = gauss_legendre(degree + 1);
  HaarRule rule;
  rule.degree = degree;
  rule.nodes.reserve(static_cast<std::size_t>(n_angle) * n_angle * gl.nodes.size());
  const double w_angle = 1.0 / n_angle;
  for (std::size_t t = 0; t < gl.nodes.size(); ++t) {
    const double theta = std::acos(gl.nodes[t]);
    const double w_theta = 0.5 * gl.weights[t];
    for (int i = 0; i < n_angle; ++i) {
      const double phi = kTwoPi * i / n_angle;
      for (int k = 0; k < n_angle; ++k) {
        const double psi = kTwoPi * k / n_angle;
        rule.nodes.push_back({{phi, theta, psi}, w_theta * w_angle * w_angle});
      }
    }
  }
  return rule;
}

cplx invariant_field_apply(FieldSide side, int axis, const GroupFunction& f,
                           const EulerAngles& g, const FieldOptions& opt) {
  if (axis < 1 || axis > 3) throw DomainError("axis must be 1, 2 or 3");
  check_interior(g, opt);
  const double h = opt.step;
  const double st = std::sin(g.theta), ct = std::cos(g.theta);
  const double cot = ct / st;

  if (side == FieldSide::LeftInvariant) {
    if (axis == 3) return central_partials(f, g, h, false, false, true).dpsi;
    const Partials p = central_partials(f, g, h, true, true, true);
    const double sp = std::sin(g.psi), cp = std::cos(g.psi);
    if (axis == 1) return (sp / st) * p.dphi + cp * p.dtheta - cot * sp * p.dpsi;
    return (cp / st) * p.dphi - sp * p.dtheta - cot * cp * p.dpsi;
  }

  if (axis == 3) return -central_partials(f, g, h, true, false, false).dphi;
  const Partials p = central_partials(f, g, h, true, true, true);
  const double sf = std::sin(g.phi), cf = std::cos(g.phi);
  if (axis == 1) return cot * sf * p.dphi - cf * p.dtheta - (sf / st) * p.dpsi;
  return -cot * cf * p.dphi - sf * p.dtheta + (cf / st) * p.dpsi;
}

GroupFunction invariant_field(FieldSide side, int axis, GroupFunction f,
                              FieldOptions opt) {
  return [side, axis, f = std::move(f), opt](const EulerAngles& g) {
    return invariant_field_apply(side, axis, f, g, opt);
  };
}

cplx casimir_apply(const GroupFunction& f, const EulerAngles& g,
                   const FieldOptions& opt) {
  check_interior(g, opt);
  const double h = opt.step;
  const double h2 = h * h;
  const double ph = g.phi, th = g.theta, ps = g.psi;
  const cplx f0 = f(g);

  const cplx f_pp = (f({ph + h, th, ps}) - 2.0 * f0 + f({ph - h, th, ps})) / h2;
  const cplx f_ss = (f({ph, th, ps + h}) - 2.0 * f0 + f({ph, th, ps - h})) / h2;
  const cplx f_tp = f({ph, th + h, ps});
  const cplx f_tm = f({ph, th - h, ps});
  const cplx f_tt = (f_tp - 2.0 * f0 + f_tm) / h2;
  const cplx f_t = (f_tp - f_tm) / (2.0 * h);
  const cplx f_ps = (f({ph + h, th, ps + h}) - f({ph + h, th, ps - h}) -
                     f({ph - h, th, ps + h}) + f({ph - h, th, ps - h})) /
                    (4.0 * h2);

  const double st = std::sin(th), ct = std::cos(th);
  return -(f_ss + f_pp - 2.0 * ct * f_ps) / (st * st) - f_tt - (ct / st) * f_t;
}

}  // namespace asymtop
