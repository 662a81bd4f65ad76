#pragma once

#include <numbers>
#include <random>

#include "asymtop/spectra.hpp"

namespace testing_support {

using asymtop::ComplexQ;
using asymtop::EulerAngles;
using asymtop::TopParams;

inline constexpr double kPi = std::numbers::pi;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed = 1234) : gen(seed) {}
  double uni(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
  EulerAngles angles(double guard = 0.0) {
    return {uni(0, 2 * kPi), uni(guard, kPi - guard), uni(0, 2 * kPi)};
  }
  ComplexQ q(double beta = 1.0) { return {uni(0, 2 * kPi), uni(-beta, beta)}; }
  // A > B > C with gaps of at least 5% of A
  TopParams strict_params() {
    for (;;) {
      double a = uni(0.1, 10), b = uni(0.1, 10), c = uni(0.1, 10);
      if (a < b) std::swap(a, b);
      if (b < c) std::swap(b, c);
      if (a < b) std::swap(a, b);
      if (a - b > 0.05 * a && b - c > 0.05 * a) return {a, b, c};
    }
  }
};

}  // namespace testing_support
