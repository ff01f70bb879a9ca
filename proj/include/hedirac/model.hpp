#pragma once

#include "hedirac/core.hpp"

#include <optional>

namespace hedirac {

/// Physical constants, angular quantum numbers and the penetration factor.
struct ModelParams {
  double alpha = kFineStructure;
  double m = 1.0;
  double sigma = 0.0;
  double j1 = 1.0;
  double j2 = 1.0;

  /// alpha = 0 is admitted as the decoupled limit.
  void validate() const {
    if (!(sigma >= 0.0 && sigma <= 1.0))
      throw invalid_argument("sigma must lie in [0, 1]");
    if (!(alpha >= 0.0))
      throw invalid_argument("alpha must be non-negative");
    if (!(m > 0.0))
      throw invalid_argument("mass must be positive");
    if (!(j1 * j1 > 4.0 * alpha * alpha) || !(j2 * j2 > 4.0 * alpha * alpha))
      throw imaginary_exponent_error("j^2 must exceed 4 alpha^2");
  }

  ModelParams with_sigma(double s) const {
    ModelParams p = *this;
    p.sigma = s;
    return p;
  }
};

enum Axis : int { X1 = 0, Y1 = 1, X2 = 2, Y2 = 3 };

/// Planar configuration (x1, y1, x2, y2) of the two electrons; nucleus at 0.
struct ConfigPoint {
  double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;

  static ConfigPoint polar(double r1, double theta1, double r2,
                           double theta2) {
    return {r1 * std::cos(theta1), r1 * std::sin(theta1), r2 * std::cos(theta2),
            r2 * std::sin(theta2)};
  }

  double operator[](int axis) const {
    switch (axis) {
    case X1: return x1;
    case Y1: return y1;
    case X2: return x2;
    default: return y2;
    }
  }
  ConfigPoint shifted(int axis, double delta) const {
    ConfigPoint p = *this;
    switch (axis) {
    case X1: p.x1 += delta; break;
    case Y1: p.y1 += delta; break;
    case X2: p.x2 += delta; break;
    default: p.y2 += delta; break;
    }
    return p;
  }

  double r1() const { return std::hypot(x1, y1); }
  double r2() const { return std::hypot(x2, y2); }
  double r12() const { return std::hypot(x1 - x2, y1 - y2); }
  double theta1() const { return std::atan2(y1, x1); }
  double theta2() const { return std::atan2(y2, x2); }
};

/// Total potential energy
///   -2(1-s) a / r1 - 4 s a / r2 + (1+s) a / r12.
/// With frozen_rho set, r12 is replaced by that constant.
inline double phi12(const ModelParams &p, const ConfigPoint &x,
                    std::optional<double> frozen_rho = std::nullopt) {
  const double r12 = frozen_rho ? *frozen_rho : x.r12();
  return -2.0 * (1.0 - p.sigma) * p.alpha / x.r1() -
         4.0 * p.sigma * p.alpha / x.r2() + (1.0 + p.sigma) * p.alpha / r12;
}

} // namespace hedirac
