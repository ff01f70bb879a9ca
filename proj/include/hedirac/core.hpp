#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace hedirac {

using Complex = std::complex<double>;
using Mat4C = Eigen::Matrix4cd;
using Mat4 = Eigen::Matrix4d;
using Spinor = Eigen::Vector4cd;
using Vec4 = Eigen::Vector4d;

inline constexpr Complex I{0.0, 1.0};

/// CODATA 2018 fine-structure constant.
inline constexpr double kFineStructure = 1.0 / 137.035999084;

//==============================================================================
// Errors. Every numeric failure the library reports derives from hedirac::error
// so callers (the CLI in particular) can map the family onto exit codes.

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad index, out-of-range sigma, ...).
struct invalid_argument : error {
  using error::error;
};

/// A finite-difference stencil would touch a Coulomb singularity.
struct singular_point_error : error {
  using error::error;
};

/// j^2 <= 4 alpha^2: the indicial exponent becomes complex.
struct imaginary_exponent_error : error {
  using error::error;
};

/// A division by a quantity that vanishes at the given parameters.
struct degeneracy_error : error {
  using error::error;
};

/// A square root of a negative discriminant was requested.
struct no_real_solution_error : error {
  using error::error;
};

/// Bracketed root search found no sign change.
struct no_root_error : error {
  using error::error;
};

/// Golden-section pre-scan did not find a single interior well.
struct non_unimodal_error : error {
  using error::error;
};

//==============================================================================

/// Largest entry modulus of any dense Eigen expression.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
  return static_cast<double>(m.cwiseAbs().maxCoeff());
}

inline bool all_finite(const Mat4C &m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (!std::isfinite(m(i).real()) || !std::isfinite(m(i).imag()))
      return false;
  }
  return true;
}

/// Absolute-tolerance matrix equality; reference entries are all O(1).
inline bool approx_equal(const Mat4C &a, const Mat4C &b, double tolerance) {
  return max_abs(a - b) <= tolerance;
}

} // namespace hedirac
