#pragma once

// Five mutually anticommuting 4x4 matrices {g0, g1, g2, g3, g5} in the
// Dirac block representation, plus the planar spin matrices built from them.

#include "hedirac/core.hpp"

#include <array>
#include <vector>

namespace hedirac {

/// Index of a gamma matrix. Only 0, 1, 2, 3 and 5 exist.
class GammaIndex {
public:
  constexpr explicit GammaIndex(int value) : value_(value) {
    if (!(value == 0 || value == 1 || value == 2 || value == 3 || value == 5))
      throw invalid_argument("gamma index must be one of 0,1,2,3,5");
  }
  constexpr int value() const { return value_; }
  /// Position 0..4 inside a GammaTable.
  constexpr int slot() const { return value_ == 5 ? 4 : value_; }
  friend constexpr bool operator==(GammaIndex, GammaIndex) = default;

private:
  int value_;
};

inline constexpr std::array<int, 5> kGammaIndices{0, 1, 2, 3, 5};

namespace pauli {
inline Eigen::Matrix2cd identity() { return Eigen::Matrix2cd::Identity(); }
inline Eigen::Matrix2cd x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}
inline Eigen::Matrix2cd y() {
  Eigen::Matrix2cd m;
  m << 0, -I, I, 0;
  return m;
}
inline Eigen::Matrix2cd z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}
} // namespace pauli

inline Mat4C block(const Eigen::Matrix2cd &upper_left,
                   const Eigen::Matrix2cd &upper_right,
                   const Eigen::Matrix2cd &lower_left,
                   const Eigen::Matrix2cd &lower_right) {
  Mat4C m;
  m.topLeftCorner<2, 2>() = upper_left;
  m.topRightCorner<2, 2>() = upper_right;
  m.bottomLeftCorner<2, 2>() = lower_left;
  m.bottomRightCorner<2, 2>() = lower_right;
  return m;
}

/// The five matrices, stored by slot (g0, g1, g2, g3, g5). Kept as a value so
/// that verification code can be pointed at a deliberately corrupted table.
struct GammaTable {
  std::array<Mat4C, 5> matrices;

  const Mat4C &operator[](GammaIndex idx) const {
    return matrices[static_cast<std::size_t>(idx.slot())];
  }
  Mat4C &operator[](GammaIndex idx) {
    return matrices[static_cast<std::size_t>(idx.slot())];
  }
};

/// Literal entry tables: g0 = diag(I,-I); gk = [[0, i sk], [-i sk, 0]];
/// g5 = [[0, I], [I, 0]]. Product identities are checked, never assumed.
inline GammaTable standard_gamma_table() {
  const Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
  const Eigen::Matrix2cd one = pauli::identity();
  GammaTable t;
  t.matrices[0] = block(one, zero, zero, -one);
  t.matrices[1] = block(zero, I * pauli::x(), -I * pauli::x(), zero);
  t.matrices[2] = block(zero, I * pauli::y(), -I * pauli::y(), zero);
  t.matrices[3] = block(zero, I * pauli::z(), -I * pauli::z(), zero);
  t.matrices[4] = block(zero, one, one, zero);
  return t;
}

inline Mat4C gamma(GammaIndex idx) {
  static const GammaTable table = standard_gamma_table();
  return table[idx];
}
inline Mat4C gamma(int idx) { return gamma(GammaIndex{idx}); }

inline Mat4C anticommutator(const Mat4C &a, const Mat4C &b) {
  return a * b + b * a;
}
inline Mat4C commutator(const Mat4C &a, const Mat4C &b) {
  return a * b - b * a;
}

/// Source of the planar spin matrices alpha_{1z}, alpha_{2z}.
enum class SpinTable {
  /// Evaluate the defining products -i g5 g3 and -i g1 g2.
  product,
  /// The block-diagonal forms quoted alongside the definition:
  /// blockdiag(-sz, sz) and blockdiag(-sz, -sz). The second one is the
  /// negative of -i g1 g2 in this representation.
  quoted,
};

inline Mat4C alpha_z(int which, SpinTable source = SpinTable::product) {
  if (which != 1 && which != 2)
    throw invalid_argument("alpha_z: which must be 1 or 2");
  if (source == SpinTable::product) {
    return which == 1 ? Mat4C(-I * gamma(5) * gamma(3))
                      : Mat4C(-I * gamma(1) * gamma(2));
  }
  const Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
  const Eigen::Matrix2cd sz = pauli::z();
  return which == 1 ? block(-sz, zero, zero, sz) : block(-sz, zero, zero, -sz);
}

/// The spin part 1/2 (alpha_{1z} + alpha_{2z}) of M.
inline Mat4C spin_z(SpinTable source = SpinTable::product) {
  return 0.5 * (alpha_z(1, source) + alpha_z(2, source));
}

struct CliffordPair {
  int mu;
  int nu;
  double deviation; ///< max |{g_mu, g_nu} - 2 delta I|
};

struct CliffordReport {
  std::vector<CliffordPair> pairs; ///< the 15 unordered pairs, mu <= nu
  double tolerance = 0.0;

  bool passed() const {
    for (const auto &p : pairs)
      if (!(p.deviation <= tolerance))
        return false;
    return true;
  }
  double max_deviation() const {
    double worst = 0.0;
    for (const auto &p : pairs)
      worst = std::max(worst, p.deviation);
    return worst;
  }
};

inline CliffordReport verify_clifford(const GammaTable &table,
                                      double tolerance) {
  if (!(tolerance > 0.0))
    throw invalid_argument("verify_clifford: tolerance must be positive");
  CliffordReport report;
  report.tolerance = tolerance;
  for (std::size_t a = 0; a < kGammaIndices.size(); ++a) {
    for (std::size_t b = a; b < kGammaIndices.size(); ++b) {
      const GammaIndex mu{kGammaIndices[a]}, nu{kGammaIndices[b]};
      Mat4C expected = Mat4C::Zero();
      if (a == b)
        expected = 2.0 * Mat4C::Identity();
      const double dev =
          max_abs(anticommutator(table[mu], table[nu]) - expected);
      report.pairs.push_back({mu.value(), nu.value(), dev});
    }
  }
  return report;
}

inline CliffordReport verify_clifford(double tolerance) {
  return verify_clifford(standard_gamma_table(), tolerance);
}

/// Product g0 g1 g2 g3 and the deviation of g5 from phase * product.
struct ChiralityCheck {
  Complex phase;
  double deviation;
};

inline ChiralityCheck chirality_deviation(const GammaTable &t, Complex phase) {
  const Mat4C product =
      t[GammaIndex{0}] * t[GammaIndex{1}] * t[GammaIndex{2}] * t[GammaIndex{3}];
  return {phase, max_abs(t[GammaIndex{5}] - phase * product)};
}

/// Among the unit phases {1, -1, i, -i}, the one for which
/// g5 = phase * g0 g1 g2 g3 holds best.
inline ChiralityCheck best_chirality_phase(const GammaTable &t) {
  ChiralityCheck best{Complex{1.0}, std::numeric_limits<double>::infinity()};
  for (Complex phase : {Complex{1.0}, Complex{-1.0}, I, -I}) {
    const auto c = chirality_deviation(t, phase);
    if (c.deviation < best.deviation)
      best = c;
  }
  return best;
}

} // namespace hedirac
