#include "hedirac/clifford.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hedirac;

namespace {

Mat4C product0123(const GammaTable &t) {
  return t[GammaIndex{0}] * t[GammaIndex{1}] * t[GammaIndex{2}] * t[GammaIndex{3}];
}

} // namespace

TEST(GammaIndex, AcceptsOnlyDefinedIndices) {
  for (int k : {0, 1, 2, 3, 5})
    EXPECT_NO_THROW(GammaIndex{k});
  for (int k : {-1, 4, 6})
    EXPECT_THROW(GammaIndex{k}, hedirac::invalid_argument);
  EXPECT_EQ(GammaIndex{5}.slot(), 4);
}

TEST(Gamma, TablesMatchHandEnteredEntries) {
  for (int k : {0, 1, 2, 3, 5})
    EXPECT_EQ(gamma(k), oracle::gamma_entries(k)) << "gamma " << k;
}

TEST(Gamma, FifteenAnticommutatorsAreExact) {
  const auto report = verify_clifford(1e-300);
  ASSERT_EQ(report.pairs.size(), 15u);
  for (const auto &p : report.pairs)
    EXPECT_EQ(p.deviation, 0.0) << p.mu << "," << p.nu;
  EXPECT_TRUE(report.passed());
}

TEST(Gamma, HermitianAndUnitary) {
  for (int k : kGammaIndices) {
    const Mat4C g = gamma(k);
    EXPECT_EQ(g, g.adjoint());
    EXPECT_EQ(g * g.adjoint(), Mat4C::Identity());
  }
}

TEST(Gamma, FifthMatrixIsMinusTheOrderedProduct) {
  const GammaTable t = standard_gamma_table();
  EXPECT_EQ(t[GammaIndex{5}], Mat4C(-product0123(t)));
  const auto best = best_chirality_phase(t);
  EXPECT_EQ(best.phase, Complex(-1.0));
  EXPECT_EQ(best.deviation, 0.0);
}

TEST(Gamma, ImaginaryPhaseChiralityIsUnsatisfiable) {
  // (-i P)^2 = -P^2 and P^2 = +I for the ordered product of four mutually
  // anticommuting involutions, so -i P can never square to I like g5 does.
  const GammaTable t = standard_gamma_table();
  const Mat4C p = product0123(t);
  EXPECT_EQ(p * p, Mat4C::Identity());
  const Mat4C candidate = -I * p;
  EXPECT_EQ(candidate * candidate, Mat4C(-Mat4C::Identity()));
  EXPECT_DOUBLE_EQ(chirality_deviation(t, -I).deviation, std::sqrt(2.0));
}

TEST(Gamma, ToleranceMustBePositive) {
  EXPECT_THROW(verify_clifford(0.0), hedirac::invalid_argument);
  EXPECT_THROW(verify_clifford(-1.0), hedirac::invalid_argument);
}

TEST(Gamma, CorruptedEntryIsReportedByPair) {
  GammaTable t = standard_gamma_table();
  t[GammaIndex{2}](0, 3) *= -1.0;
  const auto report = verify_clifford(t, 1e-12);
  EXPECT_FALSE(report.passed());
  for (const auto &p : report.pairs) {
    const bool touches = p.mu == 2 || p.nu == 2;
    if (!touches) {
      EXPECT_EQ(p.deviation, 0.0) << p.mu << "," << p.nu;
    }
  }
  bool self = false;
  for (const auto &p : report.pairs)
    if (p.mu == 2 && p.nu == 2)
      self = p.deviation > 0.0;
  EXPECT_TRUE(self);
}

TEST(SpinMatrices, ProductsInThisRepresentation) {
  const Mat4C a1 = alpha_z(1), a2 = alpha_z(2);
  EXPECT_EQ(a1, Mat4C(Eigen::Vector4cd(-1, 1, 1, -1).asDiagonal()));
  EXPECT_EQ(a2, Mat4C(Eigen::Vector4cd(1, -1, 1, -1).asDiagonal()));
  EXPECT_EQ(spin_z(), Mat4C(Eigen::Vector4cd(0, 0, 1, -1).asDiagonal()));
}

TEST(SpinMatrices, QuotedSecondTableIsTheNegatedProduct) {
  EXPECT_EQ(alpha_z(1, SpinTable::quoted), alpha_z(1, SpinTable::product));
  EXPECT_EQ(alpha_z(2, SpinTable::quoted), Mat4C(-alpha_z(2, SpinTable::product)));
  EXPECT_EQ(spin_z(SpinTable::quoted), Mat4C(Eigen::Vector4cd(-1, 1, 0, 0).asDiagonal()));
}

TEST(SpinMatrices, SquaresAndCommutation) {
  for (auto src : {SpinTable::product, SpinTable::quoted}) {
    const Mat4C a1 = alpha_z(1, src), a2 = alpha_z(2, src);
    EXPECT_EQ(a1 * a1, Mat4C::Identity());
    EXPECT_EQ(a2 * a2, Mat4C::Identity());
    EXPECT_EQ(commutator(a1, a2), Mat4C::Zero());
  }
}

TEST(SpinMatrices, RejectsUnknownElectron) {
  EXPECT_THROW(alpha_z(0), hedirac::invalid_argument);
  EXPECT_THROW(alpha_z(3), hedirac::invalid_argument);
}
