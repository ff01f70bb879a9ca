#include "hedirac/spectrum.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hedirac;

namespace {

std::vector<double> random_sigmas(std::size_t n, std::uint64_t seed, double lo = 0.01,
                                  double hi = 0.99) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> out(n);
  for (auto &s : out)
    s = u(rng);
  return out;
}

} // namespace

TEST(ClosedForm, HRatio) {
  EXPECT_EQ(h_ratio(0.0, 0.4, 0.7), 0.0);
  EXPECT_DOUBLE_EQ(h_ratio(0.3, 0.5, 0.5), 0.3);
  const auto s = exponents(1.0, 1.0, kFineStructure);
  EXPECT_DOUBLE_EQ(h_ratio(0.1775, s.s1, s.s2), 0.1775);
  EXPECT_THROW(h_ratio(0.3, 0.0, 0.5), degeneracy_error);
}

TEST(ClosedForm, OneElectronParameters) {
  const double a = kFineStructure;
  const double s1 = exponent(1.0, a);
  const auto c = c_params(0.0, s1, s1, a);
  EXPECT_DOUBLE_EQ(c.B, (s1 + 0.5) * s1);
  EXPECT_NEAR(c.D, 4.0 * a * a * s1 * s1, 1e-18);
  EXPECT_NEAR(c.C2, 1.0 / std::sqrt(1.0 - 4.0 * a * a), 1e-15);
}

TEST(ClosedForm, DecoupledParameters) {
  const auto c = c_params(0.3, 0.5, 0.5, 0.0);
  EXPECT_EQ(c.D, 0.0);
  EXPECT_EQ(c.C2, 1.0);
  EXPECT_DOUBLE_EQ(c.C1, std::abs(c.B));
}

TEST(ClosedForm, C1IsBTimesC2) {
  ModelParams p;
  for (double s : random_sigmas(50, 1)) {
    const auto c = c_params(s, p);
    EXPECT_LE(std::abs(c.C1 - c.B * c.C2), 1e-12 * c.C1) << s;
  }
}

TEST(ClosedForm, DegenerateBracketThrows) {
  // s1 = 0 and s = 0 make B vanish
  EXPECT_THROW(c_params(0.0, 0.0, 0.3, 0.01), degeneracy_error);
}

TEST(ExcessEnergy, MatchesHighPrecisionLiteralFormula) {
  ModelParams p;
  for (double s : random_sigmas(20, 2)) {
    const double ref = static_cast<double>(oracle::delta_e_literal(s, p.alpha, p.j1, p.j2));
    EXPECT_NEAR(delta_e(s, p), ref, 1e-12 * std::abs(ref)) << s;
  }
}

TEST(ExcessEnergy, ReferenceGroundStateValue) {
  ModelParams p;
  EXPECT_NEAR(delta_e(0.1775, p), -2.90589, 5e-5);
}

TEST(ExcessEnergy, IonLimit) {
  const double a = kFineStructure;
  EXPECT_NEAR(ion_limit_value(a), (std::sqrt(1.0 - 4.0 * a * a) - 1.0) / (a * a), 1e-9);
  EXPECT_NEAR(ion_limit_value(a), -2.0001065, 1e-7);
  ModelParams p;
  EXPECT_NEAR(delta_e(0.0, p), ion_limit_value(p.alpha), 1e-13);
  EXPECT_EQ(ion_limit_value(0.0), -2.0);
}

TEST(ExcessEnergy, ContinuousInAlphaAtZero) {
  // At alpha = 0 the second term is 0/0; the implementation returns its limit.
  ModelParams zero;
  zero.alpha = 0.0;
  for (double s : {0.1, 0.3, 0.7}) {
    const double small =
        static_cast<double>(oracle::delta_e_literal(s, 1e-7, zero.j1, zero.j2));
    EXPECT_NEAR(delta_e(s, zero), small, 1e-9) << s;
  }
}

TEST(ExcessEnergy, TwoEvaluationPathsAgree) {
  // E - (1+s)m loses ~log10(1/a^2) digits in binary64; long double keeps them.
  ModelParams p;
  for (double s : random_sigmas(20, 3)) {
    const long double direct = delta_e<long double>(s, p);
    const long double via_energy = delta_e_from_energy<long double>(s, p);
    EXPECT_LE(std::abs(static_cast<double>(direct - via_energy)),
              1e-12 * std::abs(static_cast<double>(direct)));
    EXPECT_LE(std::abs(delta_e(s, p) - delta_e_from_energy(s, p)), 1e-10);
  }
  ModelParams zero;
  zero.alpha = 0.0;
  EXPECT_THROW(delta_e_from_energy(0.3, zero), degeneracy_error);
}

TEST(ExcessEnergy, RejectsSigmaOutsideUnitInterval) {
  ModelParams p;
  EXPECT_THROW(delta_e(-0.1, p), hedirac::invalid_argument);
  EXPECT_THROW(delta_e(1.1, p), hedirac::invalid_argument);
  p.alpha = 0.6;
  EXPECT_THROW(delta_e(0.3, p), imaginary_exponent_error);
}

TEST(Energy, OneElectronIsHydrogenLike) {
  ModelParams p;
  const double ref = oracle::hydrogen_like_energy(p.m, 2.0, p.alpha);
  EXPECT_NEAR(energy_closed_form(0.0, p), ref, 1e-12 * ref);
  p.m = 3.0;
  EXPECT_NEAR(energy_closed_form(0.0, p), oracle::hydrogen_like_energy(3.0, 2.0, p.alpha),
              3e-12);
}

TEST(Energy, RestMassesWithoutCoupling) {
  ModelParams p;
  p.alpha = 0.0;
  EXPECT_DOUBLE_EQ(energy_closed_form(0.4, p), 1.4);
}

TEST(Geometry, ReferenceEquilibrium) {
  ModelParams p;
  const auto pt = equilibrium_point(0.1775, p);
  EXPECT_NEAR(pt.rho0, 0.862, 0.005);
  EXPECT_NEAR(pt.r10, 0.130, 0.005);
  EXPECT_NEAR(pt.r20, 0.732, 0.005);
}

TEST(Geometry, RadiiInvariants) {
  ModelParams p;
  for (double s : random_sigmas(20, 4)) {
    const auto pt = equilibrium_point(s, p);
    ASSERT_TRUE(pt.ok());
    EXPECT_NEAR(pt.r10 + pt.r20, pt.rho0, 1e-14 * pt.rho0);
    EXPECT_NEAR(pt.r10 / pt.r20, s, 1e-14);
    EXPECT_GT(pt.rho0, 0.0);
  }
}

TEST(Geometry, IonLimitDiverges) {
  ModelParams p;
  EXPECT_TRUE(std::isinf(rho0(0.0, p)));
  EXPECT_GT(rho0(1e-4, p), 1e3);
  EXPECT_THROW(rho0(-0.1, p), hedirac::invalid_argument);
}

TEST(Geometry, NaturalUnitsScaleWithMass) {
  ModelParams p;
  const double bohr = rho0(0.2, p);
  EXPECT_DOUBLE_EQ(rho0_natural(0.2, p), bohr / p.alpha);
  p.m = 2.0;
  EXPECT_DOUBLE_EQ(rho0(0.2, p), bohr);
  EXPECT_DOUBLE_EQ(rho0_natural(0.2, p), bohr / (2.0 * p.alpha));
}

TEST(Consistency, SolverConvergesToAZero) {
  ModelParams p;
  for (double s : interior_grid(0.05, 0.5, 10)) {
    const double rho = rho0_natural(s, p);
    for (auto f : {DenominatorFactor::quoted, DenominatorFactor::squared_difference}) {
      const auto r = energy_consistency_solve(s, rho, p, f);
      EXPECT_LE(std::abs(r.residual), 1e-12);
      EXPECT_GT(r.E, (1.0 + s) * p.alpha / rho);
      EXPECT_LT(r.E, (1.0 + s) * (p.alpha / rho + p.m));
    }
  }
}

TEST(Consistency, OneElectronLimit) {
  ModelParams p;
  const auto r = energy_consistency_solve(0.0, std::numeric_limits<double>::infinity(), p);
  const double ref = oracle::hydrogen_like_energy(p.m, 2.0, p.alpha);
  EXPECT_NEAR(r.E, ref, 1e-12 * ref);
}

TEST(Consistency, ClosedFormReproducedWithSquaredDifferenceFactor) {
  ModelParams p;
  for (double s : interior_grid(0.05, 0.5, 10)) {
    const double rho = rho0_natural(s, p);
    const double closed = energy_closed_form(s, p);
    const double alt =
        energy_consistency_solve(s, rho, p, DenominatorFactor::squared_difference).E;
    EXPECT_NEAR(alt, closed, 1e-12 * closed) << s;
  }
}

TEST(Consistency, InvalidArguments) {
  ModelParams p;
  EXPECT_THROW(energy_consistency_solve(1.0, 10.0, p), hedirac::invalid_argument);
  EXPECT_THROW(energy_consistency_solve(0.3, 0.0, p), hedirac::invalid_argument);
}

TEST(Arbitration, SquaredReadingTracksTheRoot) {
  ModelParams p;
  const auto a = arbitrate_energy_reading(p, interior_grid(0.05, 0.5, 10));
  ASSERT_EQ(a.rows.size(), 10u);
  EXPECT_EQ(a.selected, EnergyReading::squared);
  EXPECT_LT(a.squared_vs_root, 1e-12);
  EXPECT_GT(a.unsquared_vs_root, 1e-6);
  EXPECT_LT(a.root_alt_vs_closed, 1e-12);
  EXPECT_NE(a.statement().find("selected reading: squared"), std::string::npos);
}

TEST(Arbitration, InteriorGridExcludesEndpoints) {
  const auto g = interior_grid(0.0, 1.0, 4);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_DOUBLE_EQ(g.front(), 0.2);
  EXPECT_DOUBLE_EQ(g.back(), 0.8);
}
