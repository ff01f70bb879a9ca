#pragma once

// Closed-form ground state: h, C1, C2, the energy E, the excess energy dE in
// Hartree units and the equilibrium geometry, plus a bracketed root solve of
// the fundamental relation used to cross-check the closed forms.
//
// The closed-form functions are templated on the floating-point type so that
// the two evaluation paths of dE (direct, and via E - (1+s)m) can be compared
// in extended precision.

#include "hedirac/radial.hpp"

#include <boost/math/tools/roots.hpp>

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace hedirac {

template <class Real = double> Real h_ratio(Real sigma, Real s1, Real s2) {
  if (s1 == Real(0))
    throw degeneracy_error("h_ratio: s1 = 0");
  return sigma * s2 / s1;
}

template <class Real = double> struct ClosedFormParams {
  Real C1;
  Real C2;
  Real h;
  /// (1-s)^2 (s1+1/2) s1 + 4 s^3 (s2+3/2) s2
  Real B;
  /// 4 a^2 (1+s)^2 K
  Real D;
  /// (1-s)^2 s1^2 + 4 s^4 s2^2
  Real K;
};

template <class Real = double>
ClosedFormParams<Real> c_params(Real sigma, Real s1, Real s2, Real alpha) {
  using std::sqrt;
  const Real one(1), ds = one - sigma, ps = one + sigma;
  const Real B = ds * ds * (s1 + Real(0.5)) * s1 +
                 Real(4) * sigma * sigma * sigma * (s2 + Real(1.5)) * s2;
  if (B == Real(0))
    throw degeneracy_error("c_params: B = 0, C2 undefined");
  const Real K = ds * ds * s1 * s1 + Real(4) * sigma * sigma * sigma * sigma * s2 * s2;
  const Real D = Real(4) * alpha * alpha * ps * ps * K;
  ClosedFormParams<Real> c;
  c.B = B;
  c.K = K;
  c.D = D;
  c.C1 = sqrt(B * B + D);
  c.C2 = sqrt(one + D / (B * B));
  c.h = s1 == Real(0) ? Real(0) : h_ratio(sigma, s1, s2);
  return c;
}

template <class Real = double>
ClosedFormParams<Real> c_params(Real sigma, const ModelParams &p) {
  using std::sqrt;
  const Real a(p.alpha);
  const Real s1 = -Real(0.5) + sqrt(Real(p.j1) * Real(p.j1) - Real(4) * a * a);
  const Real s2 = -Real(0.5) + sqrt(Real(p.j2) * Real(p.j2) - Real(4) * a * a);
  if (!(Real(p.j1) * Real(p.j1) > Real(4) * a * a) ||
      !(Real(p.j2) * Real(p.j2) > Real(4) * a * a))
    throw imaginary_exponent_error("c_params: j^2 <= 4 alpha^2");
  return c_params<Real>(sigma, s1, s2, a);
}

/// Excess energy in Hartree units,
///   dE = 2s(1+s)^2/C1 + [(1+s)/C2 - 1 - s]/a^2.
/// The second term is rewritten as
///   -(1+s) (D/a^2) / (B^2 sqrt(1+u) (1+sqrt(1+u))),  u = D/B^2,
/// which is free of 0/0 at a = 0 and gives (sqrt(1-4a^2)-1)/a^2 at s = 0.
template <class Real = double> Real delta_e(Real sigma, const ModelParams &p) {
  using std::sqrt;
  if (!(sigma >= Real(0) && sigma <= Real(1)))
    throw invalid_argument("delta_e: sigma must lie in [0, 1]");
  p.validate();
  const auto c = c_params<Real>(sigma, p);
  const Real ps = Real(1) + sigma;
  const Real u = c.D / (c.B * c.B);
  const Real root = sqrt(Real(1) + u);
  const Real d_over_a2 = Real(4) * ps * ps * c.K;
  const Real second = -ps * d_over_a2 / (c.B * c.B * root * (Real(1) + root));
  return Real(2) * sigma * ps * ps / c.C1 + second;
}

/// (sqrt(1 - 4a^2) - 1) / a^2, the value of dE at s = 0 (He+ ground state).
template <class Real = double> Real ion_limit_value(Real alpha) {
  using std::sqrt;
  // (x - 1)/a^2 with x = sqrt(1-4a^2) equals -4/(1 + x).
  return Real(-4) / (Real(1) + sqrt(Real(1) - Real(4) * alpha * alpha));
}

/// E = 2 s m a^2 (1+s)^2 / C1 + (1+s) m / C2, natural units.
template <class Real = double>
Real energy_closed_form(Real sigma, const ModelParams &p) {
  p.validate();
  const auto c = c_params<Real>(sigma, p);
  const Real m(p.m), a(p.alpha), ps = Real(1) + sigma;
  return Real(2) * sigma * m * a * a * ps * ps / c.C1 + ps * m / c.C2;
}

/// (E - (1+s) m) / (m a^2); the second path to dE.
template <class Real = double>
Real delta_e_from_energy(Real sigma, const ModelParams &p) {
  const Real m(p.m), a(p.alpha);
  if (a == Real(0))
    throw degeneracy_error("delta_e_from_energy: alpha = 0, Hartree unit vanishes");
  return (energy_closed_form<Real>(sigma, p) - (Real(1) + sigma) * m) / (m * a * a);
}

/// rho0 = C1 / (2 s (1+s)) in Bohr radii; +inf at s = 0 (ion limit).
template <class Real = double> Real rho0(Real sigma, const ModelParams &p) {
  if (!(sigma >= Real(0)))
    throw invalid_argument("rho0: sigma must be non-negative");
  if (sigma == Real(0))
    return std::numeric_limits<Real>::infinity();
  const auto c = c_params<Real>(sigma, p);
  return c.C1 / (Real(2) * sigma * (Real(1) + sigma));
}

/// rho0 in natural units, C1 / (2 s m a (1+s)).
template <class Real = double>
Real rho0_natural(Real sigma, const ModelParams &p) {
  if (p.alpha == 0.0)
    throw degeneracy_error("rho0_natural: alpha = 0");
  return rho0<Real>(sigma, p) / (Real(p.m) * Real(p.alpha));
}

struct EquilibriumPoint {
  double sigma = 0.0;
  double deltaE = 0.0; ///< Hartree
  double rho0 = 0.0;   ///< Bohr
  double r10 = 0.0;    ///< Bohr
  double r20 = 0.0;    ///< Bohr
  double E = 0.0;      ///< natural units
  /// Set when the evaluation failed; the numeric fields are then NaN.
  std::string error;

  bool ok() const { return error.empty(); }
};

inline EquilibriumPoint equilibrium_point(double sigma, const ModelParams &p) {
  EquilibriumPoint pt;
  pt.sigma = sigma;
  pt.deltaE = delta_e(sigma, p);
  pt.E = energy_closed_form(sigma, p);
  pt.rho0 = rho0(sigma, p);
  if (sigma == 0.0) {
    pt.r10 = std::numeric_limits<double>::quiet_NaN();
    pt.r20 = std::numeric_limits<double>::infinity();
  } else {
    pt.r10 = sigma * pt.rho0 / (1.0 + sigma);
    pt.r20 = pt.rho0 / (1.0 + sigma);
  }
  return pt;
}

//==============================================================================
// Energy as a function of rho from the fundamental relation
//   E = (1+s) a / rho + (1+s) m / sqrt(1 + 4a^2 (1+s)^2 K / Den^p)
// with K = (1-s)^2 + 4 s^2 h^2 and Den the fundamental denominator. The
// printed expression leaves it open whether Den enters squared (p = 2) or not.

enum class EnergyReading { squared, unsquared };

inline const char *to_string(EnergyReading r) {
  return r == EnergyReading::squared ? "squared" : "unsquared";
}
inline const char *to_string(DenominatorFactor f) {
  return f == DenominatorFactor::quoted ? "1-sigma^2" : "(1-sigma)^2";
}

/// rho in natural units (may be +inf).
inline double energy_relation(double sigma, double rho, const ModelParams &p,
                          EnergyReading reading,
                          DenominatorFactor factor = DenominatorFactor::quoted) {
  const auto s = exponents(p.j1, p.j2, p.alpha);
  const double h = h_ratio(sigma, s.s1, s.s2);
  const ModelParams q = p.with_sigma(sigma);
  const double den = fundamental_denominator(q, h, factor);
  const double k = (1.0 - sigma) * (1.0 - sigma) + 4.0 * sigma * sigma * h * h;
  const double ps = 1.0 + sigma;
  const double denp = reading == EnergyReading::squared ? den * den : den;
  return ps * p.alpha / rho +
         ps * p.m / std::sqrt(1.0 + 4.0 * p.alpha * p.alpha * ps * ps * k / denp);
}

struct ConsistencySolve {
  double E;
  double residual;
  std::uintmax_t iterations;
};

/// Root in E of fundamental_residual on ((1+s)a/rho, (1+s)a/rho + (1+s)m).
/// rho in natural units; rho = +inf together with sigma = 0 is the
/// one-electron limit.
inline ConsistencySolve
energy_consistency_solve(double sigma, double rho, const ModelParams &p,
                         DenominatorFactor factor = DenominatorFactor::quoted) {
  if (!(sigma >= 0.0 && sigma < 1.0))
    throw invalid_argument("energy_consistency_solve: sigma must lie in [0, 1)");
  if (!(rho > 0.0))
    throw invalid_argument("energy_consistency_solve: rho must be positive");
  const ModelParams q = p.with_sigma(sigma);
  q.validate();
  const auto s = exponents(p.j1, p.j2, p.alpha);
  const double h = h_ratio(sigma, s.s1, s.s2);
  const double lo = (1.0 + sigma) * p.alpha / rho;
  const double hi = lo + (1.0 + sigma) * p.m;
  auto f = [&](double E) { return fundamental_residual(q, E, rho, h, factor); };
  const double flo = f(lo), fhi = f(hi);
  if (flo == 0.0)
    return {lo, 0.0, 0};
  if (fhi == 0.0)
    return {hi, 0.0, 0};
  if ((flo > 0.0) == (fhi > 0.0))
    throw no_root_error("energy_consistency_solve: no sign change; residual " +
                        std::to_string(flo) + " at E_lo, " +
                        std::to_string(fhi) + " at E_hi");
  std::uintmax_t iters = 200;
  const auto bracket = boost::math::tools::toms748_solve(
      f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), iters);
  const double E = 0.5 * (bracket.first + bracket.second);
  return {E, f(E), iters};
}

//==============================================================================
// Arbitration between the two readings of the printed energy expression.

struct ArbitrationRow {
  double sigma;
  double rho;          ///< natural units
  double E_root;       ///< root of fundamental_residual, quoted factor
  double E_squared;    ///< energy_relation, squared reading
  double E_unsquared;  ///< energy_relation, unsquared reading
  double E_closed;     ///< energy_closed_form
  double E_root_alt;   ///< root with the (1-s)^2 factor
};

struct Arbitration {
  std::vector<ArbitrationRow> rows;
  EnergyReading selected = EnergyReading::squared;
  /// max over rows of |E_reading - E_root| / E_root
  double squared_vs_root = 0.0;
  double unsquared_vs_root = 0.0;
  /// max over rows of |E_root - E_closed| / E_closed
  double root_vs_closed = 0.0;
  /// same with the (1-s)^2 denominator factor
  double root_alt_vs_closed = 0.0;

  std::string statement() const;
};

inline std::string Arbitration::statement() const {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "selected reading: %s (max rel. dev. from root: squared %.3e, "
                "unsquared %.3e); root vs closed form: %.3e with factor "
                "1-sigma^2, %.3e with factor (1-sigma)^2",
                to_string(selected), squared_vs_root, unsquared_vs_root,
                root_vs_closed, root_alt_vs_closed);
  return buf;
}

/// n evenly spaced sigma values strictly inside (lo, hi).
inline std::vector<double> interior_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 1; i <= n; ++i)
    out.push_back(lo + (hi - lo) * i / (n + 1));
  return out;
}

inline Arbitration arbitrate_energy_reading(const ModelParams &p,
                                  const std::vector<double> &sigmas) {
  Arbitration a;
  auto rel = [](double x, double ref) { return std::abs(x - ref) / std::abs(ref); };
  for (double sg : sigmas) {
    ArbitrationRow r{};
    r.sigma = sg;
    r.rho = rho0_natural(sg, p);
    r.E_root = energy_consistency_solve(sg, r.rho, p).E;
    r.E_root_alt =
        energy_consistency_solve(sg, r.rho, p, DenominatorFactor::squared_difference).E;
    r.E_squared = energy_relation(sg, r.rho, p, EnergyReading::squared);
    r.E_unsquared = energy_relation(sg, r.rho, p, EnergyReading::unsquared);
    r.E_closed = energy_closed_form(sg, p);
    a.squared_vs_root = std::max(a.squared_vs_root, rel(r.E_squared, r.E_root));
    a.unsquared_vs_root = std::max(a.unsquared_vs_root, rel(r.E_unsquared, r.E_root));
    a.root_vs_closed = std::max(a.root_vs_closed, rel(r.E_root, r.E_closed));
    a.root_alt_vs_closed = std::max(a.root_alt_vs_closed, rel(r.E_root_alt, r.E_closed));
    a.rows.push_back(r);
  }
  a.selected = a.squared_vs_root <= a.unsquared_vs_root ? EnergyReading::squared
                                                        : EnergyReading::unsquared;
  return a;
}

} // namespace hedirac
