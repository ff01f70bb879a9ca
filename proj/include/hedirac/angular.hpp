#pragma once

// Angular separation of the component system. Each component is written as
//   chi_k = f_k(r1, r2) exp(i (p_k th1 + q_k th2))
// with r12 frozen to a constant rho0. The operator (dx + i dy) maps
// f e^{i p th} to e^{i(p+1)th} (df/dr - p f / r), and (dx - i dy) maps it to
// e^{i(p-1)th} (df/dr + p f / r); the angles drop out of a row only if every
// term in it ends up carrying the same phase.

#include "hedirac/operator_lab.hpp"

#include <vector>

namespace hedirac {

struct PhaseAssignment {
  std::array<double, 4> theta1{}; ///< p_k
  std::array<double, 4> theta2{}; ///< q_k

  /// The assignment as commonly quoted:
  ///   (j1+1/2, -(j2+1/2)), (j1-1/2, j2+1/2), (j1-1/2, j2-1/2),
  ///   (j1+1/2, -(j2-1/2)).
  static PhaseAssignment quoted(double j1, double j2) {
    return {{j1 + 0.5, j1 - 0.5, j1 - 0.5, j1 + 0.5},
            {-(j2 + 0.5), j2 + 0.5, j2 - 0.5, -(j2 - 0.5)}};
  }

  double phase(std::size_t k, double th1, double th2) const {
    return theta1[k] * th1 + theta2[k] * th2;
  }

  std::string describe() const {
    std::string out;
    char buf[96];
    for (std::size_t k = 0; k < 4; ++k) {
      std::snprintf(buf, sizeof buf, "%sPhi%zu=(%g)th1%+gth2", k ? ", " : "",
                    k + 1, theta1[k], theta2[k]);
      out += buf;
    }
    return out;
  }
};

/// A radial profile f(r1, r2) with its analytic first derivatives.
struct RadialProfile {
  std::function<double(double, double)> value;
  std::function<double(double, double)> d_r1;
  std::function<double(double, double)> d_r2;
};
using RadialProfiles = std::array<RadialProfile, 4>;

/// a r1^s1 r2^s2 exp(-b1 r1 - b2 r2)
inline RadialProfile power_exponential(double a, double s1, double s2,
                                       double beta1, double beta2) {
  auto f = [=](double r1, double r2) {
    return a * std::pow(r1, s1) * std::pow(r2, s2) *
           std::exp(-beta1 * r1 - beta2 * r2);
  };
  return {f,
          [=](double r1, double r2) { return f(r1, r2) * (s1 / r1 - beta1); },
          [=](double r1, double r2) { return f(r1, r2) * (s2 / r2 - beta2); }};
}

/// a exp(-((r1-c1)^2 + (r2-c2)^2) / (2 w^2)): a profile with no relation to
/// the power-exponential family, for structural checks.
inline RadialProfile gaussian_profile(double a, double c1, double c2,
                                      double w) {
  auto f = [=](double r1, double r2) {
    return a * std::exp(-((r1 - c1) * (r1 - c1) + (r2 - c2) * (r2 - c2)) /
                        (2.0 * w * w));
  };
  return {f,
          [=](double r1, double r2) { return -f(r1, r2) * (r1 - c1) / (w * w); },
          [=](double r1, double r2) { return -f(r1, r2) * (r2 - c2) / (w * w); }};
}

inline RadialProfiles zero_profiles() {
  RadialProfile z{[](double, double) { return 0.0; },
                  [](double, double) { return 0.0; },
                  [](double, double) { return 0.0; }};
  return {z, z, z, z};
}

inline SpinorField build_spinor(const PhaseAssignment &assignment,
                                const RadialProfiles &profiles) {
  return [assignment, profiles](const ConfigPoint &x) {
    const double r1 = x.r1(), r2 = x.r2();
    const double th1 = x.theta1(), th2 = x.theta2();
    Spinor out;
    for (std::size_t k = 0; k < 4; ++k)
      out(static_cast<Eigen::Index>(k)) =
          profiles[k].value(r1, r2) *
          std::exp(I * assignment.phase(k, th1, th2));
    return out;
  };
}

using AnglePair = std::pair<double, double>; ///< (theta1, theta2)

/// n pairs spread over the torus, avoiding the branch cut of atan2.
inline std::vector<AnglePair> standard_angle_samples(std::size_t n) {
  std::vector<AnglePair> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n);
    out.emplace_back(-2.9 + 5.8 * t, 2.7 - 5.3 * std::fmod(0.618034 * (i + 1), 1.0));
  }
  return out;
}

/// Largest value any term of the separated system can reach at (r1, r2).
inline double profile_scale(const RadialProfiles &profiles, double r1,
                            double r2) {
  double scale = 0.0;
  for (const auto &f : profiles)
    scale = std::max(scale, std::abs(f.value(r1, r2)) +
                                std::abs(f.d_r1(r1, r2)) +
                                std::abs(f.d_r2(r1, r2)));
  return scale;
}

struct SeparationResult {
  /// max over components and angles of |R_k(angle) - R_k(angle_0)|, where
  /// R_k is the k-th component residual divided by e^{i Phi_k}.
  double spread = 0.0;
  /// R_k at the first angle sample.
  Spinor stripped = Spinor::Zero();
};

inline SeparationResult
separation_residual(const ModelParams &params,
                    const PhaseAssignment &assignment,
                    const RadialProfiles &profiles, double E,
                    const std::vector<AnglePair> &angles, double r1, double r2,
                    double rho0, double step) {
  SeparationResult result;
  if (angles.empty())
    return result;
  const SpinorField field = build_spinor(assignment, profiles);
  bool first = true;
  for (const auto &[th1, th2] : angles) {
    const ConfigPoint p = ConfigPoint::polar(r1, th1, r2, th2);
    const Spinor raw =
        component_system_residual(params, field, p, step, E, rho0);
    Spinor stripped;
    for (std::size_t k = 0; k < 4; ++k)
      stripped(static_cast<Eigen::Index>(k)) =
          raw(static_cast<Eigen::Index>(k)) *
          std::exp(-I * assignment.phase(k, th1, th2));
    if (first) {
      result.stripped = stripped;
      first = false;
    } else {
      result.spread = std::max(result.spread, max_abs(stripped - result.stripped));
    }
  }
  return result;
}

//==============================================================================
// Radial systems. Row k reads
//   q(k) f_k + (1-s) c1 (df_t1/dr1 + kappa1 f_t1 / r1)
//            + 2s   c2 (df_t2/dr2 + kappa2 f_t2 / r2)
// with q = q+ for rows 1,2 and q- for rows 3,4.

struct RadialTerm {
  double sign;
  std::size_t target;
  double centrifugal; ///< kappa
};
struct RadialRow {
  RadialTerm electron1;
  RadialTerm electron2;
};
struct RadialSystem {
  std::array<RadialRow, 4> rows;
};

/// The radial system as commonly quoted for the quoted phases.
inline RadialSystem quoted_radial_system(double j1, double j2) {
  return {{{
      {{-1.0, 2, -(j1 - 0.5)}, {-1.0, 3, -(j2 - 0.5)}},
      {{+1.0, 3, +(j1 + 0.5)}, {-1.0, 2, +(j2 - 0.5)}},
      {{-1.0, 0, +(j1 + 0.5)}, {-1.0, 1, +(j2 + 0.5)}},
      {{+1.0, 1, -(j1 - 0.5)}, {-1.0, 0, +(j2 + 0.5)}},
  }}};
}

namespace detail {
/// Operator pattern of the component system: sign, raising (dx + i dy) or
/// lowering (dx - i dy), and target component, per row and electron.
struct ComponentTerm {
  double sign;
  bool raising;
  std::size_t target;
};
inline constexpr std::array<std::array<ComponentTerm, 2>, 4> kComponentPattern{{
    {{{-1.0, true, 2}, {-1.0, false, 3}}},
    {{{+1.0, false, 3}, {-1.0, true, 2}}},
    {{{-1.0, false, 0}, {-1.0, false, 1}}},
    {{{+1.0, true, 1}, {-1.0, true, 0}}},
}};
} // namespace detail

/// Radial system obtained by separating the component system with the given
/// phases (kappa = -p for raising, +p for lowering operators).
inline RadialSystem derived_radial_system(const PhaseAssignment &a) {
  RadialSystem sys;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto &[e1, e2] = detail::kComponentPattern[k];
    const double p = a.theta1[e1.target], q = a.theta2[e2.target];
    sys.rows[k].electron1 = {e1.sign, e1.target, e1.raising ? -p : p};
    sys.rows[k].electron2 = {e2.sign, e2.target, e2.raising ? -q : q};
  }
  return sys;
}

/// Phase mismatch of every term against its row, for the given assignment;
/// zero iff the angles cancel structurally.
inline double phase_mismatch(const PhaseAssignment &a) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto &[e1, e2] = detail::kComponentPattern[k];
    const double shift1 = e1.raising ? 1.0 : -1.0;
    const double shift2 = e2.raising ? 1.0 : -1.0;
    worst = std::max({worst,
                      std::abs(a.theta1[e1.target] + shift1 - a.theta1[k]),
                      std::abs(a.theta2[e1.target] - a.theta2[k]),
                      std::abs(a.theta1[e2.target] - a.theta1[k]),
                      std::abs(a.theta2[e2.target] + shift2 - a.theta2[k])});
  }
  return worst;
}

inline Vec4 radial_system_residual(const ModelParams &params,
                                   const RadialProfiles &f, double E,
                                   double rho0, double r1, double r2,
                                   const RadialSystem &system) {
  const double s = params.sigma, a = params.alpha;
  const double phi = -2.0 * (1.0 - s) * a / r1 - 4.0 * s * a / r2 +
                     (1.0 + s) * a / rho0;
  const double q_plus = (1.0 + s) * params.m + (phi - E);
  const double q_minus = (1.0 + s) * params.m - (phi - E);
  Vec4 out;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto &row = system.rows[k];
    const auto &t1 = row.electron1;
    const auto &t2 = row.electron2;
    const double diag = (k < 2 ? q_plus : q_minus) * f[k].value(r1, r2);
    const double e1 = t1.sign * (f[t1.target].d_r1(r1, r2) +
                                 t1.centrifugal / r1 * f[t1.target].value(r1, r2));
    const double e2 = t2.sign * (f[t2.target].d_r2(r1, r2) +
                                 t2.centrifugal / r2 * f[t2.target].value(r1, r2));
    out(static_cast<Eigen::Index>(k)) =
        diag + (1.0 - s) * e1 + 2.0 * s * e2;
  }
  return out;
}

struct RadialTermDifference {
  std::size_t row;
  int electron; ///< 1 or 2
  RadialTerm quoted;
  RadialTerm derived;
};

inline std::vector<RadialTermDifference>
compare_radial_systems(const RadialSystem &quoted, const RadialSystem &derived,
                       double tolerance = 1e-12) {
  std::vector<RadialTermDifference> out;
  auto differs = [tolerance](const RadialTerm &x, const RadialTerm &y) {
    return x.target != y.target || std::abs(x.sign - y.sign) > tolerance ||
           std::abs(x.centrifugal - y.centrifugal) > tolerance;
  };
  for (std::size_t k = 0; k < 4; ++k) {
    if (differs(quoted.rows[k].electron1, derived.rows[k].electron1))
      out.push_back({k, 1, quoted.rows[k].electron1, derived.rows[k].electron1});
    if (differs(quoted.rows[k].electron2, derived.rows[k].electron2))
      out.push_back({k, 2, quoted.rows[k].electron2, derived.rows[k].electron2});
  }
  return out;
}

//==============================================================================
// Phase-assignment search

struct PhaseSearchResult {
  PhaseAssignment selected;
  std::string stage; ///< "quoted", "sign-flip" or "half-offset"
  double spread = 0.0;        ///< normalized spread of the selected variant
  double quoted_spread = 0.0; ///< normalized spread of the quoted variant
  std::size_t candidates = 0;
};

struct SeparationProbe {
  ModelParams params;
  RadialProfiles profiles;
  double E = 0.0;
  double rho0 = 1.0;
  std::vector<std::pair<double, double>> radial_points; ///< (r1, r2)
  std::vector<AnglePair> angles;
  double step = 1e-5;
};

/// Spread over all radial points, divided by the profile scale there.
inline double normalized_spread(const SeparationProbe &probe,
                                const PhaseAssignment &a) {
  double worst = 0.0;
  for (const auto &[r1, r2] : probe.radial_points) {
    const auto res = separation_residual(probe.params, a, probe.profiles,
                                         probe.E, probe.angles, r1, r2,
                                         probe.rho0, probe.step);
    worst = std::max(worst, res.spread / profile_scale(probe.profiles, r1, r2));
  }
  return worst;
}

/// Tries, in order: the quoted phases; all 256 sign patterns of the th1 and
/// th2 coefficients; all 256 choices p_k, q_k in {j - 1/2, j + 1/2}. Returns
/// the first stage whose best candidate meets `tolerance`, or the overall best.
inline PhaseSearchResult search_phase_assignment(const SeparationProbe &probe,
                                                 double tolerance) {
  const double j1 = probe.params.j1, j2 = probe.params.j2;
  const PhaseAssignment quoted = PhaseAssignment::quoted(j1, j2);

  PhaseSearchResult best;
  best.selected = quoted;
  best.stage = "quoted";
  best.quoted_spread = normalized_spread(probe, quoted);
  best.spread = best.quoted_spread;
  best.candidates = 1;
  if (best.spread <= tolerance)
    return best;

  auto run_stage = [&](const char *name, auto make) {
    for (int mask = 0; mask < 256; ++mask) {
      const PhaseAssignment cand = make(mask);
      ++best.candidates;
      const double spread = normalized_spread(probe, cand);
      if (spread < best.spread) {
        best.spread = spread;
        best.selected = cand;
        best.stage = name;
      }
    }
    return best.spread <= tolerance;
  };

  if (run_stage("sign-flip", [&](int mask) {
        PhaseAssignment c = quoted;
        for (std::size_t k = 0; k < 4; ++k) {
          if (mask >> k & 1)
            c.theta2[k] = -c.theta2[k];
          if (mask >> (k + 4) & 1)
            c.theta1[k] = -c.theta1[k];
        }
        return c;
      }))
    return best;

  run_stage("half-offset", [&](int mask) {
    PhaseAssignment c;
    for (std::size_t k = 0; k < 4; ++k) {
      c.theta1[k] = j1 + (mask >> k & 1 ? 0.5 : -0.5);
      c.theta2[k] = j2 + (mask >> (k + 4) & 1 ? 0.5 : -0.5);
    }
    return c;
  });
  return best;
}

} // namespace hedirac
