#pragma once

// Aggregated self-check. Every check reports a residual against a tolerance.
//
// Invariant checks assert properties the model must have; they gate the
// outcome. Audit checks compare a quoted formula (a spin table, a component
// expansion, a kernel vector, ...) against the form derived from its
// definition, and report where the two differ. They gate only in strict mode.
// Info checks never gate.

#include "hedirac/angular.hpp"
#include "hedirac/optimizer.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace hedirac {

enum class CheckKind { invariant, audit, info };

inline const char *to_string(CheckKind k) {
  switch (k) {
  case CheckKind::invariant: return "invariant";
  case CheckKind::audit: return "audit";
  default: return "info";
  }
}

struct Check {
  std::string module;
  std::string name;
  CheckKind kind = CheckKind::invariant;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<Check> checks;
  std::string arbitration;

  bool passed(bool strict = false) const {
    for (const auto &c : checks) {
      if (c.passed || c.kind == CheckKind::info)
        continue;
      if (c.kind == CheckKind::invariant || strict)
        return false;
    }
    return true;
  }
  const Check *find(const std::string &name) const {
    for (const auto &c : checks)
      if (c.name == name)
        return &c;
    return nullptr;
  }
  void print(std::ostream &os) const;
};

inline void Report::print(std::ostream &os) const {
  char buf[256];
  int inv_ok = 0, inv_all = 0, audit_ok = 0, audit_all = 0;
  for (const auto &c : checks) {
    const char *tag = c.passed ? "PASS" : (c.kind == CheckKind::invariant ? "FAIL" : "DIFF");
    if (c.kind == CheckKind::info)
      tag = "INFO";
    std::snprintf(buf, sizeof buf, "[%s] %-9s %-36s residual=%-10.3e tol=%.1e",
                  tag, to_string(c.kind), c.name.c_str(), c.residual,
                  c.tolerance);
    os << buf;
    if (!c.detail.empty())
      os << "  " << c.detail;
    os << '\n';
    if (c.kind == CheckKind::invariant) {
      ++inv_all;
      inv_ok += c.passed;
    } else if (c.kind == CheckKind::audit) {
      ++audit_all;
      audit_ok += c.passed;
    }
  }
  os << "energy-relation arbitration: " << arbitration << '\n';
  std::snprintf(buf, sizeof buf,
                "summary: %d/%d invariants passed, %d/%d audits consistent\n",
                inv_ok, inv_all, audit_ok, audit_all);
  os << buf;
}

struct VerifyOptions {
  ModelParams params{};
  /// Gamma table examined by the Clifford checks; replaceable for fault
  /// injection.
  GammaTable gamma_table = standard_gamma_table();
  std::uint64_t seed = 20240607;
};

namespace detail {

inline std::string fmt(const char *format, double a, double b = 0.0,
                       double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

class CheckRunner {
public:
  explicit CheckRunner(Report &r) : report_(r) {}

  /// body fills residual and detail; passed = residual <= tolerance.
  void run(const char *module, const char *name, CheckKind kind,
           double tolerance, const std::function<void(Check &)> &body) {
    Check c;
    c.module = module;
    c.name = name;
    c.kind = kind;
    c.tolerance = tolerance;
    try {
      body(c);
      c.passed = c.residual <= tolerance;
    } catch (const std::exception &e) {
      c.residual = std::numeric_limits<double>::infinity();
      c.passed = false;
      c.detail = std::string("error: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

private:
  Report &report_;
};

struct RandomSpectralDraw {
  GammaRho gr;
  double sigma, beta1, beta2;
};

inline std::vector<RandomSpectralDraw> random_spectral_draws(std::size_t n,
                                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> g(0.2, 3.0), sg(0.01, 0.95),
      b(0.0, 1.5);
  std::vector<RandomSpectralDraw> out;
  while (out.size() < n) {
    RandomSpectralDraw d{{g(rng), g(rng)}, sg(rng), 0.0, b(rng)};
    const double disc =
        d.gr.gamma1 * d.gr.gamma2 - 4.0 * d.sigma * d.sigma * d.beta2 * d.beta2;
    if (disc <= 0.0)
      continue;
    d.beta1 = beta1_from_determinant(d.gr, d.sigma, d.beta2);
    out.push_back(d);
  }
  return out;
}

inline double spectral_scale(const RandomSpectralDraw &d) {
  return spectral_matrix(d.gr, d.sigma, d.beta1, d.beta2).cwiseAbs().maxCoeff();
}

} // namespace detail

//==============================================================================

inline void verify_clifford_suite(Report &report, const VerifyOptions &opt) {
  detail::CheckRunner run(report);
  const GammaTable &t = opt.gamma_table;

  run.run("clifford", "clifford.anticommutation", CheckKind::invariant, 1e-14,
          [&](Check &c) {
            const auto rep = verify_clifford(t, 1e-14);
            c.residual = rep.max_deviation();
            std::string bad;
            for (const auto &p : rep.pairs)
              if (p.deviation > 1e-14)
                bad += (bad.empty() ? "" : " ") + std::string("{g") +
                       std::to_string(p.mu) + ",g" + std::to_string(p.nu) + "}";
            c.detail = bad.empty() ? "15 pairs exact" : "violated by " + bad;
          });
  run.run("clifford", "clifford.chirality_unit_phase", CheckKind::invariant,
          1e-14, [&](Check &c) {
            const auto best = best_chirality_phase(t);
            c.residual = best.deviation;
            c.detail = detail::fmt("g5 = (%g%+gi) g0 g1 g2 g3", best.phase.real(),
                                   best.phase.imag());
          });
  run.run("clifford", "clifford.chirality_phase_minus_i", CheckKind::audit,
          1e-14, [&](Check &c) {
            c.residual = chirality_deviation(t, -I).deviation;
            c.detail = "g5 = -i g0 g1 g2 g3 cannot hold: the right side squares to -1";
          });
  run.run("clifford", "clifford.alpha1z_table", CheckKind::audit, 1e-14,
          [&](Check &c) {
            c.residual = max_abs(alpha_z(1, SpinTable::quoted) -
                                 alpha_z(1, SpinTable::product));
            c.detail = "blockdiag(-sz, sz) vs -i g5 g3";
          });
  run.run("clifford", "clifford.alpha2z_table", CheckKind::audit, 1e-14,
          [&](Check &c) {
            c.residual = max_abs(alpha_z(2, SpinTable::quoted) -
                                 alpha_z(2, SpinTable::product));
            c.detail = "blockdiag(-sz, -sz) vs -i g1 g2 = blockdiag(sz, sz)";
          });
}

inline void verify_operator_suite(Report &report, const VerifyOptions &opt) {
  detail::CheckRunner run(report);
  const ModelParams p = opt.params.with_sigma(0.3);
  const auto fields = standard_test_fields();
  const auto points = random_safe_points(20, opt.seed);
  const std::vector<double> steps{0.04, 0.02, 0.01};

  CommutationStudy study;
  run.run("operator-lab", "operator.commutator_HM_order", CheckKind::invariant,
          0.5, [&](Check &c) {
            study = commutation_study(p, fields, points, steps);
            double worst = 0.0;
            std::string ratios;
            for (double r : study.hm_ratios()) {
              worst = std::max(worst, std::abs(r - 4.0));
              ratios += detail::fmt(" %.3f", r);
            }
            c.residual = worst;
            c.detail = "|ratio - 4|; ratios" + ratios +
                       detail::fmt(", extrapolated |[H,M]| %.2e", study.hm_limit);
          });
  run.run("operator-lab", "operator.commutator_HJz_nonzero",
          CheckKind::invariant, 1e-3, [&](Check &c) {
            if (study.steps.empty())
              throw error("commutation study unavailable");
            c.residual = study.hm_limit / study.hjz_limit;
            c.detail = detail::fmt("|[H,Jz]| -> %.4f, |[H,M]| -> %.2e",
                                   study.hjz_limit, study.hm_limit);
          });
  run.run("operator-lab", "operator.quoted_spin_table", CheckKind::audit, 1e-3,
          [&](Check &c) {
            OperatorOptions o;
            o.spin = SpinTable::quoted;
            const auto q = commutation_study(p, fields, points, steps, o);
            c.residual = q.hm_limit / q.hjz_limit;
            const auto variants =
                search_commuting_variants(p, fields, points, steps.back(),
                                          SpinTable::quoted);
            // among the variants that commute, report the one with fewest flips
            auto flips = [](const CommutingVariant &v) {
              return std::count(v.kinetic_sign.begin(), v.kinetic_sign.end(), -1.0);
            };
            CommutingVariant best = variants.front();
            for (const auto &v : variants)
              if (v.residual <= 10.0 * variants.front().residual && flips(v) < flips(best))
                best = v;
            c.detail = detail::fmt(
                "with the quoted alpha_2z, [H,M] -> %.3f; commutes only after "
                "flipping kinetic signs (%+g %+g ",
                q.hm_limit, best.kinetic_sign[0], best.kinetic_sign[1]) +
                       detail::fmt("%+g %+g)", best.kinetic_sign[2],
                                   best.kinetic_sign[3]);
          });

  const ConfigPoint at{0.7, -0.4, -0.5, 0.6};
  const PointOperator reference = [&](const SpinorField &f, const ConfigPoint &x) {
    return gamma0_h_minus_e(p, f, x, 1e-3, 0.9);
  };
  const auto ref_symbol = probe_symbol(reference, at);

  run.run("operator-lab", "operator.component_system", CheckKind::audit, 1e-9,
          [&](Check &c) {
            const PointOperator eq = [&](const SpinorField &f, const ConfigPoint &x) {
              return component_system_residual(p, f, x, 1e-3, 0.9);
            };
            const auto d = compare_symbols(probe_symbol(eq, at), ref_symbol);
            c.residual = d.max();
            c.detail = "component expansion vs g0(H-E): " + d.describe();
          });
  run.run("operator-lab", "operator.left_multiplied_form", CheckKind::audit,
          1e-9, [&](Check &c) {
            const PointOperator eq = [&](const SpinorField &f, const ConfigPoint &x) {
              return left_multiplied_form(p, f, x, 1e-3, 0.9);
            };
            const auto d = compare_symbols(probe_symbol(eq, at), ref_symbol);
            c.residual = d.max();
            c.detail = "left-multiplied form vs g0(H-E): " + d.describe();
          });
  run.run("operator-lab", "operator.covariant_form", CheckKind::audit, 1e-9,
          [&](Check &c) {
            const PointOperator cov = [&](const SpinorField &f, const ConfigPoint &x) {
              return covariant_form(p, f, x, 1e-3, 0.9);
            };
            const PointOperator left = [&](const SpinorField &f, const ConfigPoint &x) {
              return left_multiplied_form(p, f, x, 1e-3, 0.9);
            };
            const auto d = compare_symbols(probe_symbol(cov, at), probe_symbol(left, at));
            c.residual = d.max();
            c.detail = "zeta.pi form vs left-multiplied form: " + d.describe();
          });
}

/// The separation probe used by verify and the acceptance suite: two smooth
/// profile families, 10 radial points, 8 angle pairs.
inline std::vector<SeparationProbe> standard_separation_probes(const ModelParams &base) {
  const ModelParams p = base.with_sigma(0.3);
  const auto s = exponents(p.j1, p.j2, p.alpha);
  std::vector<std::pair<double, double>> radial;
  for (int i = 0; i < 10; ++i)
    radial.emplace_back(0.4 + 0.13 * i, 1.6 - 0.09 * i);
  SeparationProbe a;
  a.params = p;
  a.profiles = {power_exponential(1.0, s.s1, s.s2, 0.9, 0.5),
                power_exponential(-0.6, s.s1, s.s2, 0.9, 0.5),
                power_exponential(0.4, s.s1, s.s2, 0.9, 0.5),
                power_exponential(0.8, s.s1, s.s2, 0.9, 0.5)};
  a.E = 1.1;
  a.rho0 = 0.8;
  a.radial_points = radial;
  a.angles = standard_angle_samples(8);
  SeparationProbe b = a;
  b.profiles = {gaussian_profile(1.0, 0.8, 1.0, 0.7),
                gaussian_profile(-0.5, 1.1, 0.7, 0.9),
                gaussian_profile(0.7, 0.6, 1.3, 0.6),
                gaussian_profile(0.3, 1.0, 1.0, 1.1)};
  b.E = 0.7;
  b.rho0 = 1.3;
  return {a, b};
}

inline void verify_angular_suite(Report &report, const VerifyOptions &opt) {
  detail::CheckRunner run(report);
  const auto probes = standard_separation_probes(opt.params);
  PhaseSearchResult found;
  bool have = false;
  run.run("angular", "angular.separation", CheckKind::invariant, 1e-8,
          [&](Check &c) {
            found = search_phase_assignment(probes.front(), 1e-8);
            have = true;
            double worst = found.spread;
            for (std::size_t i = 1; i < probes.size(); ++i)
              worst = std::max(worst, normalized_spread(probes[i], found.selected));
            c.residual = worst;
            c.detail = "stage " + found.stage + ": " + found.selected.describe();
          });
  run.run("angular", "angular.quoted_phases", CheckKind::audit, 1e-8,
          [&](Check &c) {
            const auto q = PhaseAssignment::quoted(opt.params.j1, opt.params.j2);
            c.residual = normalized_spread(probes.front(), q);
            c.detail = detail::fmt("phase mismatch %.1f", phase_mismatch(q));
          });
  run.run("angular", "angular.radial_system", CheckKind::audit, 0.0,
          [&](Check &c) {
            if (!have)
              throw error("no accepted phase assignment");
            const auto diffs = compare_radial_systems(
                quoted_radial_system(opt.params.j1, opt.params.j2),
                derived_radial_system(found.selected));
            c.residual = static_cast<double>(diffs.size());
            std::string d = "differing terms:";
            for (const auto &t : diffs)
              d += detail::fmt(" row%g/e%g kappa %+g->", t.row + 1.0, t.electron,
                               t.quoted.centrifugal) +
                   detail::fmt("%+g", t.derived.centrifugal);
            c.detail = diffs.empty() ? "identical" : d;
          });
}

inline void verify_radial_suite(Report &report, const VerifyOptions &opt) {
  detail::CheckRunner run(report);
  const auto draws = detail::random_spectral_draws(100, opt.seed);
  const ModelParams &p = opt.params;

  run.run("radial", "radial.determinant_factorization", CheckKind::invariant,
          1e-10, [&](Check &c) {
            std::mt19937_64 rng(opt.seed + 1);
            std::uniform_real_distribution<double> u(-2.0, 2.0);
            double worst = 0.0;
            for (int i = 0; i < 100; ++i) {
              const GammaRho gr{u(rng), u(rng)};
              const double s = 0.5 + 0.5 * u(rng) / 2.0, b1 = u(rng), b2 = u(rng);
              const double det = spectral_matrix(gr, s, b1, b2).determinant();
              const double fac = spectral_determinant_factored(gr, s, b1, b2);
              worst = std::max(worst, std::abs(det - fac) /
                                          std::max(1.0, std::abs(fac)));
            }
            c.residual = worst;
            c.detail = "100 random draws, generic determinant vs factored form";
          });
  run.run("radial", "radial.determinant_root", CheckKind::invariant, 1e-12,
          [&](Check &c) {
            double worst = 0.0;
            for (const auto &d : draws) {
              const double sc = detail::spectral_scale(d);
              worst = std::max(
                  worst, std::abs(spectral_matrix(d.gr, d.sigma, d.beta1, d.beta2)
                                      .determinant()) /
                             std::pow(sc, 4));
            }
            c.residual = worst;
            c.detail = "det / scale^4 at the determinant-route b1";
          });
  auto kernel_check = [&](bool printed, int which) {
    double worst = 0.0;
    for (const auto &d : draws) {
      const auto kv = printed ? kernel_vectors(d.gr, d.sigma, d.beta1, d.beta2)
                              : kernel_vectors_exact(d.gr, d.sigma, d.beta1, d.beta2);
      const Vec4 &psi = which == 1 ? kv.first : kv.second;
      const Mat4 m = spectral_matrix(d.gr, d.sigma, d.beta1, d.beta2);
      worst = std::max(worst, max_abs(Vec4(m * psi)) /
                                  (detail::spectral_scale(d) * max_abs(psi)));
    }
    return worst;
  };
  run.run("radial", "radial.kernel_psi1", CheckKind::invariant, 1e-10,
          [&](Check &c) { c.residual = kernel_check(true, 1); });
  run.run("radial", "radial.kernel_psi2_exact", CheckKind::invariant, 1e-10,
          [&](Check &c) {
            c.residual = kernel_check(false, 2);
            c.detail = "psi2 = (-2s b2/g2, +(1-s) b1/g2, 0, 1)";
          });
  run.run("radial", "radial.kernel_psi2_quoted", CheckKind::audit, 1e-10,
          [&](Check &c) {
            c.residual = kernel_check(true, 2);
            c.detail = "quoted psi2 has -(1-s) b1/g2 in entry 2; the residual is "
                       "-2(1-s) b1/g2 times column 2 of the matrix";
          });

  run.run("radial", "radial.indicial_first", CheckKind::invariant, 1e-12,
          [&](Check &c) {
            const double s = exponent(p.j1, p.alpha);
            const double at = std::abs(indicial_matrix(1, p.j1, s, p.alpha).determinant());
            const double off = std::min(
                std::abs(indicial_matrix(1, p.j1, s + 0.01, p.alpha).determinant()),
                std::abs(indicial_matrix(1, p.j1, s - 0.01, p.alpha).determinant()));
            c.residual = off > 1e-12 ? at : std::numeric_limits<double>::infinity();
            c.detail = detail::fmt("|det| at s: %.2e, at s+-0.01: >= %.2e", at, off);
          });
  run.run("radial", "radial.indicial_second", CheckKind::audit, 1e-12,
          [&](Check &c) {
            const double s = exponent(p.j2, p.alpha);
            c.residual = std::abs(indicial_matrix(2, p.j2, s, p.alpha).determinant());
            const double with_2a = std::abs(
                indicial_matrix(2, p.j2, s, p.alpha, 2.0 * p.alpha).determinant());
            c.detail = detail::fmt(
                "coupling 4a gives (4a^2-16a^2)^2 = 144a^4; with coupling 2a "
                "|det| = %.2e",
                with_2a);
          });
  run.run("radial", "radial.indicial_compatibility", CheckKind::info, 0.0,
          [&](Check &c) {
            const auto k = indicial_compatibility(p.j1, p.alpha);
            const auto k2 = indicial_compatibility(p.j1, p.alpha, 2.0 * p.alpha);
            c.residual = k.angle;
            c.detail = detail::fmt("largest principal angle between near-kernels "
                                   "(rad); smallest sv %.2e / %.2e; with coupling "
                                   "2a in the second system: %.3f rad",
                                   k.sv_first[1], k.sv_second[1], k2.angle);
          });
  run.run("radial", "radial.recurrence_vs_spectral", CheckKind::audit, 1e-12,
          [&](Check &c) {
            double worst = 0.0;
            int row = -1, col = -1;
            for (const auto &d : draws) {
              const ModelParams q = p.with_sigma(d.sigma);
              RadialAnsatz an;
              an.beta1 = d.beta1;
              an.beta2 = d.beta2;
              const Mat4 m = spectral_matrix(d.gr, d.sigma, d.beta1, d.beta2);
              for (int k = 0; k < 4; ++k) {
                an.a00 = Vec4::Unit(k);
                const Vec4 diff = recurrence_R(q, d.gr, an, Vec4::Zero()) - m.col(k);
                for (int i = 0; i < 4; ++i) {
                  const double rel = std::abs(diff(i)) / detail::spectral_scale(d);
                  if (rel > worst) {
                    worst = rel;
                    row = i;
                    col = k;
                  }
                }
              }
            }
            c.residual = worst;
            if (row >= 0)
              c.detail = detail::fmt("largest mismatch at row %g, coefficient a%g00",
                                     row + 1.0, col + 1.0);
          });
  run.run("radial", "radial.contraction", CheckKind::audit, 1e-10,
          [&](Check &c) {
            double worst = 0.0;
            Vec4 where = Vec4::Zero();
            for (const auto &d : draws) {
              const ModelParams q = p.with_sigma(d.sigma);
              const Vec4 psi1 = kernel_vectors(d.gr, d.sigma, d.beta1, d.beta2).first;
              const Vec4 derived =
                  contraction_coefficients(q, d.gr, d.beta1, d.beta2, psi1);
              const auto quoted = contraction_brackets(q, d.gr, d.beta1, d.beta2);
              const Vec4 diff = derived - Vec4(quoted.a110, quoted.a210, quoted.a310, 0.0);
              const double sc = std::max(1.0, max_abs(derived));
              worst = std::max(worst, max_abs(diff) / sc);
              where = where.cwiseMax(Vec4(diff.cwiseAbs() / sc));
            }
            c.residual = worst;
            c.detail = detail::fmt("quoted brackets vs psi1.R: a110 %.1e, a210 %.1e, ",
                                   where(0), where(1)) +
                       detail::fmt("a310 %.1e, a410 %.1e", where(2), where(3));
          });
}

inline void verify_spectrum_suite(Report &report, const VerifyOptions &opt) {
  detail::CheckRunner run(report);
  const ModelParams &p = opt.params;
  const auto grid = interior_grid(0.05, 0.5, 10);

  run.run("spectrum", "spectrum.c1_identity", CheckKind::invariant, 1e-12,
          [&](Check &c) {
            double worst = 0.0;
            for (double s : interior_grid(0.0, 1.0, 20)) {
              const auto cp = c_params(s, p);
              worst = std::max(worst, std::abs(cp.C1 - cp.B * cp.C2) / cp.C1);
            }
            c.residual = worst;
          });
  run.run("spectrum", "spectrum.delta_e_two_paths", CheckKind::invariant, 1e-12,
          [&](Check &c) {
            std::mt19937_64 rng(opt.seed + 2);
            std::uniform_real_distribution<long double> u(0.01L, 1.0L);
            double worst = 0.0;
            for (int i = 0; i < 20; ++i) {
              const long double s = u(rng);
              const long double a = delta_e<long double>(s, p);
              const long double b = delta_e_from_energy<long double>(s, p);
              worst = std::max(worst, static_cast<double>(std::abs(a - b) / std::abs(a)));
            }
            c.residual = worst;
            c.detail = "20 random sigma, extended precision";
          });
  run.run("spectrum", "spectrum.one_electron", CheckKind::invariant, 1e-12,
          [&](Check &c) {
            const double ref = p.m * std::sqrt(1.0 - 4.0 * p.alpha * p.alpha);
            const double closed = energy_closed_form(0.0, p);
            const double solved =
                energy_consistency_solve(0.0, std::numeric_limits<double>::infinity(), p).E;
            c.residual = std::max(std::abs(closed - ref), std::abs(solved - ref)) / ref;
            c.detail = "closed form and root solve vs m sqrt(1-4a^2)";
          });
  Arbitration arb;
  run.run("spectrum", "spectrum.energy_reading", CheckKind::invariant, 1e-9,
          [&](Check &c) {
            arb = arbitrate_energy_reading(p, grid);
            c.residual = arb.selected == EnergyReading::squared ? arb.squared_vs_root
                                                              : arb.unsquared_vs_root;
            c.detail = std::string("selected ") + to_string(arb.selected) +
                       " reading; agrees with the root of the fundamental relation";
          });
  report.arbitration = arb.rows.empty() ? "unavailable" : arb.statement();
  run.run("spectrum", "spectrum.closed_form_vs_root", CheckKind::audit, 1e-6,
          [&](Check &c) {
            if (arb.rows.empty())
              throw error("arbitration unavailable");
            c.residual = arb.root_vs_closed;
            c.detail = detail::fmt("10 sigma in (0.05, 0.5); with the factor "
                                   "(1-sigma)^2 in the denominator: %.1e",
                                   arb.root_alt_vs_closed);
          });
  run.run("spectrum", "spectrum.ion_limit", CheckKind::invariant, 1.0,
          [&](Check &c) {
            const auto r = ion_limit_report({1e-2, 1e-3, 1e-4}, p);
            double worst = 0.0;
            for (const auto &row : r.rows)
              worst = std::max(worst, row.distance / (10.0 * row.sigma));
            c.residual = worst;
            c.detail = detail::fmt("limit %.7f; |dE(s) - limit| / (10 s)", r.limit);
          });
  run.run("spectrum", "spectrum.single_well", CheckKind::invariant, 0.0,
          [&](Check &c) {
            ScanConfig cfg;
            cfg.params = p;
            cfg.sigma_min = 0.01;
            cfg.sigma_max = 0.5;
            cfg.n_points = 200;
            const auto rows = scan_sigma(cfg);
            int turns = 0;
            for (std::size_t i = 1; i + 1 < rows.size(); ++i)
              if ((rows[i].deltaE - rows[i - 1].deltaE) *
                      (rows[i + 1].deltaE - rows[i].deltaE) < 0.0)
                ++turns;
            c.residual = std::abs(turns - 1);
            c.detail = "number of interior extrema on a 200-point scan of (0.01, 0.5), minus 1";
          });
}

inline Report run_verification(const VerifyOptions &opt = {}) {
  Report r;
  verify_clifford_suite(r, opt);
  verify_operator_suite(r, opt);
  verify_angular_suite(r, opt);
  verify_radial_suite(r, opt);
  verify_spectrum_suite(r, opt);
  return r;
}

} // namespace hedirac
