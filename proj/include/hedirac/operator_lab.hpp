#pragma once

// Matrix-valued first-order differential operators on four-spinor fields over
// the planar configuration space (x1, y1, x2, y2), evaluated with second-order
// central differences.
//
//   H  = (1-s)[i(g3 dx1 - g5 dy1) - 2a/r1] + 2s[i(g2 dx2 - g1 dy2) - 2a/r2]
//        + (1+s)(m g0 + a/r12)
//   Jz = i y1 dx1 - i x1 dy1 + i y2 dx2 - i x2 dy2
//   M  = Jz + 1/2 (alpha_1z + alpha_2z)

#include "hedirac/clifford.hpp"
#include "hedirac/model.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace hedirac {

using SpinorField = std::function<Spinor(const ConfigPoint &)>;
using Gradient = std::array<Spinor, 4>; ///< indexed by Axis

inline Spinor partial(const SpinorField &f, const ConfigPoint &p, int axis,
                      double step) {
  return (f(p.shifted(axis, step)) - f(p.shifted(axis, -step))) / (2.0 * step);
}

inline Gradient gradient(const SpinorField &f, const ConfigPoint &p,
                         double step) {
  return {partial(f, p, X1, step), partial(f, p, Y1, step),
          partial(f, p, X2, step), partial(f, p, Y2, step)};
}

/// Every radius must exceed 4 * step. r12 is skipped when rho is frozen.
inline void require_safe(const ConfigPoint &p, double step,
                         bool check_r12 = true) {
  if (!(step > 0.0))
    throw invalid_argument("finite-difference step must be positive");
  const double margin = 4.0 * step;
  if (p.r1() <= margin || p.r2() <= margin || (check_r12 && p.r12() <= margin))
    throw singular_point_error("evaluation point within 4*step of a "
                               "Coulomb singularity");
}

//==============================================================================
// Operator variants. The default is the operator exactly as written above;
// the knobs exist for the commutation audit.

struct OperatorOptions {
  /// Multipliers of the g3 dx1, g5 dy1, g2 dx2 and g1 dy2 terms of H.
  std::array<double, 4> kinetic_sign{1.0, 1.0, 1.0, 1.0};
  /// Which alpha_z matrices enter M.
  SpinTable spin = SpinTable::product;
  /// Replace r12 by a constant inside every potential.
  std::optional<double> frozen_rho;
};

namespace detail {

inline double inv_r12(const ConfigPoint &p, const OperatorOptions &o) {
  return 1.0 / (o.frozen_rho ? *o.frozen_rho : p.r12());
}

inline Spinor h_unchecked(const ModelParams &prm, const SpinorField &f,
                          const ConfigPoint &p, double step,
                          const OperatorOptions &o) {
  static const Mat4C g0 = gamma(0), g1 = gamma(1), g2 = gamma(2),
                     g3 = gamma(3), g5 = gamma(5);
  const Spinor psi = f(p);
  const Gradient d = gradient(f, p, step);
  const double s = prm.sigma, a = prm.alpha;
  const auto &k = o.kinetic_sign;

  const Spinor electron1 =
      I * (k[0] * (g3 * d[X1]) - k[1] * (g5 * d[Y1])) - (2.0 * a / p.r1()) * psi;
  const Spinor electron2 =
      I * (k[2] * (g2 * d[X2]) - k[3] * (g1 * d[Y2])) - (2.0 * a / p.r2()) * psi;
  const Spinor shared = prm.m * (g0 * psi) + a * inv_r12(p, o) * psi;
  return (1.0 - s) * electron1 + 2.0 * s * electron2 + (1.0 + s) * shared;
}

inline Spinor jz_unchecked(const SpinorField &f, const ConfigPoint &p,
                           double step) {
  const Gradient d = gradient(f, p, step);
  return I * (p.y1 * d[X1] - p.x1 * d[Y1] + p.y2 * d[X2] - p.x2 * d[Y2]);
}

inline Spinor m_unchecked(const SpinorField &f, const ConfigPoint &p,
                          double step, const OperatorOptions &o) {
  return jz_unchecked(f, p, step) + spin_z(o.spin) * f(p);
}

} // namespace detail

inline Spinor apply_H(const ModelParams &params, const SpinorField &field,
                      const ConfigPoint &point, double step,
                      const OperatorOptions &options = {}) {
  require_safe(point, step, !options.frozen_rho);
  return detail::h_unchecked(params, field, point, step, options);
}

inline Spinor apply_Jz(const SpinorField &field, const ConfigPoint &point,
                       double step) {
  require_safe(point, step);
  return detail::jz_unchecked(field, point, step);
}

inline Spinor apply_M(const SpinorField &field, const ConfigPoint &point,
                      double step, const OperatorOptions &options = {}) {
  require_safe(point, step);
  return detail::m_unchecked(field, point, step, options);
}

//==============================================================================
// Composition and commutators

enum class OperatorTag { H, Jz, M };

inline const char *to_string(OperatorTag t) {
  switch (t) {
  case OperatorTag::H: return "H";
  case OperatorTag::Jz: return "Jz";
  default: return "M";
  }
}

/// The field x -> (op field)(x). Evaluation is unchecked, so nested stencils
/// may approach (but, for checked outer points, never reach) singularities.
inline SpinorField lift(OperatorTag tag, const ModelParams &params,
                        SpinorField field, double step,
                        const OperatorOptions &options = {}) {
  switch (tag) {
  case OperatorTag::H:
    return [=](const ConfigPoint &p) {
      return detail::h_unchecked(params, field, p, step, options);
    };
  case OperatorTag::Jz:
    return [=](const ConfigPoint &p) {
      return detail::jz_unchecked(field, p, step);
    };
  default:
    return [=](const ConfigPoint &p) {
      return detail::m_unchecked(field, p, step, options);
    };
  }
}

/// (A B - B A) field at every point. Both factors use the same step; the inner
/// operator is applied first and differentiated by the outer stencil.
inline std::vector<Spinor>
commutator_values(OperatorTag a, OperatorTag b, const ModelParams &params,
                  const SpinorField &field,
                  const std::vector<ConfigPoint> &points, double step,
                  const OperatorOptions &options = {}) {
  const SpinorField ab =
      lift(a, params, lift(b, params, field, step, options), step, options);
  const SpinorField ba =
      lift(b, params, lift(a, params, field, step, options), step, options);
  std::vector<Spinor> out;
  out.reserve(points.size());
  for (const auto &p : points) {
    require_safe(p, step, !options.frozen_rho);
    out.push_back(ab(p) - ba(p));
  }
  return out;
}

inline double commutator_residual(OperatorTag a, OperatorTag b,
                                  const ModelParams &params,
                                  const SpinorField &field,
                                  const std::vector<ConfigPoint> &points,
                                  double step,
                                  const OperatorOptions &options = {}) {
  double worst = 0.0;
  for (const auto &v :
       commutator_values(a, b, params, field, points, step, options))
    worst = std::max(worst, max_abs(v));
  return worst;
}

/// Convergence study of [H, M] and [H, Jz] under step halving.
struct CommutationStudy {
  std::vector<double> steps;
  std::vector<double> hm;  ///< max |[H,M] psi| per step
  std::vector<double> hjz; ///< max |[H,Jz] psi| per step
  /// Richardson limit max |(4 C(h/2) - C(h)) / 3| from the two finest steps.
  double hm_limit = 0.0;
  double hjz_limit = 0.0;

  /// C(h) / C(h/2) for consecutive steps.
  std::vector<double> hm_ratios() const {
    std::vector<double> out;
    for (std::size_t i = 1; i < hm.size(); ++i)
      out.push_back(hm[i - 1] / hm[i]);
    return out;
  }
};

/// steps must be successive halvings, coarsest first.
inline CommutationStudy
commutation_study(const ModelParams &params,
                  const std::vector<SpinorField> &fields,
                  const std::vector<ConfigPoint> &points,
                  const std::vector<double> &steps,
                  const OperatorOptions &options = {}) {
  if (steps.size() < 2)
    throw invalid_argument("commutation_study: need at least two steps");
  CommutationStudy st;
  st.steps = steps;
  std::vector<std::vector<Spinor>> hm_prev, hjz_prev;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    double worst_hm = 0.0, worst_hjz = 0.0;
    std::vector<std::vector<Spinor>> hm_cur, hjz_cur;
    for (const auto &f : fields) {
      hm_cur.push_back(commutator_values(OperatorTag::H, OperatorTag::M,
                                         params, f, points, steps[i], options));
      hjz_cur.push_back(commutator_values(OperatorTag::H, OperatorTag::Jz,
                                          params, f, points, steps[i], options));
      for (const auto &v : hm_cur.back())
        worst_hm = std::max(worst_hm, max_abs(v));
      for (const auto &v : hjz_cur.back())
        worst_hjz = std::max(worst_hjz, max_abs(v));
    }
    st.hm.push_back(worst_hm);
    st.hjz.push_back(worst_hjz);
    if (i + 1 == steps.size()) {
      for (std::size_t f = 0; f < fields.size(); ++f) {
        for (std::size_t k = 0; k < points.size(); ++k) {
          st.hm_limit = std::max(
              st.hm_limit, max_abs(Spinor((4.0 * hm_cur[f][k] - hm_prev[f][k]) / 3.0)));
          st.hjz_limit = std::max(
              st.hjz_limit, max_abs(Spinor((4.0 * hjz_cur[f][k] - hjz_prev[f][k]) / 3.0)));
        }
      }
    }
    hm_prev = std::move(hm_cur);
    hjz_prev = std::move(hjz_cur);
  }
  return st;
}

//==============================================================================
// Equivalent forms of the eigenvalue equation gamma^0 (H - E) psi = 0.

/// gamma^0 (H - E) psi, through the matrix assembly of H.
inline Spinor gamma0_h_minus_e(const ModelParams &params,
                               const SpinorField &field,
                               const ConfigPoint &point, double step, double E,
                               const OperatorOptions &options = {}) {
  const Spinor h = apply_H(params, field, point, step, options);
  return gamma(0) * (h - E * field(point));
}

/// The four component equations written out with q+- = (1+s)m +- (phi - E):
///   q+ c1 - (1-s)(dx1 + i dy1) c3 + 2s(-dx2 + i dy2) c4
///   q+ c2 + (1-s)(dx1 - i dy1) c4 - 2s(dx2 + i dy2) c3
///   q- c3 + (1-s)(-dx1 + i dy1) c1 + 2s(-dx2 + i dy2) c2
///   q- c4 + (1-s)(dx1 + i dy1) c2 - 2s(dx2 + i dy2) c1
inline Spinor component_system_residual(
    const ModelParams &params, const SpinorField &field,
    const ConfigPoint &point, double step, double E,
    std::optional<double> frozen_rho = std::nullopt) {
  require_safe(point, step, !frozen_rho);
  const Spinor c = field(point);
  const Gradient d = gradient(field, point, step);
  const double s = params.sigma;
  const double phi = phi12(params, point, frozen_rho);
  const double q_plus = (1.0 + s) * params.m + (phi - E);
  const double q_minus = (1.0 + s) * params.m - (phi - E);
  const double w1 = 1.0 - s, w2 = 2.0 * s;

  Spinor r;
  r(0) = q_plus * c(0) - w1 * (d[X1](2) + I * d[Y1](2)) +
         w2 * (-d[X2](3) + I * d[Y2](3));
  r(1) = q_plus * c(1) + w1 * (d[X1](3) - I * d[Y1](3)) -
         w2 * (d[X2](2) + I * d[Y2](2));
  r(2) = q_minus * c(2) + w1 * (-d[X1](0) + I * d[Y1](0)) +
         w2 * (-d[X2](1) + I * d[Y2](1));
  r(3) = q_minus * c(3) + w1 * (d[X1](1) + I * d[Y1](1)) -
         w2 * (d[X2](0) + I * d[Y2](0));
  return r;
}

/// [(phi - E) g0 + i(1-s)(g0 g5 dx1 - g0 g3 dy1)
///   + 2is(g0 g1 dx2 - g0 g2 dy2) + (1+s)m] psi
inline Spinor left_multiplied_form(const ModelParams &params,
                                   const SpinorField &field,
                                   const ConfigPoint &point, double step,
                                   double E) {
  require_safe(point, step);
  const Mat4C g0 = gamma(0);
  const Spinor psi = field(point);
  const Gradient d = gradient(field, point, step);
  const double s = params.sigma;
  const double phi = phi12(params, point);
  return (phi - E) * (g0 * psi) +
         I * (1.0 - s) * (g0 * gamma(5) * d[X1] - g0 * gamma(3) * d[Y1]) +
         2.0 * I * s * (g0 * gamma(1) * d[X2] - g0 * gamma(2) * d[Y2]) +
         (1.0 + s) * params.m * psi;
}

/// [(1-s) zeta_1mu pi_1^mu + 2s zeta_2mu pi_2^mu] psi with
///   zeta_1 = (-1, -g0 g5, g0 g3, g0), zeta_2 = (-1, -g0 g1, g0 g2, g0),
///   pi_k   = (m, -i dx_k, -i dy_k, -2a/r_k + a/r12 - E).
inline Spinor covariant_form(const ModelParams &params,
                             const SpinorField &field,
                             const ConfigPoint &point, double step, double E) {
  require_safe(point, step);
  const Mat4C g0 = gamma(0);
  const Mat4C one = Mat4C::Identity();
  const Spinor psi = field(point);
  const Gradient d = gradient(field, point, step);
  const double s = params.sigma, a = params.alpha;

  auto contract = [&](const std::array<Mat4C, 4> &zeta, const Spinor &dx,
                      const Spinor &dy, double r) -> Spinor {
    const double pi3 = -2.0 * a / r + a / point.r12() - E;
    return zeta[0] * (params.m * psi) + zeta[1] * (-I * dx) +
           zeta[2] * (-I * dy) + zeta[3] * (pi3 * psi);
  };
  const std::array<Mat4C, 4> zeta1{-one, -g0 * gamma(5), g0 * gamma(3), g0};
  const std::array<Mat4C, 4> zeta2{-one, -g0 * gamma(1), g0 * gamma(2), g0};
  return (1.0 - s) * contract(zeta1, d[X1], d[Y1], point.r1()) +
         2.0 * s * contract(zeta2, d[X2], d[Y2], point.r2());
}

/// max |covariant form - gamma^0 (H - E) psi|
inline double covariant_form_residual(const ModelParams &params,
                                      const SpinorField &field,
                                      const ConfigPoint &point, double step,
                                      double E) {
  return max_abs(covariant_form(params, field, point, step, E) -
                 gamma0_h_minus_e(params, field, point, step, E));
}

//==============================================================================
// Symbol extraction. A first-order operator L acts as
//   L psi = A psi + sum_a B_a d_a psi.
// Probing L with constant and linear fields recovers A and B_a exactly
// (central differences are exact on linear fields), which localizes any
// disagreement between two forms to a single coefficient matrix.

using PointOperator =
    std::function<Spinor(const SpinorField &, const ConfigPoint &)>;

struct FirstOrderSymbol {
  Mat4C scalar;
  std::array<Mat4C, 4> derivative; ///< indexed by Axis
};

inline FirstOrderSymbol probe_symbol(const PointOperator &op,
                                     const ConfigPoint &at) {
  FirstOrderSymbol sym;
  for (int k = 0; k < 4; ++k) {
    const Spinor unit = Spinor::Unit(k);
    const SpinorField constant = [unit](const ConfigPoint &) { return unit; };
    sym.scalar.col(k) = op(constant, at);
    for (int axis = 0; axis < 4; ++axis) {
      const double origin = at[axis];
      const SpinorField linear = [unit, axis, origin](const ConfigPoint &x) {
        return Spinor((x[axis] - origin) * unit);
      };
      // the linear field vanishes at `at`, so only B_a survives
      sym.derivative[static_cast<std::size_t>(axis)].col(k) = op(linear, at);
    }
  }
  return sym;
}

struct SymbolDifference {
  double scalar = 0.0;
  std::array<double, 4> derivative{}; ///< indexed by Axis

  double max() const {
    return std::max(scalar,
                    *std::max_element(derivative.begin(), derivative.end()));
  }
  /// e.g. "scalar=0 dx1=0 dy1=0 dx2=1.2 dy2=1.2"
  std::string describe() const;
};

inline SymbolDifference compare_symbols(const FirstOrderSymbol &a,
                                        const FirstOrderSymbol &b) {
  SymbolDifference d;
  d.scalar = max_abs(a.scalar - b.scalar);
  for (std::size_t i = 0; i < 4; ++i)
    d.derivative[i] = max_abs(a.derivative[i] - b.derivative[i]);
  return d;
}

inline std::string SymbolDifference::describe() const {
  static const char *names[] = {"dx1", "dy1", "dx2", "dy2"};
  char buf[160];
  std::snprintf(buf, sizeof buf, "scalar=%.3g", scalar);
  std::string out = buf;
  for (std::size_t i = 0; i < 4; ++i) {
    std::snprintf(buf, sizeof buf, " %s=%.3g", names[i], derivative[i]);
    out += buf;
  }
  return out;
}

//==============================================================================
// Test-field families

/// Gaussian envelope x per-component affine polynomial x e^{i(n1 th1 + n2 th2)}
struct GaussianTestField {
  std::array<double, 4> center{0.0, 0.0, 0.0, 0.0};
  double width = 1.0;
  std::array<Complex, 4> amplitude{1.0, 1.0, 1.0, 1.0};
  /// linear[k][axis]: slope of component k's polynomial along axis.
  std::array<std::array<double, 4>, 4> linear{};
  int n1 = 0;
  int n2 = 0;

  Spinor operator()(const ConfigPoint &p) const {
    double r2 = 0.0;
    std::array<double, 4> u{};
    for (int a = 0; a < 4; ++a) {
      u[static_cast<std::size_t>(a)] = p[a] - center[static_cast<std::size_t>(a)];
      r2 += u[static_cast<std::size_t>(a)] * u[static_cast<std::size_t>(a)];
    }
    Complex envelope = std::exp(-r2 / (2.0 * width * width));
    if (n1 != 0 || n2 != 0)
      envelope *= std::exp(I * (n1 * p.theta1() + n2 * p.theta2()));
    Spinor out;
    for (std::size_t k = 0; k < 4; ++k) {
      double poly = 1.0;
      for (std::size_t a = 0; a < 4; ++a)
        poly += linear[k][a] * u[a];
      out(static_cast<Eigen::Index>(k)) = amplitude[k] * poly * envelope;
    }
    return out;
  }
};

/// e^{i k.x} times a constant spinor.
struct PlaneWaveField {
  std::array<double, 4> wavevector{0.0, 0.0, 0.0, 0.0};
  Spinor amplitude = Spinor::Ones();

  Spinor operator()(const ConfigPoint &p) const {
    double phase = 0.0;
    for (std::size_t a = 0; a < 4; ++a)
      phase += wavevector[a] * p[static_cast<int>(a)];
    return std::exp(I * phase) * amplitude;
  }
};

/// Three structurally different smooth fields used by the commutation suite.
inline std::vector<SpinorField> standard_test_fields() {
  GaussianTestField a;
  a.center = {0.4, -0.2, -0.3, 0.5};
  a.width = 1.1;
  a.amplitude = {1.0, Complex{0.3, -0.7}, -0.5, Complex{0.0, 0.8}};
  a.linear = {{{0.2, -0.1, 0.3, 0.0},
               {0.0, 0.4, -0.2, 0.1},
               {-0.3, 0.0, 0.1, 0.2},
               {0.1, 0.1, 0.0, -0.4}}};

  GaussianTestField b;
  b.center = {-0.5, 0.3, 0.6, 0.2};
  b.width = 0.9;
  b.amplitude = {Complex{0.2, 0.4}, 0.9, Complex{-0.6, 0.1}, 0.3};
  b.linear = {{{-0.4, 0.2, 0.0, 0.3},
               {0.1, -0.3, 0.2, 0.0},
               {0.0, 0.1, -0.2, 0.4},
               {0.3, 0.0, 0.2, 0.1}}};
  b.n1 = 1;

  GaussianTestField c;
  c.center = {0.1, 0.7, -0.4, -0.6};
  c.width = 1.3;
  c.amplitude = {0.7, -0.2, Complex{0.5, 0.5}, Complex{-0.1, 0.6}};
  c.n1 = 1;
  c.n2 = -2;

  return {a, b, c};
}

/// Uniform points in [-extent, extent]^4 with r1, r2, r12 >= min_radius.
inline std::vector<ConfigPoint> random_safe_points(std::size_t count,
                                                   std::uint64_t seed,
                                                   double min_radius = 0.3,
                                                   double extent = 1.2) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-extent, extent);
  std::vector<ConfigPoint> out;
  while (out.size() < count) {
    ConfigPoint p{coord(rng), coord(rng), coord(rng), coord(rng)};
    if (p.r1() >= min_radius && p.r2() >= min_radius && p.r12() >= min_radius)
      out.push_back(p);
  }
  return out;
}

//==============================================================================
// Commutation audit: which sign pattern of the four kinetic terms of H
// commutes with M built from a given spin table.

struct CommutingVariant {
  std::array<double, 4> kinetic_sign;
  double residual;
};

inline std::vector<CommutingVariant>
search_commuting_variants(const ModelParams &params,
                          const std::vector<SpinorField> &fields,
                          const std::vector<ConfigPoint> &points, double step,
                          SpinTable spin) {
  std::vector<CommutingVariant> out;
  for (int mask = 0; mask < 16; ++mask) {
    OperatorOptions o;
    o.spin = spin;
    for (std::size_t t = 0; t < 4; ++t)
      o.kinetic_sign[t] = (mask >> t) & 1 ? -1.0 : 1.0;
    double worst = 0.0;
    for (const auto &f : fields)
      worst = std::max(worst, commutator_residual(OperatorTag::H,
                                                  OperatorTag::M, params, f,
                                                  points, step, o));
    out.push_back({o.kinetic_sign, worst});
  }
  std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
    return x.residual < y.residual;
  });
  return out;
}

} // namespace hedirac
