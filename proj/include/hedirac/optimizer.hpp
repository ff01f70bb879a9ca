#pragma once

#include "hedirac/spectrum.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace hedirac {

struct ScanConfig {
  double sigma_min = 0.01;
  double sigma_max = 0.5;
  int n_points = 50;
  ModelParams params{};

  void validate() const {
    if (!(sigma_min > 0.0 && sigma_max <= 1.0))
      throw invalid_argument("scan: sigma range must lie in (0, 1]");
    if (!(sigma_min < sigma_max))
      throw invalid_argument("scan: sigma_min must be below sigma_max");
    if (n_points < 2)
      throw invalid_argument("scan: at least two points are required");
    params.validate();
  }
};

/// Uniform grid, ascending. A point whose evaluation throws is kept with its
/// error text and NaN fields; the scan continues.
inline std::vector<EquilibriumPoint> scan_sigma(const ScanConfig &config) {
  config.validate();
  std::vector<EquilibriumPoint> rows;
  rows.reserve(static_cast<std::size_t>(config.n_points));
  const double step =
      (config.sigma_max - config.sigma_min) / (config.n_points - 1);
  for (int i = 0; i < config.n_points; ++i) {
    const double sigma =
        i == config.n_points - 1 ? config.sigma_max : config.sigma_min + i * step;
    try {
      rows.push_back(equilibrium_point(sigma, config.params));
    } catch (const error &e) {
      EquilibriumPoint bad;
      const double nan = std::numeric_limits<double>::quiet_NaN();
      bad.sigma = sigma;
      bad.deltaE = bad.rho0 = bad.r10 = bad.r20 = bad.E = nan;
      bad.error = e.what();
      rows.push_back(bad);
    }
  }
  return rows;
}

struct GoldenResult {
  double x;
  double fx;
  double lo, hi; ///< final bracket
  int iterations;
};

/// Pre-scan used to reject brackets without a single interior well: the
/// sampled values must decrease strictly to one interior minimum and then
/// increase strictly.
inline void require_unimodal(const std::function<double(double)> &f, double lo,
                             double hi, int samples = 32) {
  std::vector<double> v(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i)
    v[static_cast<std::size_t>(i)] = f(lo + (hi - lo) * i / (samples - 1));
  std::size_t k = 0;
  while (k + 1 < v.size() && v[k + 1] < v[k])
    ++k;
  std::size_t rest = k;
  while (rest + 1 < v.size() && v[rest + 1] > v[rest])
    ++rest;
  if (k == 0 || k + 1 == v.size() || rest + 1 != v.size())
    throw non_unimodal_error(
        "bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
        "] does not contain a single interior minimum; widen or narrow it");
}

/// Golden-section search until hi - lo <= tol.
inline GoldenResult golden_section(const std::function<double(double)> &f,
                                   double lo, double hi, double tol) {
  if (!(tol > 0.0))
    throw invalid_argument("golden_section: tolerance must be positive");
  if (lo > hi)
    std::swap(lo, hi);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  int it = 0;
  while (hi - lo > tol) {
    ++it;
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x), lo, hi, it};
}

struct MinimizeResult {
  EquilibriumPoint point;
  int iterations = 0;
  std::pair<double, double> bracket;
  double tolerance_achieved = 0.0;
};

/// Unimodality pre-scan followed by golden-section search on f; f defaults to
/// delta_e and can be replaced to test the solver on a known function.
inline MinimizeResult
minimize_delta_e(std::pair<double, double> bracket, double tol,
                 const ModelParams &params,
                 std::function<double(double)> f = nullptr) {
  if (!(tol > 0.0))
    throw invalid_argument("minimize: tolerance must be positive");
  params.validate();
  auto [lo, hi] = bracket;
  if (lo > hi)
    std::swap(lo, hi);
  if (!(lo > 0.0 && hi <= 1.0 && lo < hi))
    throw invalid_argument("minimize: bracket must be a non-empty interval in (0, 1]");
  if (!f)
    f = [&params](double s) { return delta_e(s, params); };
  require_unimodal(f, lo, hi);
  const auto g = golden_section(f, lo, hi, tol);
  MinimizeResult r;
  r.point = equilibrium_point(g.x, params);
  r.iterations = g.iterations;
  r.bracket = {g.lo, g.hi};
  r.tolerance_achieved = g.hi - g.lo;
  return r;
}

struct IonLimitRow {
  double sigma;
  double delta_e;
  double distance; ///< |delta_e - limit|
};

struct IonLimitReport {
  double limit;
  std::vector<IonLimitRow> rows;
};

inline IonLimitReport ion_limit_report(const std::vector<double> &sigmas,
                                       const ModelParams &params) {
  IonLimitReport r{ion_limit_value(params.alpha), {}};
  for (double s : sigmas) {
    if (!(s > 0.0))
      throw invalid_argument("ion_limit_report: sigma values must be positive");
    const double de = delta_e(s, params);
    r.rows.push_back({s, de, std::abs(de - r.limit)});
  }
  return r;
}

} // namespace hedirac
