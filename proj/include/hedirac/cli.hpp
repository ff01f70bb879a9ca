#pragma once

// Command implementations behind the hedirac tool. Each command writes to the
// given streams and returns the process exit code; argument parsing lives in
// tools/hedirac_cli.cpp.

#include "hedirac/verify.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hedirac::cli {

inline constexpr const char *kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kNumeric = 3,
};

enum class Command { verify, scan, minimize, ion_limit };
enum class Format { csv, json };

/// Reference values for the minimize comparison lines.
inline constexpr double kReferenceDeltaE = -2.90589;
inline constexpr double kExperimentDeltaE = -2.90330;

struct RunConfig {
  Command command = Command::verify;
  ModelParams params{};
  double sigma_min = 0.05;
  double sigma_max = 0.5;
  int points = 100;
  double tol = 1e-6;
  int decades = 4;
  std::string output; ///< empty: the output stream passed to run()
  Format format = Format::csv;
  bool strict = false;
  /// Test hook: replaces the gamma table seen by the Clifford checks.
  std::optional<GammaTable> gamma_table;
};

inline const char *csv_header() {
  return "sigma,delta_e_hartree,rho0_bohr,r10_bohr,r20_bohr";
}

/// %.17g: lossless for binary64.
inline std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_scan_csv(std::ostream &os,
                           const std::vector<EquilibriumPoint> &rows) {
  os << csv_header() << '\n';
  for (const auto &r : rows)
    os << format_real(r.sigma) << ',' << format_real(r.deltaE) << ','
       << format_real(r.rho0) << ',' << format_real(r.r10) << ','
       << format_real(r.r20) << '\n';
}

/// Number or null for non-finite values (JSON has no NaN).
inline nlohmann::ordered_json json_real(double x) {
  return std::isfinite(x) ? nlohmann::ordered_json(x) : nlohmann::ordered_json(nullptr);
}

inline nlohmann::ordered_json scan_json(const std::vector<EquilibriumPoint> &rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto &r : rows) {
    nlohmann::ordered_json o;
    o["sigma"] = json_real(r.sigma);
    o["delta_e_hartree"] = json_real(r.deltaE);
    o["rho0_bohr"] = json_real(r.rho0);
    o["r10_bohr"] = json_real(r.r10);
    o["r20_bohr"] = json_real(r.r20);
    if (!r.ok())
      o["error"] = r.error;
    arr.push_back(o);
  }
  return arr;
}

/// Parses what write_scan_csv emits.
inline std::vector<EquilibriumPoint> read_scan_csv(std::istream &is) {
  std::vector<EquilibriumPoint> rows;
  std::string line;
  if (!std::getline(is, line) || line != csv_header())
    throw invalid_argument("read_scan_csv: missing or unexpected header");
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream ss(line);
    std::string cell;
    std::vector<double> v;
    while (std::getline(ss, cell, ','))
      v.push_back(std::strtod(cell.c_str(), nullptr));
    if (v.size() != 5)
      throw invalid_argument("read_scan_csv: expected 5 columns");
    EquilibriumPoint p;
    p.sigma = v[0];
    p.deltaE = v[1];
    p.rho0 = v[2];
    p.r10 = v[3];
    p.r20 = v[4];
    rows.push_back(p);
  }
  return rows;
}

//==============================================================================

inline int cmd_verify(const RunConfig &cfg, std::ostream &out) {
  VerifyOptions opt;
  opt.params = cfg.params;
  if (cfg.gamma_table)
    opt.gamma_table = *cfg.gamma_table;
  const Report report = run_verification(opt);
  const bool ok = report.passed(cfg.strict);
  if (cfg.format == Format::json) {
    nlohmann::ordered_json j;
    j["passed"] = ok;
    j["strict"] = cfg.strict;
    j["energy_reading_arbitration"] = report.arbitration;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto &c : report.checks)
      j["checks"].push_back({{"module", c.module},
                             {"name", c.name},
                             {"kind", to_string(c.kind)},
                             {"residual", json_real(c.residual)},
                             {"tolerance", c.tolerance},
                             {"passed", c.passed},
                             {"detail", c.detail}});
    out << j.dump(2) << '\n';
  } else {
    report.print(out);
    out << (ok ? "verification passed" : "verification FAILED")
        << (cfg.strict ? " (strict: audits gate)" : "") << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

inline int cmd_scan(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  ScanConfig sc;
  sc.sigma_min = cfg.sigma_min;
  sc.sigma_max = cfg.sigma_max;
  sc.n_points = cfg.points;
  sc.params = cfg.params;
  const auto rows = scan_sigma(sc);
  for (const auto &r : rows)
    if (!r.ok())
      err << "warning: sigma=" << format_real(r.sigma) << ": " << r.error << '\n';
  if (cfg.format == Format::json)
    out << scan_json(rows).dump(2) << '\n';
  else
    write_scan_csv(out, rows);
  return kOk;
}

inline int cmd_minimize(const RunConfig &cfg, std::ostream &out) {
  const auto r = minimize_delta_e({cfg.sigma_min, cfg.sigma_max}, cfg.tol, cfg.params);
  const auto &p = r.point;
  const double dev_ref = p.deltaE - kReferenceDeltaE;
  const double dev_exp = p.deltaE - kExperimentDeltaE;
  if (cfg.format == Format::json) {
    nlohmann::ordered_json j{{"sigma0", p.sigma},
                     {"delta_e_hartree", p.deltaE},
                     {"rho0_bohr", p.rho0},
                     {"r10_bohr", p.r10},
                     {"r20_bohr", p.r20},
                     {"iterations", r.iterations},
                     {"reference_delta_e", kReferenceDeltaE},
                     {"deviation_from_reference", dev_ref},
                     {"experimental_delta_e", kExperimentDeltaE},
                     {"deviation_from_experiment", dev_exp},
                     {"relative_deviation_from_experiment",
                      std::abs(dev_exp / kExperimentDeltaE)}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "sigma0,delta_e_hartree,rho0_bohr,r10_bohr,r20_bohr,iterations\n"
      << format_real(p.sigma) << ',' << format_real(p.deltaE) << ','
      << format_real(p.rho0) << ',' << format_real(p.r10) << ','
      << format_real(p.r20) << ',' << r.iterations << '\n';
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "# reference  delta_e = %.5f: deviation %+.5f\n",
                kReferenceDeltaE, dev_ref);
  out << buf;
  std::snprintf(buf, sizeof buf,
                "# experiment delta_e = %.5f: deviation %+.5f (%.3f%%)\n",
                kExperimentDeltaE, dev_exp,
                100.0 * std::abs(dev_exp / kExperimentDeltaE));
  out << buf;
  return kOk;
}

inline int cmd_ion_limit(const RunConfig &cfg, std::ostream &out) {
  if (cfg.decades < 0)
    throw invalid_argument("ion-limit: decades must be non-negative");
  std::vector<double> sigmas;
  for (int k = 1; k <= cfg.decades; ++k)
    sigmas.push_back(std::pow(10.0, -k));
  const auto rep = ion_limit_report(sigmas, cfg.params);
  if (cfg.format == Format::json) {
    nlohmann::ordered_json j;
    j["limit_hartree"] = rep.limit;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto &r : rep.rows)
      j["rows"].push_back({{"sigma", r.sigma},
                           {"delta_e_hartree", r.delta_e},
                           {"distance_to_limit", r.distance}});
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "sigma,delta_e_hartree,distance_to_limit\n";
  for (const auto &r : rep.rows)
    out << format_real(r.sigma) << ',' << format_real(r.delta_e) << ','
        << format_real(r.distance) << '\n';
  out << "# limit (sqrt(1-4 alpha^2)-1)/alpha^2 = " << format_real(rep.limit) << '\n';
  return kOk;
}

/// Runs the configured command; maps library errors onto exit codes.
inline int run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  std::ofstream file;
  std::ostream *sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot write " << cfg.output << '\n';
      return kUsage;
    }
    sink = &file;
  }
  try {
    cfg.params.validate();
    int code = kOk;
    switch (cfg.command) {
    case Command::verify: code = cmd_verify(cfg, *sink); break;
    case Command::scan: code = cmd_scan(cfg, *sink, err); break;
    case Command::minimize: code = cmd_minimize(cfg, *sink); break;
    case Command::ion_limit: code = cmd_ion_limit(cfg, *sink); break;
    }
    sink->flush();
    if (!*sink) {
      err << "error: failed writing output\n";
      return kUsage;
    }
    return code;
  } catch (const non_unimodal_error &e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  } catch (const invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const error &e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  }
}

} // namespace hedirac::cli
