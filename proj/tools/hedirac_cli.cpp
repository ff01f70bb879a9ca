#include "hedirac/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using hedirac::cli::Command;
using hedirac::cli::Format;

int main(int argc, char **argv) {
  hedirac::cli::RunConfig cfg;

  CLI::App app{"Two-electron four-spinor ground-state model: verification, "
               "sigma scans and minimization"};
  app.set_version_flag("--version", hedirac::cli::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--alpha", cfg.params.alpha, "Fine-structure constant")
      ->capture_default_str();
  app.add_option("--mass", cfg.params.m, "Electron mass (natural units)")
      ->capture_default_str();
  app.add_option("--j1", cfg.params.j1, "Angular quantum number, electron 1")
      ->capture_default_str();
  app.add_option("--j2", cfg.params.j2, "Angular quantum number, electron 2")
      ->capture_default_str();
  app.add_option("--sigma-min", cfg.sigma_min, "Lower end of the sigma range")
      ->capture_default_str();
  app.add_option("--sigma-max", cfg.sigma_max, "Upper end of the sigma range")
      ->capture_default_str();
  app.add_option("--points", cfg.points, "Number of scan points")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Minimizer bracket tolerance in sigma")
      ->capture_default_str();
  app.add_option("--output", cfg.output, "Write results to this file");
  const std::map<std::string, Format> formats{{"csv", Format::csv},
                                              {"json", Format::json}};
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  auto *verify = app.add_subcommand("verify", "Run the model self-checks");
  verify->add_flag("--strict", cfg.strict,
                   "Also fail on transcription-audit differences");
  auto *scan = app.add_subcommand("scan", "Tabulate dE, rho0, r10, r20 over sigma");
  auto *minimize = app.add_subcommand("minimize", "Locate the minimum of dE(sigma)");
  auto *ion = app.add_subcommand("ion-limit", "dE at sigma = 10^-k approaching 0");
  ion->add_option("--decades", cfg.decades, "Largest k")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? hedirac::cli::kOk : hedirac::cli::kUsage;
  }

  if (*verify)
    cfg.command = Command::verify;
  else if (*scan)
    cfg.command = Command::scan;
  else if (*minimize)
    cfg.command = Command::minimize;
  else if (*ion)
    cfg.command = Command::ion_limit;

  return hedirac::cli::run(cfg, std::cout, std::cerr);
}
