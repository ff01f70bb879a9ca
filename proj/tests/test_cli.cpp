#include "hedirac/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hedirac;
using namespace hedirac::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_config(const RunConfig &cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig scan_config(int points = 100) {
  RunConfig cfg;
  cfg.command = Command::scan;
  cfg.sigma_min = 0.01;
  cfg.sigma_max = 0.5;
  cfg.points = points;
  return cfg;
}

std::vector<std::string> lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);)
    out.push_back(l);
  return out;
}

} // namespace

TEST(CliScan, HeaderAndRowCount) {
  const auto r = run_config(scan_config());
  ASSERT_EQ(r.code, kOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 101u);
  EXPECT_EQ(ls.front(), "sigma,delta_e_hartree,rho0_bohr,r10_bohr,r20_bohr");
}

TEST(CliScan, RowNearestReferenceSigma) {
  std::istringstream is(run_config(scan_config()).out);
  const auto rows = read_scan_csv(is);
  const auto it = std::min_element(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
    return std::abs(a.sigma - 0.1775) < std::abs(b.sigma - 0.1775);
  });
  EXPECT_NEAR(it->deltaE, -2.90589, 0.01);
}

TEST(CliScan, CsvRoundTripIsExact) {
  ScanConfig sc;
  sc.sigma_min = 0.01;
  sc.sigma_max = 0.5;
  sc.n_points = 37;
  const auto rows = scan_sigma(sc);
  std::stringstream ss;
  write_scan_csv(ss, rows);
  const auto back = read_scan_csv(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].sigma, rows[i].sigma);
    EXPECT_EQ(back[i].deltaE, rows[i].deltaE);
    EXPECT_EQ(back[i].rho0, rows[i].rho0);
    EXPECT_EQ(back[i].r10, rows[i].r10);
    EXPECT_EQ(back[i].r20, rows[i].r20);
  }
}

TEST(CliScan, ByteIdenticalAcrossRuns) {
  for (auto fmt : {Format::csv, Format::json}) {
    RunConfig cfg = scan_config(40);
    cfg.format = fmt;
    EXPECT_EQ(run_config(cfg).out, run_config(cfg).out);
  }
}

TEST(CliScan, JsonFieldsMirrorCsvHeader) {
  RunConfig cfg = scan_config(5);
  cfg.format = Format::json;
  const auto j = nlohmann::json::parse(run_config(cfg).out);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 5u);
  std::vector<std::string> keys;
  for (auto it = j[0].begin(); it != j[0].end(); ++it)
    keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  EXPECT_EQ(keys, (std::vector<std::string>{"delta_e_hartree", "r10_bohr", "r20_bohr",
                                            "rho0_bohr", "sigma"}));
}

TEST(CliScan, ReaderRejectsForeignInput) {
  std::istringstream bad("a,b,c\n1,2,3\n");
  EXPECT_THROW(read_scan_csv(bad), hedirac::invalid_argument);
  std::istringstream short_row(std::string(csv_header()) + "\n1,2\n");
  EXPECT_THROW(read_scan_csv(short_row), hedirac::invalid_argument);
}

TEST(CliMinimize, CsvSummaryAndComparisonLines) {
  RunConfig cfg;
  cfg.command = Command::minimize;
  const auto r = run_config(cfg);
  ASSERT_EQ(r.code, kOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], "sigma0,delta_e_hartree,rho0_bohr,r10_bohr,r20_bohr,iterations");
  double sigma0 = 0.0, de = 0.0;
  ASSERT_EQ(std::sscanf(ls[1].c_str(), "%lf,%lf", &sigma0, &de), 2);
  EXPECT_NEAR(sigma0, 0.1775, 0.001);
  EXPECT_NEAR(de, -2.90589, 0.005);
  EXPECT_EQ(ls[2].rfind("# reference", 0), 0u);
  EXPECT_EQ(ls[3].rfind("# experiment", 0), 0u);
}

TEST(CliMinimize, JsonObjectWithDeviation) {
  RunConfig cfg;
  cfg.command = Command::minimize;
  cfg.format = Format::json;
  const auto j = nlohmann::json::parse(run_config(cfg).out);
  ASSERT_TRUE(j.is_object());
  for (const char *k : {"sigma0", "delta_e_hartree", "rho0_bohr", "r10_bohr", "r20_bohr",
                        "iterations"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_NEAR(std::abs(j["deviation_from_experiment"].get<double>()), 0.0026, 0.0005);
  EXPECT_LT(j["relative_deviation_from_experiment"].get<double>(), 1e-3);
}

TEST(CliMinimize, NonUnimodalBracketIsANumericError) {
  RunConfig cfg;
  cfg.command = Command::minimize;
  cfg.sigma_min = 0.3;
  cfg.sigma_max = 0.5;
  const auto r = run_config(cfg);
  EXPECT_EQ(r.code, kNumeric);
  EXPECT_NE(r.err.find("widen or narrow"), std::string::npos);
}

TEST(CliVerify, DefaultRunPassesAndStatesArbitration) {
  RunConfig cfg;
  const auto r = run_config(cfg);
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("energy-relation arbitration:"), std::string::npos);
  EXPECT_NE(r.out.find("selected reading: squared"), std::string::npos);
}

TEST(CliVerify, StrictModeGatesOnAudits) {
  RunConfig cfg;
  cfg.strict = true;
  EXPECT_EQ(run_config(cfg).code, kVerificationFailed);
}

TEST(CliVerify, CorruptedGammaTableNamesThePair) {
  RunConfig cfg;
  GammaTable t = standard_gamma_table();
  t[GammaIndex{1}](0, 3) *= -1.0;
  cfg.gamma_table = t;
  const auto r = run_config(cfg);
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("{g1,g1}"), std::string::npos) << r.out;
}

TEST(CliVerify, JsonReport) {
  RunConfig cfg;
  cfg.format = Format::json;
  const auto j = nlohmann::json::parse(run_config(cfg).out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_FALSE(j["checks"].empty());
  EXPECT_TRUE(j.contains("energy_reading_arbitration"));
}

TEST(CliErrors, UsageAndIoErrors) {
  RunConfig cfg = scan_config(5);
  cfg.params.alpha = -1.0;
  EXPECT_EQ(run_config(cfg).code, kUsage);
  cfg = scan_config(1);
  EXPECT_EQ(run_config(cfg).code, kUsage);
  cfg = scan_config(5);
  cfg.output = "/nonexistent-dir/out.csv";
  const auto r = run_config(cfg);
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("cannot write"), std::string::npos);
  cfg = RunConfig{};
  cfg.command = Command::ion_limit;
  cfg.decades = -1;
  EXPECT_EQ(run_config(cfg).code, kUsage);
}

TEST(CliOutput, FileDestination) {
  const auto path = std::filesystem::temp_directory_path() / "hedirac_cli_test.csv";
  RunConfig cfg = scan_config(7);
  cfg.output = path.string();
  const auto r = run_config(cfg);
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(read_scan_csv(in).size(), 7u);
  std::filesystem::remove(path);
}

TEST(CliIonLimit, RowsPerDecade) {
  RunConfig cfg;
  cfg.command = Command::ion_limit;
  cfg.decades = 3;
  const auto ls = lines(run_config(cfg).out);
  ASSERT_EQ(ls.size(), 5u);
  EXPECT_EQ(ls[0], "sigma,delta_e_hartree,distance_to_limit");
  EXPECT_EQ(ls[4].rfind("# limit", 0), 0u);
}

TEST(CliFormat, RealsUseSeventeenDigits) {
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(std::strtod(format_real(-2.905898681234).c_str(), nullptr), -2.905898681234);
}
