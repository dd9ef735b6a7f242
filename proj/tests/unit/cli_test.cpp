// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fbm/fbm.hpp"
#include "json.hpp"
#include "oracles.hpp"

namespace fbm::cli {
namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fbm-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string without_runtime(const std::string& text) {
  std::istringstream in(text);
  std::string line, kept;
  while (std::getline(in, line)) {
    if (line.find("\"runtime_seconds\"") == std::string::npos) kept += line + "\n";
  }
  return kept;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("fbm_cli_test_" + name);
}

TEST(Cli, SigmaBrownian) {
  const auto r = run({"sigma", "--hurst", "0.5", "--tol", "1e-10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = r.json();
  EXPECT_NEAR(j["constants"]["sigma"]["value"].get<double>(), std::sqrt(2.0), 1e-10);
  EXPECT_NE(r.out.find("1.4142135623730951"), std::string::npos) << "17 significant digits";
  for (const char* key : {"spec", "equation_tag", "per_n", "rate_fit", "constants", "runtime_seconds"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, TelescopingInnerSums) {
  const auto r = run({"lemma31", "--part", "iv", "--n-list", "64,256,1024"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = r.json();
  ASSERT_EQ(j["per_n"].size(), 3u);
  for (const auto& row : j["per_n"]) EXPECT_NEAR(row["value"].get<double>(), 0.5, 1e-12);
}

TEST(Cli, InnerSumSlopeAssertion) {
  const auto r = run({"lemma31", "--part", "iii:3", "--n-list", "64,128,256,512,1024", "--assert"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NEAR(r.json()["rate_fit"]["slope"].get<double>(), -0.5, 0.1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"sigma", "--hurst", "0.25", "--bogus", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"clt", "--stat", "qv", "--n", "many"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, ValidationErrors) {
  EXPECT_EQ(run({"sigma", "--hurst", "1.5"}).code, kExitValidation);
  EXPECT_EQ(run({"lemma31", "--part", "vii", "--n-list", "64"}).code, kExitValidation);
  EXPECT_EQ(run({"cov", "--f", "nope", "--n-list", "64", "--reps", "10"}).code, kExitValidation);
  EXPECT_EQ(run({"rates", "--estimator", "qv", "--n-list", "64,32,128,256", "--reps", "10"}).code,
            kExitValidation);
  EXPECT_EQ(run({"synth", "--hurst", "0.25", "--n", "100", "--algo", "circulant", "--out",
                 temp_file("never.csv").string()})
                .code,
            kExitValidation);
}

TEST(Cli, MixedLawAssertion) {
  const auto r = run({"clt", "--stat", "mixed", "--hurst", "0.25", "--n", "16384", "--reps", "2000",
                      "--seed", "7", "--assert"});
  ASSERT_EQ(r.code, kExitOk) << r.out << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["equation_tag"], "BM5");
  const double sigma2 = oracle::golden()["sigma_quarter"]["variance"];
  const double var = j["per_n"][0]["var"];
  EXPECT_LT(std::abs(var / (sigma2 / 2.0) - 1.0), 0.05);
  EXPECT_NEAR(j["constants"]["sigma"]["value"].get<double>(),
              oracle::golden()["sigma_quarter"]["value"].get<double>(), 1e-12);
  EXPECT_TRUE(j["independence"]["passed"].get<bool>());
}

TEST(Cli, FailedAssertionExitCode) {
  const auto r = run({"rates", "--estimator", "qv", "--hurst", "0.25", "--n-list", "64,128,256,512",
                      "--reps", "100", "--statistic", "var", "--expect", "5", "--assert"});
  EXPECT_EQ(r.code, kExitAssertion) << r.err;
  EXPECT_FALSE(r.json()["assert"]["passed"].get<bool>());
}

TEST(Cli, DeterministicOutputAcrossRunsAndWorkers) {
  const std::vector<std::string> args{"cov", "--f", "product", "--hurst", "0.4", "--n-list",
                                      "256,512,1024,2048", "--reps", "100", "--seed", "3"};
  ::setenv("FBM_LAB_WORKERS", "1", 1);
  const auto a = run(args);
  ::setenv("FBM_LAB_WORKERS", "4", 1);
  const auto b = run(args);
  ::unsetenv("FBM_LAB_WORKERS");
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(without_runtime(a.out), without_runtime(b.out));
  EXPECT_EQ(a.json()["equation_tag"], "h>1/4");
  EXPECT_LT(a.json()["rate_fit"]["slope"].get<double>(), 0.0);
}

TEST(Cli, SynthWritesPathCsv) {
  const auto file = temp_file("path.csv");
  const auto r = run({"synth", "--hurst", "0.25", "--n", "128", "--seed", "5", "--algo", "cholesky",
                      "--out", file.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(file);
  const auto path = read_path_csv(in, HurstIndex(0.25));
  EXPECT_EQ(path.n(), 128u);
  EXPECT_EQ(path.first()[128], r.json()["path"]["b1_end"].get<double>());
  std::filesystem::remove(file);
}

TEST(Cli, DumpCsv) {
  const auto file = temp_file("dump.csv");
  const auto r = run({"clt", "--stat", "qv", "--hurst", "0.5", "--n", "256", "--reps", "150", "--seed",
                      "9", "--dump", file.string(), "--assert"});
  ASSERT_EQ(r.code, kExitOk) << r.out << r.err;
  std::ifstream in(file);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,rep,value");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 150u);
  std::filesystem::remove(file);
}

}  // namespace
}  // namespace fbm::cli
