// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

// Monte Carlo orchestration. Replication r at grid size n always uses
// SeedSpec{child(master_seed, n), r}; workers pull replication indices from a
// shared counter and write into index-ordered slots, so results do not depend
// on the worker count.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fbm/path.hpp"
#include "fbm/rate_fit.hpp"
#include "fbm/rng.hpp"
#include "fbm/stats.hpp"
#include "fbm/synthesis.hpp"

namespace fbm {

using ParamMap = std::map<std::string, std::string>;

struct ExperimentSpec {
  std::string estimator;
  ParamMap params;
  double hurst = 0.25;
  std::vector<std::size_t> n_list;
  std::size_t replications = 100;
  std::uint64_t master_seed = 0;
  std::optional<Algorithm> algorithm;  // default_algorithm(n) when unset
  double t = 1.0;

  /// Checks n_list is nonempty and strictly increasing, replications >= 1,
  /// and the estimator name and parameters resolve.
  void validate() const;
  SeedSpec seed_for(std::size_t n, std::size_t replication) const;
};

/// Statistic value plus B-measurable functionals of the same path, used by
/// independence checks.
struct ReplicationRecord {
  double value = 0.0;
  double b1_end = 0.0;
  double b2_end = 0.0;
  double b1_integral = 0.0;
};

struct ExperimentSamples {
  std::vector<std::size_t> n_list;
  std::vector<std::vector<ReplicationRecord>> records;  // [n index][replication]

  std::vector<double> values(std::size_t n_index) const;
  std::vector<NamedSeries> functionals(std::size_t n_index) const;
};

using PathEstimator = std::function<double(const FbmPath2D&)>;

/// Registry names: qv, bm2, mixed, mixed_scaled, gn, vn, sn, sn3bis, residual,
/// integral, time_integral. Parameters (all optional, defaults in brackets):
///   gn: g [unit], gtilde [unit], coord [1]
///   vn: g [unit], alpha [0], q [2]
///   sn: i [5], f [product]
///   sn3bis, residual, integral: f [product]
///   time_integral: f [product], a [0], b [0], power [1]
PathEstimator make_estimator(const std::string& name, const ParamMap& params, double t = 1.0);
const std::vector<std::string>& estimator_names();

/// FBM_LAB_WORKERS if set and positive, else hardware concurrency (>= 1).
std::size_t resolve_workers();

/// Runs body(i) for i in [0, count) on up to `workers` threads; rethrows the
/// first exception raised by any call.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

ExperimentSamples run_replications(const ExperimentSpec& spec, std::size_t workers);
ExperimentSamples run_replications(const ExperimentSpec& spec);

enum class RateStatistic { kNone, kMeanSquare, kStd, kVariance };
RateStatistic parse_rate_statistic(const std::string& text);
const char* to_string(RateStatistic s) noexcept;

struct PerNSummary {
  std::size_t n = 0;
  SampleMoments moments;
  std::optional<KsResult> ks;
  std::optional<double> slope_contrib;  // log of the rate statistic at this n
};

struct ExperimentSummary {
  std::vector<PerNSummary> per_n;
  std::optional<RateFit> rate_fit;
  std::optional<IndependenceReport> independence;  // at the largest n

  double rate_value(std::size_t n_index, RateStatistic s) const;
};

/// Moments per n; KS when the law is centered normal (and reps >= 100);
/// the rate fit when `rate` is set and there are >= 4 sizes; an independence
/// check against (B1_1, B2_1, int B1) when `check_independence`.
ExperimentSummary summarize(const ExperimentSamples& samples, const LimitLawDescriptor& law,
                            RateStatistic rate, bool check_independence);

}  // namespace fbm
