// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fbm/rate_fit.hpp"

namespace fbm {

struct SampleMoments {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;        // unbiased
  double se = 0.0;              // standard error of the mean
  double second_moment = 0.0;   // mean of x^2
  double second_moment_se = 0.0;

  double stddev() const;
};

SampleMoments moments(std::span<const double> xs);

/// Limit law a Monte Carlo statistic is compared against.
struct LimitLawDescriptor {
  enum class Kind { kDegenerate, kCenteredNormal, kMixedNormal, kDivergent };

  Kind kind = Kind::kDegenerate;
  double constant = 0.0;       // degenerate
  double variance = 0.0;       // centered normal; unconditional variance for mixed normal
  double rate_exponent = 0.0;  // divergent: growth exponent of the standard deviation
  std::string functional;      // mixed normal: description of the conditional variance

  static LimitLawDescriptor degenerate(double constant);
  static LimitLawDescriptor centered_normal(double variance);
  static LimitLawDescriptor mixed_normal(double variance, std::string functional);
  /// Exponent must equal 1/2 - 2H for the Hurst index it is built for.
  static LimitLawDescriptor divergent(double hurst);
};

const char* to_string(LimitLawDescriptor::Kind kind) noexcept;

double normal_cdf(double x, double variance = 1.0);

/// Survival function of the Kolmogorov distribution,
/// Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_survival(double lambda);

struct KsResult {
  double statistic = 0.0;
  double p_value = 0.0;
};

/// One-sample KS against N(0, variance) with asymptotic p-value (Stephens'
/// effective-size correction).
KsResult ks_test_normal(std::span<const double> samples, double variance);

/// ks_test_normal for a centered-normal law; other kinds raise an
/// unsupported-law error. Needs at least 100 samples.
KsResult ks_test(std::span<const double> samples, const LimitLawDescriptor& law);

/// Two-sample KS with asymptotic p-value.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Pearson correlation; constant input raises an undefined-correlation error.
double pearson(std::span<const double> a, std::span<const double> b);

struct NamedSeries {
  std::string name;
  std::vector<double> values;
};

struct CorrelationCheck {
  std::string name;
  double correlation = 0.0;
  double band = 0.0;  // 3 / sqrt(reps)
  bool within_band = false;
};

struct IndependenceReport {
  std::vector<CorrelationCheck> checks;
  bool passed = false;
};

/// Correlates the statistic with each path functional; passes iff every
/// correlation lies within +-3/sqrt(reps).
IndependenceReport independence_check(std::span<const double> samples,
                                       std::span<const NamedSeries> functionals);

/// Log-log slope of statistic against n; needs >= 4 sizes and positive values.
RateFit rate_regression(std::span<const double> n, std::span<const double> statistic);

}  // namespace fbm
