// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fbm/error.hpp"
#include "fbm/summation.hpp"

namespace fbm {

double SampleMoments::stddev() const { return std::sqrt(variance); }

SampleMoments moments(std::span<const double> xs) {
  SampleMoments m;
  m.count = xs.size();
  if (xs.empty()) return m;
  const double n = static_cast<double>(xs.size());
  CompensatedSum s1, s2;
  for (double x : xs) {
    s1 += x;
    s2 += x * x;
  }
  m.mean = s1.value() / n;
  m.second_moment = s2.value() / n;
  if (xs.size() > 1) {
    CompensatedSum dev, dev2;
    for (double x : xs) {
      dev += (x - m.mean) * (x - m.mean);
      const double e = x * x - m.second_moment;
      dev2 += e * e;
    }
    m.variance = dev.value() / (n - 1.0);
    m.se = std::sqrt(m.variance / n);
    m.second_moment_se = std::sqrt(dev2.value() / (n - 1.0) / n);
  }
  return m;
}

LimitLawDescriptor LimitLawDescriptor::degenerate(double constant) {
  LimitLawDescriptor d;
  d.kind = Kind::kDegenerate;
  d.constant = constant;
  return d;
}

LimitLawDescriptor LimitLawDescriptor::centered_normal(double variance) {
  if (!(variance > 0.0)) fail(ErrorKind::kDomain, "normal limit law needs positive variance");
  LimitLawDescriptor d;
  d.kind = Kind::kCenteredNormal;
  d.variance = variance;
  return d;
}

LimitLawDescriptor LimitLawDescriptor::mixed_normal(double variance, std::string functional) {
  if (!(variance > 0.0)) fail(ErrorKind::kDomain, "mixed normal limit law needs positive variance");
  LimitLawDescriptor d;
  d.kind = Kind::kMixedNormal;
  d.variance = variance;
  d.functional = std::move(functional);
  return d;
}

LimitLawDescriptor LimitLawDescriptor::divergent(double hurst) {
  LimitLawDescriptor d;
  d.kind = Kind::kDivergent;
  d.rate_exponent = 0.5 - 2.0 * hurst;
  return d;
}

const char* to_string(LimitLawDescriptor::Kind kind) noexcept {
  switch (kind) {
    case LimitLawDescriptor::Kind::kDegenerate: return "degenerate";
    case LimitLawDescriptor::Kind::kCenteredNormal: return "centered_normal";
    case LimitLawDescriptor::Kind::kMixedNormal: return "mixed_normal";
    case LimitLawDescriptor::Kind::kDivergent: return "divergent";
  }
  return "unknown";
}

double normal_cdf(double x, double variance) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0 * variance));
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    // Jacobi-transformed series for the CDF converges fast for small lambda.
    const double pi = 3.14159265358979323846;
    const double w = pi * pi / (8.0 * lambda * lambda);
    double cdf = 0.0;
    for (int j = 1; j <= 20; ++j) {
      const double odd = 2.0 * j - 1.0;
      cdf += std::exp(-odd * odd * w);
    }
    return std::clamp(1.0 - std::sqrt(2.0 * pi) / lambda * cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1) ? term : -term;
    if (term < 1e-17 * std::abs(sum)) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {
double stephens(double effective_n, double d) {
  const double root = std::sqrt(effective_n);
  return (root + 0.12 + 0.11 / root) * d;
}
}  // namespace

KsResult ks_test_normal(std::span<const double> samples, double variance) {
  if (samples.empty()) fail(ErrorKind::kInsufficientData, "KS test on empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = normal_cdf(sorted[i], variance);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return {d, kolmogorov_survival(stephens(n, d))};
}

KsResult ks_test(std::span<const double> samples, const LimitLawDescriptor& law) {
  if (law.kind != LimitLawDescriptor::Kind::kCenteredNormal) {
    fail(ErrorKind::kUnsupportedLaw,
         std::string("KS test needs a centered normal law, got ") + to_string(law.kind));
  }
  if (samples.size() < 100) {
    fail(ErrorKind::kInsufficientData, "KS acceptance needs at least 100 replications");
  }
  return ks_test_normal(samples, law.variance);
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) fail(ErrorKind::kInsufficientData, "KS test on empty sample");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double na = static_cast<double>(x.size()), nb = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= v) ++i;
    while (j < y.size() && y[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return {d, kolmogorov_survival(stephens(na * nb / (na + nb), d))};
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    fail(ErrorKind::kInsufficientData, "correlation needs two equal-length series of size >= 2");
  }
  const auto ma = moments(a), mb = moments(b);
  if (!(ma.variance > 0.0) || !(mb.variance > 0.0)) {
    fail(ErrorKind::kUndefinedCorrelation, "correlation undefined for a constant series");
  }
  CompensatedSum cov;
  for (std::size_t i = 0; i < a.size(); ++i) cov += (a[i] - ma.mean) * (b[i] - mb.mean);
  const double c = cov.value() / static_cast<double>(a.size() - 1);
  return std::clamp(c / std::sqrt(ma.variance * mb.variance), -1.0, 1.0);
}

IndependenceReport independence_check(std::span<const double> samples,
                                       std::span<const NamedSeries> functionals) {
  IndependenceReport report;
  report.passed = true;
  const double band = 3.0 / std::sqrt(static_cast<double>(samples.size()));
  for (const auto& f : functionals) {
    CorrelationCheck c;
    c.name = f.name;
    c.correlation = pearson(samples, f.values);
    c.band = band;
    c.within_band = std::abs(c.correlation) <= band;
    report.passed = report.passed && c.within_band;
    report.checks.push_back(std::move(c));
  }
  return report;
}

RateFit rate_regression(std::span<const double> n, std::span<const double> statistic) {
  return fit_log_log(n, statistic, 4);
}

}  // namespace fbm
