// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "fbm/error.hpp"
#include "fbm/summation.hpp"

namespace fbm {
namespace {

// Beyond this lag rho_h switches to the binomial series, which has no
// cancellation: every term shares the sign of (2H - 1).
constexpr std::int64_t kSeriesLag = 4;

double abs_pow(double x, double a) { return x == 0.0 ? 0.0 : std::pow(std::abs(x), a); }

void check_index(std::int64_t i, std::int64_t n, const char* name) {
  if (n < 1 || i < 0 || i >= n) {
    std::ostringstream os;
    os << "index " << name << "=" << i << " outside [0, " << n << ")";
    fail(ErrorKind::kDomain, os.str());
  }
}

// (1 + x)^a + (1 - x)^a - 2 = 2 sum_{j>=1} binom(a, 2j) x^{2j}, |x| <= 1/4.
double even_binomial_tail(double a, double x) {
  const double x2 = x * x;
  double coeff = a * (a - 1.0) / 2.0;  // binom(a, 2)
  double power = x2;
  double sum = 0.0;
  for (int j = 1; j < 64; ++j) {
    const double term = coeff * power;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    const double m = 2.0 * j;
    coeff *= (a - m) * (a - m - 1.0) / ((m + 1.0) * (m + 2.0));
    power *= x2;
  }
  return 2.0 * sum;
}

void require_critical(HurstIndex h, const InnerSumQuery& q) {
  if (!h.is_critical()) {
    fail(ErrorKind::kUnsupportedRegime,
         "inner-product sum part " + q.label() + " is defined for H = 1/4 only");
  }
}

}  // namespace

double covariance_rh(HurstIndex h, double t, double s) {
  if (!(t >= 0.0) || !(s >= 0.0) || !std::isfinite(t) || !std::isfinite(s)) {
    std::ostringstream os;
    os << "covariance_rh needs finite nonnegative times, got (" << t << ", " << s << ")";
    fail(ErrorKind::kDomain, os.str());
  }
  const double a = h.two_h();
  return 0.5 * (abs_pow(t, a) + abs_pow(s, a) - abs_pow(t - s, a));
}

double rho_h(HurstIndex h, std::int64_t k) {
  const double a = h.two_h();
  const std::int64_t m = std::llabs(k);
  if (m == 0) return 1.0;
  const double km = static_cast<double>(m);
  if (m < kSeriesLag) {
    return 0.5 * (std::pow(km + 1.0, a) + abs_pow(km - 1.0, a) - 2.0 * std::pow(km, a));
  }
  return 0.5 * std::pow(km, a) * even_binomial_tail(a, 1.0 / km);
}

double inner_delta_delta(HurstIndex h, std::int64_t k, std::int64_t l, std::int64_t n) {
  check_index(k, n, "k");
  check_index(l, n, "l");
  return std::pow(static_cast<double>(n), -h.two_h()) * rho_h(h, k - l);
}

double inner_eps_delta(HurstIndex h, std::int64_t l, std::int64_t k, std::int64_t n) {
  check_index(l, n, "l");
  check_index(k, n, "k");
  const double a = h.two_h();
  const auto p = [a](std::int64_t m) { return abs_pow(static_cast<double>(m), a); };
  // Grouped so that l = 0 cancels exactly.
  const double bracket = (p(k + 1) - p(std::llabs(k + 1 - l))) + (p(std::llabs(k - l)) - p(k));
  return 0.5 * std::pow(static_cast<double>(n), -a) * bracket;
}

InnerSumQuery InnerSumQuery::parse(const std::string& text) {
  InnerSumQuery q;
  if (text == "ii") {
    q.part = InnerSumPart::kII;
  } else if (text == "iv") {
    q.part = InnerSumPart::kIV;
  } else if (text == "v") {
    q.part = InnerSumPart::kV;
  } else if (text.rfind("iii", 0) == 0) {
    q.part = InnerSumPart::kIII;
    if (text.size() > 3) {
      if (text[3] != ':') fail(ErrorKind::kDomain, "expected iii:<r>, got " + text);
      char* end = nullptr;
      q.r = std::strtod(text.c_str() + 4, &end);
      if (end == text.c_str() + 4 || *end != '\0') {
        fail(ErrorKind::kDomain, "bad exponent in " + text);
      }
    }
    if (!(q.r >= 1.0)) fail(ErrorKind::kDomain, "inner-product sum part iii needs r >= 1");
  } else {
    fail(ErrorKind::kDomain, "unknown inner-product sum part '" + text + "'");
  }
  return q;
}

std::string InnerSumQuery::label() const {
  switch (part) {
    case InnerSumPart::kII: return "ii";
    case InnerSumPart::kIII: {
      std::ostringstream os;
      os << "iii:" << r;
      return os.str();
    }
    case InnerSumPart::kIV: return "iv";
    case InnerSumPart::kV: return "v";
  }
  return "?";
}

double InnerSumQuery::expected_exponent() const {
  switch (part) {
    case InnerSumPart::kII: return 1.0;
    case InnerSumPart::kIII: return 1.0 - r / 2.0;
    case InnerSumPart::kIV: return 0.0;
    case InnerSumPart::kV: return -0.5;
  }
  return 0.0;
}

bool InnerSumQuery::bounded_order() const { return expected_exponent() == 0.0; }

double inner_sum(const InnerSumQuery& query, std::int64_t n, HurstIndex h) {
  if (n < 1) fail(ErrorKind::kDomain, "inner-product sums need n >= 1");
  CompensatedSum acc;
  switch (query.part) {
    case InnerSumPart::kII: {
      require_critical(h, query);
      const double a = h.two_h();
      std::vector<double> p(static_cast<std::size_t>(n) + 1);
      for (std::int64_t m = 0; m <= n; ++m) p[m] = abs_pow(static_cast<double>(m), a);
      const double scale = 0.5 * std::pow(static_cast<double>(n), -a);
      for (std::int64_t l = 0; l < n; ++l) {
        for (std::int64_t k = 0; k < n; ++k) {
          const double bracket =
              (p[k + 1] - p[std::llabs(k + 1 - l)]) + (p[std::llabs(k - l)] - p[k]);
          acc += std::abs(scale * bracket);
        }
      }
      break;
    }
    case InnerSumPart::kIII: {
      // Toeplitz: lag j occurs n - |j| times.
      const double scale = std::pow(static_cast<double>(n), -h.two_h() * query.r);
      for (std::int64_t j = n - 1; j >= 1; --j) {
        acc += 2.0 * static_cast<double>(n - j) * scale * std::pow(std::abs(rho_h(h, j)), query.r);
      }
      acc += static_cast<double>(n) * scale;
      break;
    }
    case InnerSumPart::kIV: {
      require_critical(h, query);
      const double centre = 0.5 / std::sqrt(static_cast<double>(n));
      for (std::int64_t k = 0; k < n; ++k) acc += std::abs(inner_eps_delta(h, k, k, n) + centre);
      break;
    }
    case InnerSumPart::kV: {
      require_critical(h, query);
      const double centre = 0.25 / static_cast<double>(n);
      for (std::int64_t k = 0; k < n; ++k) {
        const double v = inner_eps_delta(h, k, k, n);
        acc += std::abs(v * v - centre);
      }
      break;
    }
  }
  return acc.value();
}

RateFit inner_sum_rate_fit(const InnerSumQuery& query, std::span<const std::int64_t> n_list) {
  if (n_list.size() < 4) {
    fail(ErrorKind::kInsufficientData, "inner-product rate fit needs at least 4 grid sizes");
  }
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) fail(ErrorKind::kDomain, "n_list must be strictly increasing");
  }
  if (n_list.back() < 4 * n_list.front()) {
    fail(ErrorKind::kInsufficientData, "n_list must span at least two octaves");
  }
  std::vector<double> ns, values;
  for (const auto n : n_list) {
    ns.push_back(static_cast<double>(n));
    values.push_back(inner_sum(query, n));
  }
  return fit_log_log(ns, values);
}

}  // namespace fbm
