// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

// Reference implementations used only by tests. Each one takes a different
// route from the library code it checks: long double arithmetic, direct
// covariance algebra, explicit polynomial forms, or brute-force enumeration.

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "fbm/fbm.hpp"
#include "json.hpp"

namespace fbm::oracle {

inline long double covariance(long double h, long double t, long double s) {
  return 0.5L * (std::pow(t, 2 * h) + std::pow(s, 2 * h) - std::pow(std::fabs(t - s), 2 * h));
}

/// E[(B_{(k+1)/n} - B_{k/n})(B_{(l+1)/n} - B_{l/n})] by expanding the four
/// covariance terms.
inline long double delta_delta(long double h, std::int64_t k, std::int64_t l, std::int64_t n) {
  const long double nd = static_cast<long double>(n);
  const auto t = [&](std::int64_t j) { return static_cast<long double>(j) / nd; };
  return covariance(h, t(k + 1), t(l + 1)) - covariance(h, t(k + 1), t(l)) -
         covariance(h, t(k), t(l + 1)) + covariance(h, t(k), t(l));
}

/// E[B_{l/n} (B_{(k+1)/n} - B_{k/n})].
inline long double eps_delta(long double h, std::int64_t l, std::int64_t k, std::int64_t n) {
  const long double nd = static_cast<long double>(n);
  const long double tl = static_cast<long double>(l) / nd;
  return covariance(h, tl, static_cast<long double>(k + 1) / nd) -
         covariance(h, tl, static_cast<long double>(k) / nd);
}

inline long double rho(long double h, std::int64_t k) {
  const long double kk = std::fabs(static_cast<long double>(k));
  return 0.5L * (std::pow(kk + 1, 2 * h) + std::pow(std::fabs(kk - 1), 2 * h) -
                 2 * std::pow(kk, 2 * h));
}

/// Inner-product sums by explicit double enumeration over inner products.
inline long double inner_sum_brute(InnerSumPart part, double r, std::int64_t n, long double h) {
  long double acc = 0;
  const long double root = std::sqrt(static_cast<long double>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    if (part == InnerSumPart::kIV) {
      acc += std::fabs(eps_delta(h, k, k, n) + 0.5L / root);
      continue;
    }
    if (part == InnerSumPart::kV) {
      const long double e = eps_delta(h, k, k, n);
      acc += std::fabs(e * e - 0.25L / static_cast<long double>(n));
      continue;
    }
    for (std::int64_t l = 0; l < n; ++l) {
      if (part == InnerSumPart::kII) {
        acc += std::fabs(eps_delta(h, l, k, n));
      } else {
        acc += std::pow(std::fabs(delta_delta(h, l, k, n)), static_cast<long double>(r));
      }
    }
  }
  return acc;
}

/// Explicit probabilists' Hermite polynomials of degree <= 6.
inline double hermite_explicit(int q, double x) {
  const double x2 = x * x;
  switch (q) {
    case 0: return 1.0;
    case 1: return x;
    case 2: return x2 - 1.0;
    case 3: return x * (x2 - 3.0);
    case 4: return x2 * x2 - 6.0 * x2 + 3.0;
    case 5: return x * (x2 * x2 - 10.0 * x2 + 15.0);
    case 6: return x2 * x2 * x2 - 15.0 * x2 * x2 + 45.0 * x2 - 15.0;
    default: return std::nan("");
  }
}

/// Coefficient of H_{p-2j} in x^p: p! / (j! (p-2j)! 2^j).
inline double monomial_coefficient(int p, int j) {
  double v = std::tgamma(p + 1.0) / (std::tgamma(j + 1.0) * std::tgamma(p - 2.0 * j + 1.0));
  return v / std::pow(2.0, j);
}

/// Term-by-term evaluation of the symmetric Riemann sum for
/// f(x, y) = sin(x) sin(y), written without the field catalog.
inline double trigprod_symmetric_sum(const std::vector<double>& b1, const std::vector<double>& b2) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < b1.size(); ++k) {
    const double d1f_start = std::cos(b1[k]) * std::sin(b2[k]);
    const double d1f_moved = std::cos(b1[k + 1]) * std::sin(b2[k]);
    const double d2f_start = std::sin(b1[k]) * std::cos(b2[k]);
    const double d2f_moved = std::sin(b1[k]) * std::cos(b2[k + 1]);
    total += 0.5 * (d1f_start + d1f_moved) * (b1[k + 1] - b1[k]);
    total += 0.5 * (d2f_start + d2f_moved) * (b2[k + 1] - b2[k]);
  }
  return total;
}

inline const nlohmann::json& golden() {
  static const nlohmann::json data = [] {
    std::ifstream in(std::string(FBMLAB_GOLDEN_DIR) + "/constants.json");
    return nlohmann::json::parse(in);
  }();
  return data;
}

}  // namespace fbm::oracle
