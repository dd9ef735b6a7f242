// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

// Closed-form covariances of fractional Brownian motion and the discrete inner
// products between grid indicators
//   delta_k = 1_[k/n, (k+1)/n]   (one step)
//   eps_l   = 1_[0, l/n]          (initial segment)
// on the canonical grid of [0, 1].

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "fbm/hurst.hpp"
#include "fbm/rate_fit.hpp"

namespace fbm {

/// R_H(t, s) = (t^{2H} + s^{2H} - |t - s|^{2H}) / 2. Negative times are a
/// domain error.
double covariance_rh(HurstIndex h, double t, double s);

/// Unit-step fGn autocorrelation rho_H(k) = (|k+1|^{2H} + |k-1|^{2H} - 2|k|^{2H}) / 2.
/// Evaluated without catastrophic cancellation for large |k|.
double rho_h(HurstIndex h, std::int64_t k);

/// <delta_k, delta_l> = n^{-2H} rho_H(k - l), 0 <= k, l < n.
double inner_delta_delta(HurstIndex h, std::int64_t k, std::int64_t l,
                         std::int64_t n);

/// <eps_l, delta_k> = E[B_{l/n} (B_{(k+1)/n} - B_{k/n})], 0 <= l, k < n.
double inner_eps_delta(HurstIndex h, std::int64_t l, std::int64_t k,
                       std::int64_t n);

enum class InnerSumPart { kII, kIII, kIV, kV };

struct InnerSumQuery {
  InnerSumPart part = InnerSumPart::kII;
  double r = 1.0;  // exponent, part III only

  /// Parses "ii", "iii:<r>", "iv", "v".
  static InnerSumQuery parse(const std::string& text);
  std::string label() const;
  /// Theoretical log-log exponent: 1, 1 - r/2, 0, -1/2.
  double expected_exponent() const;
  /// Parts whose order is O(1) are checked by boundedness, not slope.
  bool bounded_order() const;
};

/// Exact value of the deterministic sum for the critical index:
///   II   sum_{k,l} |<eps_l, delta_k>|
///   III  sum_{k,l} |<delta_l, delta_k>|^r
///   IV   sum_k |<eps_k, delta_k> + 1/(2 sqrt n)|
///   V    sum_k |<eps_k, delta_k>^2 - 1/(4n)|
/// Part III accepts any H; the others are defined at H = 1/4 only.
double inner_sum(const InnerSumQuery& query, std::int64_t n,
                 HurstIndex h = HurstIndex::critical());

/// Fits log(sum) against log(n). Needs >= 4 sizes spanning >= 2 octaves.
RateFit inner_sum_rate_fit(const InnerSumQuery& query,
                           std::span<const std::int64_t> n_list);

}  // namespace fbm
