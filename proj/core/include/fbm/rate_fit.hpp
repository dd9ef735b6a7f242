// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

namespace fbm {

/// Ordinary least squares fit of log(value) = intercept + slope * log(n).
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;        // root mean square of the log residuals
  double slope_stderr = 0.0;    // zero when only two points are fitted
  double max_min_ratio = 0.0;   // max(value) / min(value), for O(1) checks
  std::size_t points = 0;
};

/// Requires at least `min_points` pairs and strictly positive values.
RateFit fit_log_log(std::span<const double> n, std::span<const double> values,
                    std::size_t min_points = 4);

}  // namespace fbm
