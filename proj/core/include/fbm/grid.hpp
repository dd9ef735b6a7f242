// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

namespace fbm {

/// Uniform grid of n steps on [0, horizon]; the canonical grid has horizon 1.
class GridSpec {
 public:
  explicit GridSpec(std::size_t n, double horizon = 1.0);

  std::size_t n() const noexcept { return n_; }
  double horizon() const noexcept { return horizon_; }
  double step() const noexcept { return horizon_ / static_cast<double>(n_); }
  double time(std::size_t k) const noexcept {
    return static_cast<double>(k) * horizon_ / static_cast<double>(n_);
  }

  /// Number of whole steps m with time(m) == t. Throws a domain error when t is
  /// outside (0, horizon] or not a grid multiple (relative slack 1e-9).
  std::size_t steps_to(double t) const;

  bool operator==(const GridSpec&) const = default;

 private:
  std::size_t n_;
  double horizon_;
};

}  // namespace fbm
