// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "fbm/grid.hpp"
#include "fbm/hurst.hpp"

namespace fbm {

/// One fBm component sampled at times 0, step, ..., n * step. values[0] == 0.
class FbmPath1D {
 public:
  FbmPath1D(HurstIndex hurst, GridSpec grid, std::vector<double> values);

  /// Cumulative sum of increments, starting at 0.
  static FbmPath1D from_increments(HurstIndex hurst, GridSpec grid,
                                   std::span<const double> increments);

  HurstIndex hurst() const noexcept { return hurst_; }
  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t k) const noexcept { return values_[k]; }
  double increment(std::size_t k) const noexcept { return values_[k + 1] - values_[k]; }
  std::vector<double> increments() const;

 private:
  HurstIndex hurst_;
  GridSpec grid_;
  std::vector<double> values_;
};

/// Two components on a shared grid with a shared Hurst index.
class FbmPath2D {
 public:
  FbmPath2D(FbmPath1D first, FbmPath1D second);

  const FbmPath1D& first() const noexcept { return first_; }
  const FbmPath1D& second() const noexcept { return second_; }
  HurstIndex hurst() const noexcept { return first_.hurst(); }
  const GridSpec& grid() const noexcept { return first_.grid(); }
  std::size_t n() const noexcept { return grid().n(); }

  /// (B2, B1).
  FbmPath2D swapped() const { return FbmPath2D(second_, first_); }

 private:
  FbmPath1D first_;
  FbmPath1D second_;
};

/// ((B1 + B2) / sqrt 2, (B1 - B2) / sqrt 2) pointwise; an involution, and the
/// image of a 2D fBm is again a 2D fBm with independent components.
FbmPath2D rotate_pair(const FbmPath2D& path);

/// CSV with header `t,b1,b2`, one row per grid point, 17 significant digits.
void write_path_csv(std::ostream& out, const FbmPath2D& path);
FbmPath2D read_path_csv(std::istream& in, HurstIndex hurst);

}  // namespace fbm
