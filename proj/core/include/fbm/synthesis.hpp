// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

// Exact samplers for fractional Gaussian noise. Both target the law whose
// increment covariance is step^{2H} rho_H(k - l):
//  - CholeskySampler factors the Toeplitz covariance once (O(n^3)) and draws
//    each path in O(n^2);
//  - CirculantSampler embeds the covariance in a circulant of size 2n and
//    draws each path with one FFT (Davies-Harte).
// Samplers are immutable after construction and safe to share across threads.

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fbm/grid.hpp"
#include "fbm/hurst.hpp"
#include "fbm/path.hpp"
#include "fbm/rng.hpp"

namespace fbm {

enum class Algorithm { kCholesky, kCirculant };

const char* to_string(Algorithm algo) noexcept;
Algorithm parse_algorithm(const std::string& text);

inline constexpr std::size_t kDefaultCholeskyCap = 4096;

// Substream layout: a 1D draw uses substream 0, the components of a 2D draw
// use substreams 1 and 2.
inline constexpr std::uint64_t kSubstream1D = 0;
inline constexpr std::uint64_t kSubstreamFirst = 1;
inline constexpr std::uint64_t kSubstreamSecond = 2;

class CholeskySampler {
 public:
  CholeskySampler(HurstIndex h, GridSpec grid, std::size_t cap = kDefaultCholeskyCap);

  HurstIndex hurst() const noexcept { return h_; }
  const GridSpec& grid() const noexcept { return grid_; }

  void fill_increments(GaussianStream& rng, std::span<double> out) const;
  FbmPath1D sample(const SeedSpec& seed, std::uint64_t substream = kSubstream1D) const;

 private:
  HurstIndex h_;
  GridSpec grid_;
  std::vector<double> lower_;  // packed row-major lower factor of the unit-step covariance
  double scale_;               // step^H
};

class CirculantSampler {
 public:
  static constexpr double kEigenvalueTolerance = 1e-10;  // relative to the largest

  CirculantSampler(HurstIndex h, GridSpec grid);

  HurstIndex hurst() const noexcept { return h_; }
  const GridSpec& grid() const noexcept { return grid_; }
  /// Smallest embedding eigenvalue divided by the largest, before clamping.
  double min_relative_eigenvalue() const noexcept { return min_relative_eigenvalue_; }

  void fill_increments(GaussianStream& rng, std::span<double> out) const;
  FbmPath1D sample(const SeedSpec& seed, std::uint64_t substream = kSubstream1D) const;

 private:
  struct Plan;

  HurstIndex h_;
  GridSpec grid_;
  std::vector<double> amplitude_;  // sqrt(lambda_j / m), m = 2n
  double min_relative_eigenvalue_;
  double scale_;
  std::shared_ptr<const Plan> plan_;
};

/// Owns one sampler for a fixed (H, grid, algorithm).
class PathSynthesizer {
 public:
  PathSynthesizer(HurstIndex h, GridSpec grid, Algorithm algo,
                  std::size_t cholesky_cap = kDefaultCholeskyCap);

  Algorithm algorithm() const noexcept;
  HurstIndex hurst() const noexcept;
  const GridSpec& grid() const noexcept;

  FbmPath1D sample(const SeedSpec& seed, std::uint64_t substream = kSubstream1D) const;
  /// Components from substreams 1 and 2 of the same seed.
  FbmPath2D sample_2d(const SeedSpec& seed) const;

 private:
  std::variant<CholeskySampler, CirculantSampler> impl_;
};

/// Circulant for power-of-two n, Cholesky otherwise.
Algorithm default_algorithm(std::size_t n) noexcept;

FbmPath1D sample_fgn_cholesky(HurstIndex h, GridSpec grid, const SeedSpec& seed,
                              std::size_t cap = kDefaultCholeskyCap);
FbmPath1D sample_fgn_circulant(HurstIndex h, GridSpec grid, const SeedSpec& seed);
FbmPath2D sample_path_2d(HurstIndex h, GridSpec grid, const SeedSpec& seed,
                         Algorithm algo);
FbmPath2D sample_path_2d(HurstIndex h, GridSpec grid, const SeedSpec& seed);

}  // namespace fbm
