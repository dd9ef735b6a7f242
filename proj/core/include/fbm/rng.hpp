// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace fbm {

/// SplitMix64 finaliser; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Identifies one replication's random stream. The stream is a pure function
/// of (master_seed, replication_index, substream), so results never depend on
/// which worker ran a replication or in which order.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t replication_index = 0;

  /// Seed of an independent substream (e.g. one per path component).
  std::uint64_t stream_seed(std::uint64_t substream = 0) const noexcept {
    std::uint64_t s = mix64(master_seed);
    s = mix64(s ^ (replication_index * 0xd1b54a32d192ed03ULL));
    return mix64(s ^ ((substream + 1) * 0x8cb92ba72f3d8dd7ULL));
  }

  /// Derives a new master seed, e.g. one per grid size of an experiment.
  SeedSpec child(std::uint64_t tag) const noexcept {
    return SeedSpec{mix64(master_seed ^ mix64(tag + 0x5851f42d4c957f2dULL)), replication_index};
  }

  bool operator==(const SeedSpec&) const = default;
};

/// Standard normal variates from a 64-bit Mersenne Twister via the Marsaglia
/// polar method. Uniforms use the top 53 bits of each draw. Both engine and
/// transform are fully specified, so output is bit-reproducible across
/// standard libraries (unlike std::normal_distribution).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() noexcept {  // in [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double normal() noexcept;

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fbm
