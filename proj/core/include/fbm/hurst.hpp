// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <compare>

namespace fbm {

enum class Regime { kRough, kCritical, kSmooth };  // H < 1/4, H = 1/4, H > 1/4

/// Validated Hurst parameter, 0 < h < 1.
class HurstIndex {
 public:
  static constexpr double kCriticalValue = 0.25;
  static constexpr double kCriticalTolerance = 1e-12;

  explicit HurstIndex(double h);

  static HurstIndex critical() { return HurstIndex(kCriticalValue); }

  double value() const noexcept { return h_; }
  double two_h() const noexcept { return 2.0 * h_; }

  /// Values within 1e-12 of 1/4 are treated as the critical index so that
  /// parsed decimals like 0.25 classify consistently with comparison on h.
  Regime regime() const noexcept;
  bool is_critical() const noexcept { return regime() == Regime::kCritical; }

  friend auto operator<=>(const HurstIndex&, const HurstIndex&) = default;

 private:
  double h_;
};

const char* to_string(Regime regime) noexcept;

}  // namespace fbm
