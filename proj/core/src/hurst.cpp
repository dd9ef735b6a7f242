// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/hurst.hpp"

#include <sstream>

#include "fbm/error.hpp"

namespace fbm {

HurstIndex::HurstIndex(double h) : h_(h) {
  if (!(h > 0.0 && h < 1.0)) {
    std::ostringstream os;
    os << "Hurst index must lie in (0, 1), got " << h;
    fail(ErrorKind::kDomain, os.str());
  }
}

Regime HurstIndex::regime() const noexcept {
  if (std::abs(h_ - kCriticalValue) <= kCriticalTolerance) return Regime::kCritical;
  return h_ < kCriticalValue ? Regime::kRough : Regime::kSmooth;
}

const char* to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::kRough: return "rough";
    case Regime::kCritical: return "critical";
    case Regime::kSmooth: return "smooth";
  }
  return "unknown";
}

}  // namespace fbm
