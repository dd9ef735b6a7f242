// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fbm/error.hpp"

namespace fbm {

GridSpec::GridSpec(std::size_t n, double horizon) : n_(n), horizon_(horizon) {
  if (n < 2) fail(ErrorKind::kDomain, "grid needs at least 2 steps");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    fail(ErrorKind::kDomain, "grid horizon must be positive and finite");
  }
}

std::size_t GridSpec::steps_to(double t) const {
  if (!(t > 0.0) || t > horizon_ * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "time " << t << " outside (0, " << horizon_ << "]";
    fail(ErrorKind::kDomain, os.str());
  }
  const double steps = t / step();
  const double m = std::round(steps);
  if (std::abs(steps - m) > 1e-9 * std::max(1.0, steps) || m < 1.0) {
    std::ostringstream os;
    os << "time " << t << " is not a multiple of the grid step " << step();
    fail(ErrorKind::kDomain, os.str());
  }
  return static_cast<std::size_t>(m);
}

}  // namespace fbm
