// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/rate_fit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "fbm/error.hpp"

namespace fbm {

RateFit fit_log_log(std::span<const double> n, std::span<const double> values,
                    std::size_t min_points) {
  if (n.size() != values.size()) {
    fail(ErrorKind::kDomain, "rate fit: size and value lists differ in length");
  }
  if (n.size() < std::max<std::size_t>(min_points, 2)) {
    std::ostringstream os;
    os << "rate fit needs at least " << std::max<std::size_t>(min_points, 2)
       << " sizes, got " << n.size();
    fail(ErrorKind::kInsufficientData, os.str());
  }
  const std::size_t m = n.size();
  std::vector<double> x(m), y(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!(n[i] > 0.0) || !(values[i] > 0.0) || !std::isfinite(values[i])) {
      std::ostringstream os;
      os << "rate fit: nonpositive pair (" << n[i] << ", " << values[i] << ")";
      fail(ErrorKind::kDomain, os.str());
    }
    x[i] = std::log(n[i]);
    y[i] = std::log(values[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) fail(ErrorKind::kInsufficientData, "rate fit: all sizes equal");

  RateFit fit;
  fit.points = m;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double e = y[i] - (fit.intercept + fit.slope * x[i]);
    ssr += e * e;
  }
  fit.residual = std::sqrt(ssr / static_cast<double>(m));
  fit.slope_stderr = m > 2 ? std::sqrt(ssr / static_cast<double>(m - 2) / sxx) : 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  fit.max_min_ratio = *hi / *lo;
  return fit;
}

}  // namespace fbm
