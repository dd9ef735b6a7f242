// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/hermite.hpp"

#include <cmath>
#include <sstream>

#include "fbm/error.hpp"
#include "fbm/kernels.hpp"
#include "fbm/summation.hpp"

namespace fbm {

double hermite_eval(int q, double x) {
  if (q < 0 || q > kMaxHermiteDegree) {
    std::ostringstream os;
    os << "Hermite degree " << q << " outside [0, " << kMaxHermiteDegree << "]";
    fail(ErrorKind::kDomain, os.str());
  }
  if (q == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int j = 1; j < q; ++j) {
    const double next = x * cur - j * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double HermiteCoeffs::evaluate(double x) const {
  double s = 0.0;
  for (int q = 0; q <= degree; ++q) {
    if (coeffs[q] != 0.0) s += coeffs[q] * hermite_eval(q, x);
  }
  return s;
}

HermiteCoeffs monomial_to_hermite(int p) {
  if (p < 0 || p > kMaxMonomialDegree) {
    std::ostringstream os;
    os << "monomial degree " << p << " outside [0, " << kMaxMonomialDegree << "]";
    fail(ErrorKind::kDomain, os.str());
  }
  // Multiply by x repeatedly using x H_q = H_{q+1} + q H_{q-1}.
  std::vector<double> c{1.0};
  for (int d = 0; d < p; ++d) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t q = 0; q < c.size(); ++q) {
      next[q + 1] += c[q];
      if (q >= 1) next[q - 1] += static_cast<double>(q) * c[q];
    }
    c = std::move(next);
  }
  return HermiteCoeffs{p, std::move(c)};
}

namespace {

// sum_{k=from}^{to} rho(k)^2, smallest terms first.
double rho_squared_block(HurstIndex h, std::size_t from, std::size_t to) {
  CompensatedSum acc;
  for (std::size_t k = to; k >= from && k > 0; --k) {
    const double r = rho_h(h, static_cast<std::int64_t>(k));
    acc += r * r;
  }
  return acc.value();
}

// For k >= 2, |rho(k)| = |f''(xi)| / 2 with f(x) = x^{2H}, xi in (k-1, k+1),
// so |rho(k)| <= H |2H - 1| (k - 1)^{2H-2}. Summing the square from K+1 on and
// comparing with an integral gives the bound on 2 sum_{k>K} rho(k)^2.
double two_sided_tail(HurstIndex h, std::size_t k_max) {
  const double hv = h.value();
  const double c = hv * std::abs(2.0 * hv - 1.0);
  const double e = 3.0 - 4.0 * hv;  // > 0 for H < 3/4
  const double base = static_cast<double>(k_max) - 1.0;
  return 2.0 * c * c * std::pow(base, -e) / e;
}

}  // namespace

SigmaResult sigma_h(HurstIndex h, double tol, std::size_t initial_k) {
  if (!(h.value() < 0.75)) {
    fail(ErrorKind::kUnsupportedRegime, "sigma_H is defined for H < 3/4 only");
  }
  if (!(tol > 0.0)) fail(ErrorKind::kDomain, "sigma tolerance must be positive");
  if (initial_k < 2) initial_k = 2;
  constexpr std::size_t kMaxTruncation = std::size_t{1} << 28;

  std::size_t k = initial_k;
  double partial_k = rho_squared_block(h, 1, k);  // sum_{1..K}
  for (;;) {
    const double partial_2k = partial_k + rho_squared_block(h, k + 1, 2 * k);
    // sigma^2 = 2 (1 + 2 sum_{k>=1} rho^2); the tail estimate is added as its
    // midpoint so that the truncation error is at most half the bound.
    const double tail_k = two_sided_tail(h, k);
    const double tail_2k = two_sided_tail(h, 2 * k);
    const double var_k = 2.0 * (1.0 + 2.0 * partial_k) + tail_k;
    const double var_2k = 2.0 * (1.0 + 2.0 * partial_2k) + tail_2k;
    SigmaResult res;
    res.value = std::sqrt(var_2k);
    res.value_at_k = std::sqrt(var_k);
    res.difference = std::abs(res.value - res.value_at_k);
    res.tail_bound = 2.0 * tail_2k;
    res.truncation = k;
    res.tolerance = tol;
    if (res.difference < tol) return res;
    if (2 * k > kMaxTruncation) {
      std::ostringstream os;
      os << "sigma_H did not stabilise to " << tol << " before K = " << kMaxTruncation
         << " (H = " << h.value() << ", last difference " << res.difference << ")";
      fail(ErrorKind::kNumeric, os.str());
    }
    partial_k = partial_2k;
    k *= 2;
  }
}

}  // namespace fbm
