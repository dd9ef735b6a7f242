// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

// Probabilists' Hermite polynomials, H_q(x) = (-1)^q e^{x^2/2} d^q/dx^q e^{-x^2/2}
// (H_2 = x^2 - 1, H_3 = x^3 - 3x, ...). The physicists' family (H_2 = 4x^2 - 2)
// is not supported anywhere in this library.

#pragma once

#include <cstddef>
#include <vector>

#include "fbm/hurst.hpp"

namespace fbm {

inline constexpr int kMaxHermiteDegree = 32;
inline constexpr int kMaxMonomialDegree = 8;

/// H_q(x) by the three-term recurrence H_{q+1} = x H_q - q H_{q-1}; q <= 32.
double hermite_eval(int q, double x);

/// Coefficients c_q with x^degree = sum_q c_q H_q(x).
struct HermiteCoeffs {
  int degree = 0;
  std::vector<double> coeffs;  // size degree + 1

  double operator[](int q) const { return coeffs.at(static_cast<std::size_t>(q)); }
  /// sum_q c_q H_q(x); equals x^degree.
  double evaluate(double x) const;
};

/// Expansion of x^p in Hermite polynomials, p <= 8. For example
/// x^3 = H_3 + 3 H_1 and x^4 = H_4 + 6 H_2 + 3.
HermiteCoeffs monomial_to_hermite(int p);

/// Result of the Breuer-Major constant computation
///   sigma_H^2 = 2 sum_{k in Z} rho_H(k)^2,
/// with a truncation certificate.
struct SigmaResult {
  double value = 0.0;            // sigma_H from the 2K-term partial sum plus tail
  double value_at_k = 0.0;       // sigma_H from the K-term partial sum plus tail
  double difference = 0.0;       // |value - value_at_k|
  double tail_bound = 0.0;       // bound on the omitted part of sigma^2 beyond 2K
  std::size_t truncation = 0;    // K
  double tolerance = 0.0;

  double variance() const noexcept { return value * value; }
};

inline constexpr std::size_t kDefaultSigmaTruncation = 1'000'000;

/// Needs 0 < H < 3/4 (the series diverges at 3/4). Starts at K = initial_k and
/// doubles K until the two truncations agree to tol. Throws a numeric error if
/// that does not happen before K reaches 2^28.
SigmaResult sigma_h(HurstIndex h, double tol,
                    std::size_t initial_k = kDefaultSigmaTruncation);

}  // namespace fbm
