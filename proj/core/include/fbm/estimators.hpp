// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

// Discrete functionals of sampled paths. Notation: B = (B1, B2) on the grid
// k/n, dB_k = B_{k+1} - B_k. Every sum is accumulated with compensation.
// Functions taking a time t evaluate the sum over k < m with t = m * step;
// off-grid t is a domain error, which keeps the algebraic identities exact.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "fbm/field.hpp"
#include "fbm/grid.hpp"
#include "fbm/path.hpp"
#include "fbm/rng.hpp"

namespace fbm {

/// A realised estimator with its provenance.
struct EstimatorValue {
  double value = 0.0;
  GridSpec grid{2};
  std::string estimator;  // name and parameters, e.g. "vn(g=unit,alpha=1,q=3)"
  SeedSpec seed;
};

/// Symmetric Riemann sum
///   I_n(t) = sum_k (d1f(B1_k, B2_k) + d1f(B1_{k+1}, B2_k)) / 2 * dB1_k
///          + sum_k (d2f(B1_k, B2_k) + d2f(B1_k, B2_{k+1})) / 2 * dB2_k.
double symmetric_integral(const ScalarField& f, const FbmPath2D& path, double t);
double symmetric_integral(const ScalarField& f, const FbmPath2D& path);

/// step^{1-2H} sum_{k<m} dB_k^2 (n^{2H-1} sum on the unit grid); mean m * step.
double quadratic_variation(const FbmPath1D& path, double t);

/// (1/sqrt n) sum_k (n^{2H} dB_k^2 - 1); at H = 1/4 this is the
/// Breuer-Major statistic with limit N(0, sigma_{1/4}^2).
double quadratic_variation_fluctuation(const FbmPath1D& path);

/// sum_{k<m} dB1_k dB2_k, unnormalised.
double mixed_product_sum(const FbmPath2D& path, double t);
double mixed_product_sum(const FbmPath2D& path);

/// V_n = n^{-q/4} sum_k g(B_k) (dB1_k)^alpha H_q(n^{1/4} dB2_k). H = 1/4 only;
/// alpha <= 4, 2 <= q <= 6.
double weighted_hermite_sum_vn(const ScalarField& g, int alpha, int q, const FbmPath2D& path);

/// (G_n, G~_n) with G_n = (1/sqrt n) sum_k g(b_k, b~_k)(sqrt n (db_k)^2 - 1) and
/// G~_n the same with g~ and db~. H = 1/4 only.
std::pair<double, double> weighted_qv_pair_gn(const ScalarField& g, const ScalarField& gtilde,
                                              const FbmPath2D& pair);

inline constexpr int kSnCount = 10;

/// The ten third/fourth-order sums of the Taylor expansion behind the
/// change-of-variable formula, over k < n:
///   1  d111 f (dB1)^3        2  d1111 f (dB1)^4
///   3  d222 f (dB2)^3        4  d2222 f (dB2)^4
///   5  d12 f dB1 dB2         6  d112 f (dB1)^2 dB2
///   7  d122 f dB1 (dB2)^2    8  d1122 f (dB1)^2 (dB2)^2
///   9  d1112 f (dB1)^3 dB2  10  d1222 f dB1 (dB2)^3
/// with partials evaluated at B_k. H = 1/4 only.
double sn_sum(int i, const ScalarField& f, const FbmPath2D& path);

/// L^2 limit of sn_sum(i) as a multiple of int_0^1 d_{ab} f(B_s) ds; i = 5
/// returns the drift part only (its stable limit adds a mixed-Gaussian term)
/// and i = 9, 10 have limit zero.
struct SnLimit {
  int a = 0;
  int b = 0;
  double coefficient = 0.0;
};
SnLimit sn_limit(int i);

/// f(B_t) - f(0) - I_n(t).
double cov_residual(const ScalarField& f, const FbmPath2D& path, double t);
double cov_residual(const ScalarField& f, const FbmPath2D& path);

/// Trapezoidal int_0^t phi(B1_s, B2_s) ds on the grid; used as a Monte Carlo
/// oracle for limits of the form E int phi(B_s) ds.
double time_integral(const FbmPath2D& path, const std::function<double(double, double)>& phi,
                     double t);

/// Trapezoidal int_0^1 B1_s ds.
double path_integral_first(const FbmPath2D& path);

}  // namespace fbm
