// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fbm/fbm.hpp"
#include "oracles.hpp"

namespace fbm {
namespace {

const HurstIndex kCritical = HurstIndex::critical();

FbmPath2D path_from(const std::vector<double>& b1, const std::vector<double>& b2,
                    HurstIndex h = kCritical) {
  const GridSpec grid(b1.size() - 1);
  return FbmPath2D(FbmPath1D(h, grid, b1), FbmPath1D(h, grid, b2));
}

FbmPath2D sample(std::size_t n, std::uint64_t master, std::size_t r, HurstIndex h = kCritical) {
  return sample_path_2d(h, GridSpec(n), SeedSpec{master, r});
}

double sigma_squared() { return oracle::golden()["sigma_quarter"]["variance"]; }

TEST(SymmetricIntegral, TelescopesForFirstCoordinate) {
  const auto x = catalog_get("xcoord");
  for (std::size_t r = 0; r < 10; ++r) {
    const auto p = sample(64, 301, r);
    for (std::size_t m = 1; m <= 64; m += 7) {
      const double t = m / 64.0;
      EXPECT_NEAR(symmetric_integral(x, p, t), p.first()[m], 1e-14);
      EXPECT_NEAR(cov_residual(x, p, t), 0.0, 1e-14);
    }
  }
}

TEST(SymmetricIntegral, ProductResidualIsMixedSum) {
  const auto product = catalog_get("product");
  for (std::size_t r = 0; r < 10; ++r) {
    const auto p = sample(256, 302, r);
    const double mixed = mixed_product_sum(p);
    const double lhs = p.first()[256] * p.second()[256] - symmetric_integral(product, p);
    EXPECT_NEAR(lhs, mixed, 1e-10 * std::abs(mixed) + 1e-14);
    EXPECT_NEAR(cov_residual(product, p), mixed, 1e-10 * std::abs(mixed) + 1e-14);
  }
}

TEST(SymmetricIntegral, MatchesTermByTermTrigSum) {
  const std::vector<double> b1{0.0, 0.3, -0.2, 0.5, 0.1};
  const std::vector<double> b2{0.0, -0.4, 0.1, 0.25, 0.9};
  const double ref = oracle::trigprod_symmetric_sum(b1, b2);
  EXPECT_NEAR(symmetric_integral(catalog_get("trigprod"), path_from(b1, b2)), ref, 1e-15);
  EXPECT_NEAR(symmetric_integral(catalog_get("trigprod"), path_from(b1, b2), 0.5),
              oracle::trigprod_symmetric_sum({b1.begin(), b1.begin() + 3}, {b2.begin(), b2.begin() + 3}),
              1e-15);
}

TEST(SymmetricIntegral, SwapSymmetry) {
  for (const auto& name : catalog_names()) {
    const auto f = catalog_get(name);
    const auto p = sample(128, 303, 0);
    const double a = symmetric_integral(f, p);
    const double b = symmetric_integral(swapped_field(f), p.swapped());
    EXPECT_NEAR(a, b, 1e-12 * (1.0 + std::abs(a))) << name;
  }
}

TEST(SymmetricIntegral, RejectsOffGridTimes) {
  const auto p = sample(8, 304, 0);
  EXPECT_THROW(symmetric_integral(catalog_get("product"), p, 0.3), Error);
  EXPECT_THROW(symmetric_integral(catalog_get("product"), p, 2.0), Error);
  EXPECT_THROW(cov_residual(catalog_get("product"), p, 0.0), Error);
}

TEST(QuadraticVariation, ExactExpectationThroughKernel) {
  for (const double h : {0.1, 0.25, 0.4, 0.7}) {
    const std::int64_t n = 512;
    double e = 0.0;
    for (std::int64_t k = 0; k < n; ++k) e += inner_delta_delta(HurstIndex(h), k, k, n);
    EXPECT_NEAR(std::pow(1.0 / n, 1.0 - 2.0 * h) * e, 1.0, 1e-12);
  }
}

TEST(QuadraticVariation, MonteCarloMean) {
  const std::size_t reps = 400;
  std::vector<double> v(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    v[r] = quadratic_variation(sample_fgn_circulant(kCritical, GridSpec(4096), SeedSpec{305, r}), 1.0);
  }
  const auto m = moments(v);
  EXPECT_NEAR(m.mean, 1.0, 3.0 * m.se);
}

// The fluctuation of the quadratic variation is O(n^{-1/2}), so its standard
// deviation has log-log slope -1/2 and its variance slope -1.
TEST(QuadraticVariation, SpreadShrinksAtRootRate) {
  const std::vector<double> ns{256, 512, 1024, 2048, 4096};
  std::vector<double> sd;
  for (const double nd : ns) {
    const auto n = static_cast<std::size_t>(nd);
    std::vector<double> v(300);
    for (std::size_t r = 0; r < v.size(); ++r) {
      v[r] = quadratic_variation(sample_fgn_circulant(kCritical, GridSpec(n), SeedSpec{306 + n, r}), 1.0);
    }
    sd.push_back(moments(v).stddev());
  }
  EXPECT_NEAR(rate_regression(ns, sd).slope, -0.5, 0.1);
}

TEST(QuadraticVariation, HermiteReduction) {
  const auto c = monomial_to_hermite(2);
  for (const double h : {0.25, 0.4}) {
    const auto p = sample_fgn_circulant(HurstIndex(h), GridSpec(1024), SeedSpec{307, 0});
    const double n = 1024.0;
    double acc = 0.0;
    for (std::size_t k = 0; k < 1024; ++k) {
      const double x = std::pow(n, h) * p.increment(k);
      acc += c[2] * hermite_eval(2, x) + c[1] * hermite_eval(1, x) + c[0];
    }
    const double via_hermite = acc / n;
    EXPECT_NEAR(via_hermite, quadratic_variation(p, 1.0), 1e-10);
  }
}

TEST(MixedProductSum, ZeroSecondComponent) {
  const auto p = sample(64, 308, 0);
  const FbmPath1D zero(kCritical, GridSpec(64), std::vector<double>(65, 0.0));
  EXPECT_EQ(mixed_product_sum(FbmPath2D(p.first(), zero)), 0.0);
}

TEST(MixedProductSum, VarianceNearHalfSigmaSquared) {
  const std::size_t reps = 1000;
  std::vector<double> v(reps);
  for (std::size_t r = 0; r < reps; ++r) v[r] = mixed_product_sum(sample(4096, 309, r));
  const double target = sigma_squared() / 2.0;
  EXPECT_NEAR(moments(v).variance, target, 4.0 * target * std::sqrt(2.0 / reps));
}

TEST(WeightedHermite, UnitWeightIsQuadraticFluctuation) {
  const auto unit = catalog_get("unit");
  for (std::size_t r = 0; r < 5; ++r) {
    const auto p = sample(1024, 310, r);
    EXPECT_NEAR(weighted_hermite_sum_vn(unit, 0, 2, p), quadratic_variation_fluctuation(p.second()),
                1e-12);
  }
}

TEST(WeightedHermite, ZeroPathWithIncrementPower) {
  const FbmPath1D zero(kCritical, GridSpec(32), std::vector<double>(33, 0.0));
  const FbmPath2D p(zero, zero);
  for (int alpha = 1; alpha <= 4; ++alpha) {
    for (int q = 2; q <= 6; ++q) EXPECT_EQ(weighted_hermite_sum_vn(catalog_get("trigprod"), alpha, q, p), 0.0);
  }
}

TEST(WeightedHermite, DomainAndRegimeErrors) {
  const auto p = sample(64, 311, 0);
  const auto g = catalog_get("unit");
  EXPECT_THROW(weighted_hermite_sum_vn(g, 5, 2, p), Error);
  EXPECT_THROW(weighted_hermite_sum_vn(g, 0, 1, p), Error);
  EXPECT_THROW(weighted_hermite_sum_vn(g, 0, 7, p), Error);
  try {
    weighted_hermite_sum_vn(g, 0, 2, sample(64, 311, 0, HurstIndex(0.3)));
    FAIL() << "expected an unsupported-regime error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedRegime);
  }
}

TEST(WeightedHermite, UnitWeightVarianceMatchesSigma) {
  const std::size_t reps = 2000;
  std::vector<double> v(reps);
  const auto unit = catalog_get("unit");
  for (std::size_t r = 0; r < reps; ++r) v[r] = weighted_hermite_sum_vn(unit, 0, 2, sample(4096, 312, r));
  EXPECT_LT(std::abs(moments(v).variance / sigma_squared() - 1.0), 0.05);
}

TEST(WeightedHermite, MeanSquareDecayRate) {
  const std::vector<double> ns{256, 512, 1024, 2048, 4096, 8192};
  const auto g = catalog_get("trigprod");
  std::vector<double> ms;
  for (const double nd : ns) {
    const auto n = static_cast<std::size_t>(nd);
    std::vector<double> v(500);
    for (std::size_t r = 0; r < v.size(); ++r) v[r] = weighted_hermite_sum_vn(g, 1, 3, sample(n, 313 + n, r));
    ms.push_back(moments(v).second_moment);
  }
  EXPECT_NEAR(rate_regression(ns, ms).slope, -1.0, 0.15);
}

TEST(WeightedQvPair, UnitWeightsReduceToFluctuations) {
  const auto unit = catalog_get("unit");
  const auto p = sample(2048, 314, 0);
  const auto [g1, g2] = weighted_qv_pair_gn(unit, unit, p);
  EXPECT_NEAR(g1, quadratic_variation_fluctuation(p.first()), 1e-12);
  EXPECT_NEAR(g2, quadratic_variation_fluctuation(p.second()), 1e-12);
}

TEST(WeightedQvPair, CoordinateSwapSymmetry) {
  const auto g = catalog_get("trigprod");
  const auto gt = catalog_get("gaussprod");
  const auto p = sample(512, 315, 0);
  const auto [a1, a2] = weighted_qv_pair_gn(g, gt, p);
  const auto [b1, b2] = weighted_qv_pair_gn(swapped_field(gt), swapped_field(g), p.swapped());
  EXPECT_NEAR(a1, b2, 1e-13);
  EXPECT_NEAR(a2, b1, 1e-13);
}

TEST(SnFamily, Examples) {
  const auto product = catalog_get("product");
  for (std::size_t r = 0; r < 5; ++r) {
    const auto p = sample(512, 316, r);
    EXPECT_EQ(sn_sum(5, product, p), mixed_product_sum(p));
    EXPECT_EQ(sn_sum(8, product, p), 0.0);
  }
  EXPECT_THROW(sn_sum(0, product, sample(16, 316, 0)), Error);
  EXPECT_THROW(sn_sum(11, product, sample(16, 316, 0)), Error);
  EXPECT_THROW(sn_sum(5, product, sample(16, 316, 0, HurstIndex(0.3))), Error);
  EXPECT_EQ(sn_limit(1).coefficient, -1.5);
  EXPECT_EQ(sn_limit(8).a, 2);
  EXPECT_EQ(sn_limit(8).b, 2);
  EXPECT_EQ(sn_limit(9).coefficient, 0.0);
}

TEST(SnFamily, FourthOrderMixedDrift) {
  const auto quartic = catalog_get("quartic");
  const std::size_t reps = 400, n = 4096;
  std::vector<double> s(reps), oracle_values(reps);
  const auto d1122 = [&](double x, double y) { return quartic.partial(2, 2, x, y); };
  for (std::size_t r = 0; r < reps; ++r) {
    s[r] = sn_sum(8, quartic, sample(n, 317, r));
    oracle_values[r] = time_integral(sample(n, 318, r), d1122, 1.0);
  }
  const auto ms = moments(s);
  const auto mo = moments(oracle_values);
  EXPECT_NEAR(ms.mean, sn_limit(8).coefficient * mo.mean, 3.0 * std::hypot(ms.se, mo.se));
}

TEST(SnFamily, RotationDecomposition) {
  for (const auto& name : catalog_names()) {
    const auto f = catalog_get(name);
    const auto g = rotated_field(derivative_field(f, 1, 1));
    for (std::size_t r = 0; r < 5; ++r) {
      const auto p = sample(1024, 319, r);
      const auto [gn, gtn] = weighted_qv_pair_gn(g, g, rotate_pair(p));
      const double s5 = sn_sum(5, f, p);
      EXPECT_NEAR(s5, 0.5 * (gn - gtn), 1e-9) << name;
    }
  }
}

TEST(TimeIntegral, TrapezoidRule) {
  const auto p = sample(64, 320, 0);
  EXPECT_NEAR(time_integral(p, [](double, double) { return 1.0; }, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(time_integral(p, [](double, double) { return 2.0; }, 0.5), 1.0, 1e-15);
  std::vector<double> line(9);
  for (std::size_t k = 0; k < line.size(); ++k) line[k] = k / 8.0;
  EXPECT_NEAR(path_integral_first(path_from(line, line)), 0.5, 1e-15);
}

}  // namespace
}  // namespace fbm
