// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "fbm/fbm.hpp"

namespace fbm {
namespace {

TEST(Catalog, Examples) {
  const auto product = catalog_get("product");
  EXPECT_EQ(product.partial(1, 1, 0.3, -2.0), 1.0);
  EXPECT_EQ(product.partial(2, 2, 0.3, -2.0), 0.0);
  EXPECT_EQ(catalog_get("trigprod").partial(1, 1, 0.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(catalog_get("quartic").eval(2.0, 3.0), 9.0);
  EXPECT_EQ(catalog_get("quartic").partial(2, 2, 0.7, 0.1), 1.0);
  EXPECT_DOUBLE_EQ(catalog_get("gaussprod").eval(1.0, 1.0), std::exp(-1.0));
  EXPECT_EQ(catalog_get("unit").eval(5.0, -5.0), 1.0);
  EXPECT_EQ(catalog_get("xcoord").partial(1, 0, 5.0, -5.0), 1.0);
  EXPECT_EQ(catalog_get("xcoord").partial(0, 1, 5.0, -5.0), 0.0);
}

TEST(Catalog, UnknownNameIsLookupError) {
  try {
    catalog_get("cubic");
    FAIL() << "expected a lookup error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLookup);
  }
}

TEST(Catalog, PartialOrderIsBounded) {
  EXPECT_THROW(catalog_get("product").partial(3, 2, 0.0, 0.0), Error);
  EXPECT_THROW(catalog_get("product").partial(-1, 0, 0.0, 0.0), Error);
}

TEST(Catalog, EveryMemberPassesFiniteDifferenceValidation) {
  for (const auto& name : catalog_names()) {
    const auto report = validate_field(catalog_get(name));
    EXPECT_LT(report.max_discrepancy(), kFieldTolerance) << name;
    EXPECT_EQ(report.checks.size(), 14u) << name;
  }
  EXPECT_LT(inspect_field(catalog_get("product")).max_discrepancy(), 1e-9);
}

TEST(Catalog, CorruptedFieldFailsAtMixedPartial) {
  const auto product = catalog_get("product");
  const ScalarField corrupted("corrupted", 4, [product](int a, int b, double x, double y) {
    return product.partial(a, b, x, y) + (a == 1 && b == 1 ? 1e-3 : 0.0);
  });
  const auto report = inspect_field(corrupted);
  EXPECT_EQ(report.worst().a, 1);
  EXPECT_EQ(report.worst().b, 1);
  try {
    validate_field(corrupted);
    FAIL() << "expected a validation error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
    EXPECT_NE(std::string(e.what()).find("(1, 1)"), std::string::npos) << e.what();
  }
}

TEST(Catalog, MixedPartialStencilsAgree) {
  constexpr double h = kFiniteDifferenceStep;
  for (const auto& name : catalog_names()) {
    const auto f = catalog_get(name);
    for (double x = -2.0; x <= 2.0; x += 1.0) {
      for (double y = -2.0; y <= 2.0; y += 1.0) {
        const double via_x = (f.partial(0, 1, x + h, y) - f.partial(0, 1, x - h, y)) / (2 * h);
        const double via_y = (f.partial(1, 0, x, y + h) - f.partial(1, 0, x, y - h)) / (2 * h);
        EXPECT_NEAR(via_x, via_y, 1e-6) << name;
      }
    }
  }
}

TEST(Catalog, PolynomialEnvelope) {
  for (const auto& name : catalog_names()) {
    const auto f = catalog_get(name);
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; a + b <= 4; ++b) {
        for (double x = -2.0; x <= 2.0; x += 0.5) {
          for (double y = -2.0; y <= 2.0; y += 0.5) {
            const double envelope = 4.0 * std::pow(1.0 + x * x + y * y, 2);
            EXPECT_LE(std::abs(f.partial(a, b, x, y)), envelope) << name;
          }
        }
      }
    }
  }
}

TEST(Composition, DerivedFieldsValidate) {
  for (const auto& name : catalog_names()) {
    const auto f = catalog_get(name);
    const auto rot = rotated_field(f);
    validate_field(rot);
    validate_field(swapped_field(f));
    const auto d12 = derivative_field(f, 1, 1);
    EXPECT_EQ(d12.max_order(), 2);
    validate_field(d12);
    const double c = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(rot.eval(0.3, -1.1), f.eval((0.3 - 1.1) * c, (0.3 + 1.1) * c), 1e-15);
    EXPECT_EQ(swapped_field(f).partial(1, 2, 0.4, 0.9), f.partial(2, 1, 0.9, 0.4));
  }
}

}  // namespace
}  // namespace fbm
