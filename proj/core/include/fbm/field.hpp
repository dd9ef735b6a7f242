// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fbm {

inline constexpr int kMaxPartialOrder = 4;

/// f: R^2 -> R with closed-form partial derivatives d^{a+b} f / dx^a dy^b for
/// a + b <= max_order(). Cheap to copy; safe to share between threads.
class ScalarField {
 public:
  using PartialFn = std::function<double(int a, int b, double x, double y)>;

  ScalarField(std::string name, int max_order, PartialFn partial);

  const std::string& name() const noexcept { return name_; }
  int max_order() const noexcept { return max_order_; }

  double eval(double x, double y) const { return partial_(0, 0, x, y); }
  /// Domain error when a or b is negative or a + b exceeds max_order().
  double partial(int a, int b, double x, double y) const;

 private:
  std::string name_;
  int max_order_;
  PartialFn partial_;
};

/// Names accepted by catalog_get: product, quartic, trigprod, gaussprod, unit, xcoord.
const std::vector<std::string>& catalog_names();

/// product   f = x y
/// quartic   f = x^2 y^2 / 4
/// trigprod  f = sin x sin y
/// gaussprod f = x y exp(-(x^2 + y^2) / 2)
/// unit      f = 1
/// xcoord    f = x
/// Unknown names are a lookup error.
ScalarField catalog_get(const std::string& name);

/// (x, y) -> d^{i+j} f / dx^i dy^j, with max order reduced by i + j.
ScalarField derivative_field(const ScalarField& f, int i, int j);

/// (x, y) -> f((x + y) / sqrt 2, (x - y) / sqrt 2), same max order.
ScalarField rotated_field(const ScalarField& f);

/// (x, y) -> f(y, x).
ScalarField swapped_field(const ScalarField& f);

struct PartialCheck {
  int a = 0;
  int b = 0;
  double max_discrepancy = 0.0;
  double worst_x = 0.0;
  double worst_y = 0.0;
};

struct FieldReport {
  std::string name;
  std::vector<PartialCheck> checks;  // one per (a, b), 1 <= a + b <= max_order
  double max_discrepancy() const;
  const PartialCheck& worst() const;
};

inline constexpr double kFiniteDifferenceStep = 1e-5;
inline constexpr double kFieldTolerance = 1e-6;

/// Compares every analytic partial against central finite differences (step
/// 1e-5) of the next-lower partial on a 5x5 grid of [-2, 2]^2. Mixed partials
/// are checked through both differentiation orders.
FieldReport inspect_field(const ScalarField& f);

/// inspect_field, then a validation error naming (a, b) and the point when any
/// discrepancy exceeds 1e-6.
FieldReport validate_field(const ScalarField& f);

}  // namespace fbm
