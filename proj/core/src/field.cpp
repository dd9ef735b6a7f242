// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/field.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "fbm/error.hpp"
#include "fbm/hermite.hpp"

namespace fbm {
namespace {

using Derivative = double (*)(int order, double x);

double d_identity(int order, double x) {
  switch (order) {
    case 0: return x;
    case 1: return 1.0;
    default: return 0.0;
  }
}

double d_one(int order, double) { return order == 0 ? 1.0 : 0.0; }

double d_half_square(int order, double x) {  // x^2 / 2
  switch (order) {
    case 0: return 0.5 * x * x;
    case 1: return x;
    case 2: return 1.0;
    default: return 0.0;
  }
}

double d_sin(int order, double x) {
  switch (order % 4) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return -std::cos(x);
  }
}

// d^a/dx^a [x e^{-x^2/2}] = (-1)^a He_{a+1}(x) e^{-x^2/2}
double d_gauss_bump(int order, double x) {
  const double sign = (order % 2 == 0) ? 1.0 : -1.0;
  return sign * hermite_eval(order + 1, x) * std::exp(-0.5 * x * x);
}

ScalarField separable(std::string name, Derivative u, Derivative v) {
  return ScalarField(std::move(name), kMaxPartialOrder,
                     [u, v](int a, int b, double x, double y) { return u(a, x) * v(b, y); });
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ScalarField::ScalarField(std::string name, int max_order, PartialFn partial)
    : name_(std::move(name)), max_order_(max_order), partial_(std::move(partial)) {
  if (max_order_ < 0) fail(ErrorKind::kDomain, "field " + name_ + " has negative order");
}

double ScalarField::partial(int a, int b, double x, double y) const {
  if (a < 0 || b < 0 || a + b > max_order_) {
    std::ostringstream os;
    os << "partial (" << a << ", " << b << ") of " << name_ << " exceeds order " << max_order_;
    fail(ErrorKind::kDomain, os.str());
  }
  return partial_(a, b, x, y);
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"product", "quartic", "trigprod",
                                              "gaussprod", "unit", "xcoord"};
  return names;
}

ScalarField catalog_get(const std::string& name) {
  if (name == "product") return separable(name, d_identity, d_identity);
  if (name == "quartic") return separable(name, d_half_square, d_half_square);
  if (name == "trigprod") return separable(name, d_sin, d_sin);
  if (name == "gaussprod") return separable(name, d_gauss_bump, d_gauss_bump);
  if (name == "unit") return separable(name, d_one, d_one);
  if (name == "xcoord") return separable(name, d_identity, d_one);
  fail(ErrorKind::kLookup, "unknown catalog field '" + name + "'");
}

ScalarField derivative_field(const ScalarField& f, int i, int j) {
  if (i < 0 || j < 0 || i + j > f.max_order()) {
    fail(ErrorKind::kDomain, "derivative order exceeds field order for " + f.name());
  }
  std::ostringstream name;
  name << "d" << i << j << "(" << f.name() << ")";
  return ScalarField(name.str(), f.max_order() - i - j,
                     [f, i, j](int a, int b, double x, double y) {
                       return f.partial(a + i, b + j, x, y);
                     });
}

ScalarField rotated_field(const ScalarField& f) {
  // d/dx = (d/du + d/dv) / sqrt 2, d/dy = (d/du - d/dv) / sqrt 2.
  return ScalarField("rot(" + f.name() + ")", f.max_order(),
                     [f](int a, int b, double x, double y) {
                       const double c = 1.0 / std::sqrt(2.0);
                       const double u = (x + y) * c;
                       const double v = (x - y) * c;
                       double s = 0.0;
                       for (int i = 0; i <= a; ++i) {
                         for (int j = 0; j <= b; ++j) {
                           const double sign = ((b - j) % 2 == 0) ? 1.0 : -1.0;
                           s += binomial(a, i) * binomial(b, j) * sign *
                                f.partial(i + j, (a - i) + (b - j), u, v);
                         }
                       }
                       return s * std::pow(c, a + b);
                     });
}

ScalarField swapped_field(const ScalarField& f) {
  return ScalarField("swap(" + f.name() + ")", f.max_order(),
                     [f](int a, int b, double x, double y) { return f.partial(b, a, y, x); });
}

double FieldReport::max_discrepancy() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.max_discrepancy);
  return m;
}

const PartialCheck& FieldReport::worst() const {
  if (checks.empty()) fail(ErrorKind::kValidation, "field report has no checks");
  return *std::max_element(checks.begin(), checks.end(), [](const auto& l, const auto& r) {
    return l.max_discrepancy < r.max_discrepancy;
  });
}

FieldReport inspect_field(const ScalarField& f) {
  constexpr std::array<double, 5> kNodes{-2.0, -1.0, 0.0, 1.0, 2.0};
  constexpr double h = kFiniteDifferenceStep;
  FieldReport report{f.name(), {}};
  for (int order = 1; order <= f.max_order(); ++order) {
    for (int a = order; a >= 0; --a) {
      const int b = order - a;
      PartialCheck check{a, b, 0.0, 0.0, 0.0};
      for (double x : kNodes) {
        for (double y : kNodes) {
          const double exact = f.partial(a, b, x, y);
          const auto record = [&](double estimate) {
            const double d = std::abs(exact - estimate);
            if (!(d <= check.max_discrepancy)) {
              check.max_discrepancy = d;
              check.worst_x = x;
              check.worst_y = y;
            }
          };
          if (a > 0) {
            record((f.partial(a - 1, b, x + h, y) - f.partial(a - 1, b, x - h, y)) / (2 * h));
          }
          if (b > 0) {
            record((f.partial(a, b - 1, x, y + h) - f.partial(a, b - 1, x, y - h)) / (2 * h));
          }
        }
      }
      report.checks.push_back(check);
    }
  }
  return report;
}

FieldReport validate_field(const ScalarField& f) {
  FieldReport report = inspect_field(f);
  for (const auto& c : report.checks) {
    if (!(c.max_discrepancy <= kFieldTolerance)) {
      std::ostringstream os;
      os << "field " << f.name() << ": partial (" << c.a << ", " << c.b
         << ") disagrees with finite differences by " << c.max_discrepancy << " at ("
         << c.worst_x << ", " << c.worst_y << ")";
      fail(ErrorKind::kValidation, os.str());
    }
  }
  return report;
}

}  // namespace fbm
