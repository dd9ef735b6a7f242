// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/estimators.hpp"

#include <cmath>
#include <sstream>

#include "fbm/error.hpp"
#include "fbm/hermite.hpp"
#include "fbm/summation.hpp"

namespace fbm {
namespace {

void require_critical(const FbmPath2D& path, const char* what) {
  if (!path.hurst().is_critical()) {
    std::ostringstream os;
    os << what << " is defined for H = 1/4 only, path has H = " << path.hurst().value();
    fail(ErrorKind::kUnsupportedRegime, os.str());
  }
}

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

struct SnTerm {
  int a, b;      // partial of f
  int p1, p2;    // powers of dB1, dB2
};

constexpr SnTerm kSnTerms[kSnCount] = {
    {3, 0, 3, 0}, {4, 0, 4, 0}, {0, 3, 0, 3}, {0, 4, 0, 4}, {1, 1, 1, 1},
    {2, 1, 2, 1}, {1, 2, 1, 2}, {2, 2, 2, 2}, {3, 1, 3, 1}, {1, 3, 1, 3},
};

}  // namespace

double symmetric_integral(const ScalarField& f, const FbmPath2D& path, double t) {
  const std::size_t m = path.grid().steps_to(t);
  const auto& b1 = path.first();
  const auto& b2 = path.second();
  CompensatedSum acc;
  for (std::size_t k = 0; k < m; ++k) {
    const double x0 = b1[k], x1 = b1[k + 1];
    const double y0 = b2[k], y1 = b2[k + 1];
    acc += 0.5 * (f.partial(1, 0, x0, y0) + f.partial(1, 0, x1, y0)) * (x1 - x0);
    acc += 0.5 * (f.partial(0, 1, x0, y0) + f.partial(0, 1, x0, y1)) * (y1 - y0);
  }
  return acc.value();
}

double symmetric_integral(const ScalarField& f, const FbmPath2D& path) {
  return symmetric_integral(f, path, path.grid().horizon());
}

double quadratic_variation(const FbmPath1D& path, double t) {
  const std::size_t m = path.grid().steps_to(t);
  CompensatedSum acc;
  for (std::size_t k = 0; k < m; ++k) {
    const double d = path.increment(k);
    acc += d * d;
  }
  return std::pow(path.grid().step(), 1.0 - path.hurst().two_h()) * acc.value();
}

double quadratic_variation_fluctuation(const FbmPath1D& path) {
  const std::size_t n = path.grid().n();
  const double norm = std::pow(path.grid().step(), -path.hurst().two_h());
  CompensatedSum acc;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = path.increment(k);
    acc += norm * d * d - 1.0;
  }
  return acc.value() / std::sqrt(static_cast<double>(n));
}

double mixed_product_sum(const FbmPath2D& path, double t) {
  const std::size_t m = path.grid().steps_to(t);
  CompensatedSum acc;
  for (std::size_t k = 0; k < m; ++k) acc += path.first().increment(k) * path.second().increment(k);
  return acc.value();
}

double mixed_product_sum(const FbmPath2D& path) {
  return mixed_product_sum(path, path.grid().horizon());
}

double weighted_hermite_sum_vn(const ScalarField& g, int alpha, int q, const FbmPath2D& path) {
  require_critical(path, "V_n");
  if (alpha < 0 || alpha > 4) fail(ErrorKind::kDomain, "V_n needs 0 <= alpha <= 4");
  if (q < 2 || q > 6) fail(ErrorKind::kDomain, "V_n needs 2 <= q <= 6");
  const std::size_t n = path.n();
  const double nd = static_cast<double>(n);
  const double quarter = std::pow(nd, 0.25);
  CompensatedSum acc;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = g.eval(path.first()[k], path.second()[k]);
    acc += w * ipow(path.first().increment(k), alpha) *
           hermite_eval(q, quarter * path.second().increment(k));
  }
  return std::pow(nd, -0.25 * q) * acc.value();
}

std::pair<double, double> weighted_qv_pair_gn(const ScalarField& g, const ScalarField& gtilde,
                                              const FbmPath2D& pair) {
  require_critical(pair, "G_n");
  const std::size_t n = pair.n();
  const double root = std::sqrt(static_cast<double>(n));
  CompensatedSum first, second;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = pair.first()[k], y = pair.second()[k];
    const double d1 = pair.first().increment(k);
    const double d2 = pair.second().increment(k);
    first += g.eval(x, y) * (root * d1 * d1 - 1.0);
    second += gtilde.eval(x, y) * (root * d2 * d2 - 1.0);
  }
  return {first.value() / root, second.value() / root};
}

double sn_sum(int i, const ScalarField& f, const FbmPath2D& path) {
  if (i < 1 || i > kSnCount) {
    std::ostringstream os;
    os << "S_n index " << i << " outside 1.." << kSnCount;
    fail(ErrorKind::kDomain, os.str());
  }
  require_critical(path, "S_n");
  const SnTerm term = kSnTerms[i - 1];
  CompensatedSum acc;
  for (std::size_t k = 0; k < path.n(); ++k) {
    const double w = f.partial(term.a, term.b, path.first()[k], path.second()[k]);
    acc += w * ipow(path.first().increment(k), term.p1) *
           ipow(path.second().increment(k), term.p2);
  }
  return acc.value();
}

SnLimit sn_limit(int i) {
  switch (i) {
    case 1: return {4, 0, -1.5};
    case 2: return {4, 0, 3.0};
    case 3: return {0, 4, -1.5};
    case 4: return {0, 4, 3.0};
    case 5: return {2, 2, 0.25};
    case 6: return {2, 2, -0.5};
    case 7: return {2, 2, -0.5};
    case 8: return {2, 2, 1.0};
    case 9: return {3, 1, 0.0};
    case 10: return {1, 3, 0.0};
    default: break;
  }
  fail(ErrorKind::kDomain, "S_n index outside 1..10");
}

double cov_residual(const ScalarField& f, const FbmPath2D& path, double t) {
  const std::size_t m = path.grid().steps_to(t);
  return f.eval(path.first()[m], path.second()[m]) - f.eval(0.0, 0.0) -
         symmetric_integral(f, path, t);
}

double cov_residual(const ScalarField& f, const FbmPath2D& path) {
  return cov_residual(f, path, path.grid().horizon());
}

double time_integral(const FbmPath2D& path, const std::function<double(double, double)>& phi,
                     double t) {
  const std::size_t m = path.grid().steps_to(t);
  CompensatedSum acc;
  for (std::size_t k = 0; k <= m; ++k) {
    const double w = (k == 0 || k == m) ? 0.5 : 1.0;
    acc += w * phi(path.first()[k], path.second()[k]);
  }
  return acc.value() * path.grid().step();
}

double path_integral_first(const FbmPath2D& path) {
  return time_integral(path, [](double x, double) { return x; }, path.grid().horizon());
}

}  // namespace fbm
