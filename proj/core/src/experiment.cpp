// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "fbm/error.hpp"
#include "fbm/estimators.hpp"
#include "fbm/field.hpp"
#include "fbm/summation.hpp"

namespace fbm {
namespace {

std::string param(const ParamMap& p, const std::string& key, const std::string& fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

long param_int(const ParamMap& p, const std::string& key, long fallback) {
  const auto it = p.find(key);
  if (it == p.end()) return fallback;
  char* end = nullptr;
  const long v = std::strtol(it->second.c_str(), &end, 10);
  if (end == it->second.c_str() || *end != '\0') {
    fail(ErrorKind::kDomain, "parameter " + key + " must be an integer, got '" + it->second + "'");
  }
  return v;
}

double scaled_mixed(const FbmPath2D& path, double t) {
  const double n = static_cast<double>(path.n());
  return std::pow(n, path.hurst().two_h() - 0.5) * mixed_product_sum(path, t);
}

}  // namespace

const std::vector<std::string>& estimator_names() {
  static const std::vector<std::string> names{"qv",  "bm2",    "mixed",    "mixed_scaled",
                                              "gn",  "vn",     "sn",       "sn3bis",
                                              "residual", "integral", "time_integral"};
  return names;
}

PathEstimator make_estimator(const std::string& name, const ParamMap& params, double t) {
  if (name == "qv") {
    return [t](const FbmPath2D& p) { return quadratic_variation(p.first(), t); };
  }
  if (name == "bm2") {
    return [](const FbmPath2D& p) { return quadratic_variation_fluctuation(p.first()); };
  }
  if (name == "mixed") {
    return [t](const FbmPath2D& p) { return mixed_product_sum(p, t); };
  }
  if (name == "mixed_scaled") {
    return [t](const FbmPath2D& p) { return scaled_mixed(p, t); };
  }
  if (name == "gn") {
    const auto g = catalog_get(param(params, "g", "unit"));
    const auto gt = catalog_get(param(params, "gtilde", "unit"));
    const long coord = param_int(params, "coord", 1);
    if (coord != 1 && coord != 2) fail(ErrorKind::kDomain, "gn coord must be 1 or 2");
    return [g, gt, coord](const FbmPath2D& p) {
      const auto [a, b] = weighted_qv_pair_gn(g, gt, p);
      return coord == 1 ? a : b;
    };
  }
  if (name == "vn") {
    const auto g = catalog_get(param(params, "g", "unit"));
    const int alpha = static_cast<int>(param_int(params, "alpha", 0));
    const int q = static_cast<int>(param_int(params, "q", 2));
    if (alpha < 0 || alpha > 4 || q < 2 || q > 6) {
      fail(ErrorKind::kDomain, "vn needs 0 <= alpha <= 4 and 2 <= q <= 6");
    }
    return [g, alpha, q](const FbmPath2D& p) { return weighted_hermite_sum_vn(g, alpha, q, p); };
  }
  if (name == "sn") {
    const auto f = catalog_get(param(params, "f", "product"));
    const int i = static_cast<int>(param_int(params, "i", 5));
    if (i < 1 || i > kSnCount) fail(ErrorKind::kDomain, "sn index must be in 1..10");
    return [f, i](const FbmPath2D& p) { return sn_sum(i, f, p); };
  }
  if (name == "sn3bis") {
    const auto f = catalog_get(param(params, "f", "product"));
    return [f](const FbmPath2D& p) {
      CompensatedSum s;
      for (std::size_t k = 0; k < p.n(); ++k) {
        s += f.partial(0, 3, p.first()[k], p.second()[k]) * p.second().increment(k);
      }
      return s.value() / std::sqrt(static_cast<double>(p.n()));
    };
  }
  if (name == "residual") {
    const auto f = catalog_get(param(params, "f", "product"));
    return [f, t](const FbmPath2D& p) { return cov_residual(f, p, t); };
  }
  if (name == "integral") {
    const auto f = catalog_get(param(params, "f", "product"));
    return [f, t](const FbmPath2D& p) { return symmetric_integral(f, p, t); };
  }
  if (name == "time_integral") {
    const auto f = catalog_get(param(params, "f", "product"));
    const int a = static_cast<int>(param_int(params, "a", 0));
    const int b = static_cast<int>(param_int(params, "b", 0));
    const int power = static_cast<int>(param_int(params, "power", 1));
    if (a < 0 || b < 0 || a + b > f.max_order() || power < 1) {
      fail(ErrorKind::kDomain, "time_integral needs a, b >= 0, a + b <= 4 and power >= 1");
    }
    return [f, a, b, power, t](const FbmPath2D& p) {
      return time_integral(
          p, [&](double x, double y) { return std::pow(f.partial(a, b, x, y), power); }, t);
    };
  }
  fail(ErrorKind::kLookup, "unknown estimator '" + name + "'");
}

void ExperimentSpec::validate() const {
  (void)HurstIndex(hurst);
  if (n_list.empty()) fail(ErrorKind::kDomain, "n_list is empty");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) fail(ErrorKind::kDomain, "n_list must be strictly increasing");
  }
  for (const auto n : n_list) GridSpec{n}.steps_to(t);
  if (replications < 1) fail(ErrorKind::kDomain, "replications must be >= 1");
  make_estimator(estimator, params, t);
}

SeedSpec ExperimentSpec::seed_for(std::size_t n, std::size_t replication) const {
  SeedSpec base{master_seed, 0};
  SeedSpec s = base.child(n);
  s.replication_index = replication;
  return s;
}

std::vector<double> ExperimentSamples::values(std::size_t n_index) const {
  std::vector<double> out;
  out.reserve(records.at(n_index).size());
  for (const auto& r : records[n_index]) out.push_back(r.value);
  return out;
}

std::vector<NamedSeries> ExperimentSamples::functionals(std::size_t n_index) const {
  std::vector<NamedSeries> out{{"B1_1", {}}, {"B2_1", {}}, {"int_B1", {}}};
  for (const auto& r : records.at(n_index)) {
    out[0].values.push_back(r.b1_end);
    out[1].values.push_back(r.b2_end);
    out[2].values.push_back(r.b1_integral);
  }
  return out;
}

std::size_t resolve_workers() {
  if (const char* env = std::getenv("FBM_LAB_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < count && !stop; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

ExperimentSamples run_replications(const ExperimentSpec& spec, std::size_t workers) {
  spec.validate();
  const HurstIndex h(spec.hurst);
  const auto estimator = make_estimator(spec.estimator, spec.params, spec.t);
  ExperimentSamples out;
  out.n_list = spec.n_list;
  for (const auto n : spec.n_list) {
    const GridSpec grid(n);
    const Algorithm algo = spec.algorithm.value_or(default_algorithm(n));
    std::optional<PathSynthesizer> synth;
    try {
      synth.emplace(h, grid, algo);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "sampler setup failed for n = " << n << " (" << to_string(algo) << "): " << e.what();
      throw Error(e.kind(), os.str());
    }
    std::vector<ReplicationRecord> records(spec.replications);
    parallel_for(spec.replications, workers, [&](std::size_t r) {
      const FbmPath2D path = synth->sample_2d(spec.seed_for(n, r));
      records[r] = ReplicationRecord{estimator(path), path.first()[n], path.second()[n],
                                     path_integral_first(path)};
    });
    out.records.push_back(std::move(records));
  }
  return out;
}

ExperimentSamples run_replications(const ExperimentSpec& spec) {
  return run_replications(spec, resolve_workers());
}

RateStatistic parse_rate_statistic(const std::string& text) {
  if (text == "none") return RateStatistic::kNone;
  if (text == "ms") return RateStatistic::kMeanSquare;
  if (text == "std") return RateStatistic::kStd;
  if (text == "var") return RateStatistic::kVariance;
  fail(ErrorKind::kDomain, "unknown rate statistic '" + text + "' (none|ms|std|var)");
}

const char* to_string(RateStatistic s) noexcept {
  switch (s) {
    case RateStatistic::kNone: return "none";
    case RateStatistic::kMeanSquare: return "ms";
    case RateStatistic::kStd: return "std";
    case RateStatistic::kVariance: return "var";
  }
  return "unknown";
}

double ExperimentSummary::rate_value(std::size_t i, RateStatistic s) const {
  const auto& m = per_n.at(i).moments;
  switch (s) {
    case RateStatistic::kMeanSquare: return m.second_moment;
    case RateStatistic::kStd: return m.stddev();
    case RateStatistic::kVariance: return m.variance;
    case RateStatistic::kNone: break;
  }
  return 0.0;
}

ExperimentSummary summarize(const ExperimentSamples& samples, const LimitLawDescriptor& law,
                            RateStatistic rate, bool check_independence) {
  ExperimentSummary s;
  for (std::size_t i = 0; i < samples.n_list.size(); ++i) {
    const auto values = samples.values(i);
    PerNSummary p;
    p.n = samples.n_list[i];
    p.moments = moments(values);
    if (law.kind == LimitLawDescriptor::Kind::kCenteredNormal && values.size() >= 100) {
      p.ks = ks_test(values, law);
    }
    s.per_n.push_back(p);
    if (rate != RateStatistic::kNone) {
      const double v = s.rate_value(i, rate);
      if (v > 0.0) s.per_n.back().slope_contrib = std::log(v);
    }
  }
  if (rate != RateStatistic::kNone && samples.n_list.size() >= 4) {
    std::vector<double> ns, vs;
    for (std::size_t i = 0; i < s.per_n.size(); ++i) {
      ns.push_back(static_cast<double>(s.per_n[i].n));
      vs.push_back(s.rate_value(i, rate));
    }
    s.rate_fit = rate_regression(ns, vs);
  }
  if (check_independence && !samples.n_list.empty()) {
    const std::size_t last = samples.n_list.size() - 1;
    const auto values = samples.values(last);
    const auto funcs = samples.functionals(last);
    s.independence = independence_check(values, funcs);
  }
  return s;
}

}  // namespace fbm
