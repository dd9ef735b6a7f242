// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/synthesis.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <sstream>

#include "fbm/error.hpp"
#include "fbm/kernels.hpp"

namespace fbm {
namespace {

// FFTW's planner is not re-entrant; execution on new arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};
using ComplexBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

ComplexBuffer make_buffer(std::size_t m) {
  auto* raw = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * m));
  if (raw == nullptr) fail(ErrorKind::kCapacity, "fftw_malloc failed");
  return ComplexBuffer(raw);
}

}  // namespace

const char* to_string(Algorithm algo) noexcept {
  return algo == Algorithm::kCholesky ? "cholesky" : "circulant";
}

Algorithm parse_algorithm(const std::string& text) {
  if (text == "cholesky") return Algorithm::kCholesky;
  if (text == "circulant") return Algorithm::kCirculant;
  fail(ErrorKind::kDomain, "unknown sampler algorithm '" + text + "'");
}

// ---------------------------------------------------------------------------
// Cholesky

CholeskySampler::CholeskySampler(HurstIndex h, GridSpec grid, std::size_t cap)
    : h_(h), grid_(grid), scale_(std::pow(grid.step(), h.value())) {
  const std::size_t n = grid.n();
  if (n > cap) {
    std::ostringstream os;
    os << "Cholesky sampler capped at n = " << cap << ", requested " << n;
    fail(ErrorKind::kCapacity, os.str());
  }
  std::vector<double> rho(n);
  for (std::size_t j = 0; j < n; ++j) rho[j] = rho_h(h, static_cast<std::int64_t>(j));

  lower_.assign(n * (n + 1) / 2, 0.0);
  const auto row = [](std::size_t i) { return i * (i + 1) / 2; };
  for (std::size_t i = 0; i < n; ++i) {
    double* li = lower_.data() + row(i);
    for (std::size_t j = 0; j <= i; ++j) {
      const double* lj = lower_.data() + row(j);
      double s = rho[i - j];
      for (std::size_t p = 0; p < j; ++p) s -= li[p] * lj[p];
      if (i == j) {
        if (!(s > 0.0)) {
          std::ostringstream os;
          os << "Cholesky factorisation failed: pivot " << i << " is " << s
             << " (H = " << h.value() << ", n = " << n << ")";
          fail(ErrorKind::kNumeric, os.str());
        }
        li[i] = std::sqrt(s);
      } else {
        li[j] = s / lj[j];
      }
    }
  }
}

void CholeskySampler::fill_increments(GaussianStream& rng, std::span<double> out) const {
  const std::size_t n = grid_.n();
  std::vector<double> z(n);
  for (auto& v : z) v = rng.normal();
  for (std::size_t i = 0; i < n; ++i) {
    const double* li = lower_.data() + i * (i + 1) / 2;
    double s = 0.0;
    for (std::size_t p = 0; p <= i; ++p) s += li[p] * z[p];
    out[i] = scale_ * s;
  }
}

FbmPath1D CholeskySampler::sample(const SeedSpec& seed, std::uint64_t substream) const {
  GaussianStream rng(seed.stream_seed(substream));
  std::vector<double> inc(grid_.n());
  fill_increments(rng, inc);
  return FbmPath1D::from_increments(h_, grid_, inc);
}

// ---------------------------------------------------------------------------
// Circulant embedding

struct CirculantSampler::Plan {
  fftw_plan forward = nullptr;
  std::size_t size = 0;

  explicit Plan(std::size_t m) : size(m) {
    auto in = make_buffer(m);
    auto out = make_buffer(m);
    std::lock_guard lock(planner_mutex());
    forward = fftw_plan_dft_1d(static_cast<int>(m), in.get(), out.get(), FFTW_FORWARD,
                               FFTW_ESTIMATE);
    if (forward == nullptr) fail(ErrorKind::kNumeric, "FFTW could not create a plan");
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;

  void execute(fftw_complex* in, fftw_complex* out) const {
    fftw_execute_dft(forward, in, out);
  }
};

CirculantSampler::CirculantSampler(HurstIndex h, GridSpec grid)
    : h_(h), grid_(grid), min_relative_eigenvalue_(0.0), scale_(std::pow(grid.step(), h.value())) {
  const std::size_t n = grid.n();
  if (!std::has_single_bit(n)) {
    std::ostringstream os;
    os << "circulant sampler needs a power-of-two n, got " << n;
    fail(ErrorKind::kDomain, os.str());
  }
  const std::size_t m = 2 * n;
  plan_ = std::make_shared<const Plan>(m);

  auto in = make_buffer(m);
  auto out = make_buffer(m);
  for (std::size_t j = 0; j <= n; ++j) {
    const double r = rho_h(h, static_cast<std::int64_t>(j));
    in[j][0] = r;
    in[j][1] = 0.0;
    if (j > 0 && j < n) {
      in[m - j][0] = r;
      in[m - j][1] = 0.0;
    }
  }
  plan_->execute(in.get(), out.get());

  // Only lambda_0 .. lambda_n are needed; the spectrum is symmetric.
  double max_eig = 0.0, min_eig = out[0][0];
  for (std::size_t j = 0; j <= n; ++j) {
    max_eig = std::max(max_eig, out[j][0]);
    min_eig = std::min(min_eig, out[j][0]);
  }
  min_relative_eigenvalue_ = min_eig / max_eig;
  if (min_eig < -kEigenvalueTolerance * max_eig) {
    std::ostringstream os;
    os << "circulant embedding not nonnegative: min eigenvalue " << min_eig
       << " vs max " << max_eig << " (H = " << h.value() << ", n = " << n << ")";
    fail(ErrorKind::kEmbeddingFailure, os.str());
  }
  amplitude_.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    amplitude_[j] = std::sqrt(std::max(out[j][0], 0.0) / static_cast<double>(m));
  }
}

void CirculantSampler::fill_increments(GaussianStream& rng, std::span<double> out) const {
  const std::size_t n = grid_.n();
  const std::size_t m = 2 * n;
  auto w = make_buffer(m);
  auto x = make_buffer(m);
  const double half = std::sqrt(0.5);
  w[0][0] = amplitude_[0] * rng.normal();
  w[0][1] = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    const double re = amplitude_[j] * half * rng.normal();
    const double im = amplitude_[j] * half * rng.normal();
    w[j][0] = re;
    w[j][1] = im;
    w[m - j][0] = re;
    w[m - j][1] = -im;
  }
  w[n][0] = amplitude_[n] * rng.normal();
  w[n][1] = 0.0;
  plan_->execute(w.get(), x.get());
  for (std::size_t k = 0; k < n; ++k) out[k] = scale_ * x[k][0];
}

FbmPath1D CirculantSampler::sample(const SeedSpec& seed, std::uint64_t substream) const {
  GaussianStream rng(seed.stream_seed(substream));
  std::vector<double> inc(grid_.n());
  fill_increments(rng, inc);
  return FbmPath1D::from_increments(h_, grid_, inc);
}

// ---------------------------------------------------------------------------

namespace {
std::variant<CholeskySampler, CirculantSampler> make_impl(HurstIndex h, GridSpec grid,
                                                          Algorithm algo, std::size_t cap) {
  if (algo == Algorithm::kCholesky) return CholeskySampler(h, grid, cap);
  return CirculantSampler(h, grid);
}
}  // namespace

PathSynthesizer::PathSynthesizer(HurstIndex h, GridSpec grid, Algorithm algo,
                                 std::size_t cholesky_cap)
    : impl_(make_impl(h, grid, algo, cholesky_cap)) {}

Algorithm PathSynthesizer::algorithm() const noexcept {
  return std::holds_alternative<CholeskySampler>(impl_) ? Algorithm::kCholesky
                                                        : Algorithm::kCirculant;
}

HurstIndex PathSynthesizer::hurst() const noexcept {
  return std::visit([](const auto& s) { return s.hurst(); }, impl_);
}

const GridSpec& PathSynthesizer::grid() const noexcept {
  return std::visit([](const auto& s) -> const GridSpec& { return s.grid(); }, impl_);
}

FbmPath1D PathSynthesizer::sample(const SeedSpec& seed, std::uint64_t substream) const {
  return std::visit([&](const auto& s) { return s.sample(seed, substream); }, impl_);
}

FbmPath2D PathSynthesizer::sample_2d(const SeedSpec& seed) const {
  return FbmPath2D(sample(seed, kSubstreamFirst), sample(seed, kSubstreamSecond));
}

Algorithm default_algorithm(std::size_t n) noexcept {
  return std::has_single_bit(n) ? Algorithm::kCirculant : Algorithm::kCholesky;
}

FbmPath1D sample_fgn_cholesky(HurstIndex h, GridSpec grid, const SeedSpec& seed,
                              std::size_t cap) {
  return CholeskySampler(h, grid, cap).sample(seed);
}

FbmPath1D sample_fgn_circulant(HurstIndex h, GridSpec grid, const SeedSpec& seed) {
  return CirculantSampler(h, grid).sample(seed);
}

FbmPath2D sample_path_2d(HurstIndex h, GridSpec grid, const SeedSpec& seed, Algorithm algo) {
  return PathSynthesizer(h, grid, algo).sample_2d(seed);
}

FbmPath2D sample_path_2d(HurstIndex h, GridSpec grid, const SeedSpec& seed) {
  return sample_path_2d(h, grid, seed, default_algorithm(grid.n()));
}

}  // namespace fbm
