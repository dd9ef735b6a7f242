// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/path.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "fbm/error.hpp"

namespace fbm {

FbmPath1D::FbmPath1D(HurstIndex hurst, GridSpec grid, std::vector<double> values)
    : hurst_(hurst), grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.n() + 1) {
    std::ostringstream os;
    os << "path has " << values_.size() << " values, grid needs " << grid_.n() + 1;
    fail(ErrorKind::kDomain, os.str());
  }
  if (values_[0] != 0.0) fail(ErrorKind::kDomain, "fBm path must start at 0");
}

FbmPath1D FbmPath1D::from_increments(HurstIndex hurst, GridSpec grid,
                                     std::span<const double> increments) {
  if (increments.size() != grid.n()) {
    fail(ErrorKind::kDomain, "increment count does not match grid");
  }
  std::vector<double> values(grid.n() + 1);
  double acc = 0.0;
  for (std::size_t k = 0; k < increments.size(); ++k) {
    acc += increments[k];
    values[k + 1] = acc;
  }
  return FbmPath1D(hurst, grid, std::move(values));
}

std::vector<double> FbmPath1D::increments() const {
  std::vector<double> out(grid_.n());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = increment(k);
  return out;
}

FbmPath2D::FbmPath2D(FbmPath1D first, FbmPath1D second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (!(first_.grid() == second_.grid())) {
    fail(ErrorKind::kDomain, "path components live on different grids");
  }
  if (first_.hurst() != second_.hurst()) {
    fail(ErrorKind::kDomain, "path components have different Hurst indices");
  }
}

FbmPath2D rotate_pair(const FbmPath2D& path) {
  const double c = 1.0 / std::sqrt(2.0);
  const auto a = path.first().values();
  const auto b = path.second().values();
  std::vector<double> plus(a.size()), minus(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    plus[k] = (a[k] + b[k]) * c;
    minus[k] = (a[k] - b[k]) * c;
  }
  return FbmPath2D(FbmPath1D(path.hurst(), path.grid(), std::move(plus)),
                   FbmPath1D(path.hurst(), path.grid(), std::move(minus)));
}

void write_path_csv(std::ostream& out, const FbmPath2D& path) {
  out << "t,b1,b2\n";
  char line[96];
  for (std::size_t k = 0; k <= path.n(); ++k) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", path.grid().time(k),
                  path.first()[k], path.second()[k]);
    out << line;
  }
}

FbmPath2D read_path_csv(std::istream& in, HurstIndex hurst) {
  std::string line;
  if (!std::getline(in, line) || line != "t,b1,b2") {
    fail(ErrorKind::kDomain, "path CSV must start with header t,b1,b2");
  }
  std::vector<double> t, b1, b2;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double x = 0, y = 0, z = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3) {
      fail(ErrorKind::kDomain, "malformed path CSV row: " + line);
    }
    t.push_back(x);
    b1.push_back(y);
    b2.push_back(z);
  }
  if (t.size() < 3) fail(ErrorKind::kDomain, "path CSV needs at least 3 rows");
  const GridSpec grid(t.size() - 1, t.back());
  return FbmPath2D(FbmPath1D(hurst, grid, std::move(b1)), FbmPath1D(hurst, grid, std::move(b2)));
}

}  // namespace fbm
