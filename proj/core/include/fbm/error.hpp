// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace fbm {

enum class ErrorKind {
  kDomain,
  kCapacity,
  kNumeric,
  kUnsupportedRegime,
  kEmbeddingFailure,
  kLookup,
  kValidation,
  kInsufficientData,
  kUnsupportedLaw,
  kUndefinedCorrelation,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; the kind tells callers (and the CLI)
// which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace fbm
