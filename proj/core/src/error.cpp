// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "fbm/error.hpp"

namespace fbm {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kCapacity: return "capacity";
    case ErrorKind::kNumeric: return "numeric";
    case ErrorKind::kUnsupportedRegime: return "unsupported-regime";
    case ErrorKind::kEmbeddingFailure: return "embedding-failure";
    case ErrorKind::kLookup: return "lookup";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kInsufficientData: return "insufficient-data";
    case ErrorKind::kUnsupportedLaw: return "unsupported-law";
    case ErrorKind::kUndefinedCorrelation: return "undefined-correlation";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fbm
