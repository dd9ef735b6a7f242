// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

namespace fbm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitAssertion = 3;
inline constexpr int kExitUsage = 64;

/// Entry point of the fbm-lab tool. JSON summaries go to `out`, diagnostics
/// to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fbm::cli
