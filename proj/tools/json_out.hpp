// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "json.hpp"

namespace fbm::cli {

using Json = nlohmann::ordered_json;

/// Serialises like Json::dump(2) but renders every floating-point number with
/// 17 significant digits; non-finite values become null.
std::string dump17(const Json& j);

}  // namespace fbm::cli
