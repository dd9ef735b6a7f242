// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return fbm::cli::cli_main(argc, argv, std::cout, std::cerr); }
