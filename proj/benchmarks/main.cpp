// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

// Own main: the packaged benchmark_main archive is LTO bytecode tied to one
// compiler release, so only the shared benchmark library is linked.

#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
