// Copyright 2026 The fbm-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "fbm/error.hpp"
#include "fbm/estimators.hpp"
#include "fbm/experiment.hpp"
#include "fbm/field.hpp"
#include "fbm/grid.hpp"
#include "fbm/hermite.hpp"
#include "fbm/hurst.hpp"
#include "fbm/kernels.hpp"
#include "fbm/path.hpp"
#include "fbm/rate_fit.hpp"
#include "fbm/rng.hpp"
#include "fbm/stats.hpp"
#include "fbm/summation.hpp"
#include "fbm/synthesis.hpp"
