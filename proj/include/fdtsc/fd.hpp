/**
 * Copyright 2026 The fdtsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#pragma once

#include <cstddef>
#include <span>

#include "fdtsc/core.hpp"

namespace fdtsc {

// Fast Discretization (FD).
//
// Every point is first mapped to a trit against the dataset-wide thresholds
// mu +/- alpha*sigma (both inclusive). A window of w consecutive points then
// votes: the majority sign wins, an empty vote gives 0, and a tied nonzero
// vote goes to whichever side holds the larger magnitude extreme (largest
// +1 point vs. smallest -1 point). An exact magnitude tie resolves to +1.
// Sliding the window one step at a time yields n - w + 1 trits.

Trit tritize_point(double v, const DatasetStats& stats, double alpha) noexcept;

/// Vote of one window. Throws InvalidArgument on an empty segment.
Trit symbolize_segment(std::span<const double> segment, const DatasetStats& stats, double alpha);

/// Throws InvalidArgument if the window exceeds the series length and
/// DataError if stats.sigma == 0.
FdVector fd_discretize(const TimeSeries& t, const FdParams& params, const DatasetStats& stats);
FdVector fd_discretize(std::span<const double> values, const FdParams& params, const DatasetStats& stats);

/// Positions where both vectors hold the same nonzero trit.
std::size_t fd_similarity(const FdVector& a, const FdVector& b);

/// 1 - similarity / L. Not a metric: self-distance is 1 - nnz / L.
double fdist(const FdVector& a, const FdVector& b);

}  // namespace fdtsc
