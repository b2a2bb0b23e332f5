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
#include <vector>

#include "fdtsc/core.hpp"

namespace fdtsc {

/// Series whose population std is at or below this cannot be z-normalized.
inline constexpr double kZnormTolerance = 1e-9;

/// Raised by znormalize on (near-)constant input.
class DegenerateNormalization : public DataError {
public:
    using DataError::DataError;
};

/// Mean 0, population std 1. Throws DegenerateNormalization for flat series
/// and InvalidArgument for series shorter than 2.
std::vector<double> znormalize(std::span<const double> values);
TimeSeries znormalize(const TimeSeries& t);

/// Piecewise aggregate approximation into `segments` frames.
///
/// When n is not a multiple of r each point is split across the frames it
/// straddles, so every frame averages exactly n/r points' worth of mass.
std::vector<double> paa(std::span<const double> values, std::size_t segments);

/// Standard normal quantile. p must lie in (0, 1).
double normal_quantile(double p);

/// a-1 equiprobable N(0,1) breakpoints, ascending.
std::vector<double> gaussian_breakpoints(int alphabet);

/// Symbol in {1..a} for one PAA value: 1 + number of breakpoints <= value.
std::uint8_t sax_symbol(double value, std::span<const double> breakpoints) noexcept;

/// z-normalize, PAA, then symbolize.
SaxWord sax_word(const TimeSeries& t, const SaxParams& p);
SaxWord sax_word(std::span<const double> values, const SaxParams& p);

/// Symbolizes an already-computed PAA vector. Used when the caller has its
/// own normalization policy.
SaxWord sax_word_from_paa(std::span<const double> paa_values, std::size_t source_length, int alphabet);

/// MINDIST cell lookup for one alphabet size; built once and shared read-only.
class DistTable {
public:
    explicit DistTable(int alphabet);

    int alphabet() const noexcept { return alphabet_; }

    /// 1-based symbols.
    double operator()(int i, int j) const noexcept {
        return cells_[static_cast<std::size_t>((i - 1) * alphabet_ + (j - 1))];
    }

    std::span<const double> cells() const noexcept { return cells_; }

private:
    int alphabet_;
    std::vector<double> cells_;
};

DistTable build_dist_table(int alphabet);

/// sqrt(n/r) * sqrt(sum dist(s_i, t_i)^2). Throws DataError on shape mismatch
/// and InvalidArgument if the table alphabet differs from the words'.
double mindist(const SaxWord& s, const SaxWord& t, const DistTable& table);
double mindist(const SaxWord& s, const SaxWord& t);

}  // namespace fdtsc
