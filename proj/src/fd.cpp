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

#include "fdtsc/fd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace fdtsc {

namespace {

struct Thresholds {
    double hi;
    double lo;
};

Thresholds thresholds(const DatasetStats& stats, double alpha) noexcept {
    return {stats.mu + alpha * stats.sigma, stats.mu - alpha * stats.sigma};
}

Trit tritize(double v, const Thresholds& th) noexcept {
    if (v >= th.hi) {
        return Trit::Pos;
    }
    if (v <= th.lo) {
        return Trit::Neg;
    }
    return Trit::Zero;
}

// Vote over already-tritized points. `values` is only consulted on a tie.
Trit vote(std::span<const double> values, std::span<const Trit> point_trits) noexcept {
    int pos = 0;
    int neg = 0;
    for (Trit t : point_trits) {
        pos += t == Trit::Pos;
        neg += t == Trit::Neg;
    }
    if (pos > neg) {
        return Trit::Pos;
    }
    if (pos < neg) {
        return Trit::Neg;
    }
    if (pos == 0) {
        return Trit::Zero;
    }
    double largest_pos = -INFINITY;
    double smallest_neg = INFINITY;
    for (std::size_t i = 0; i < point_trits.size(); ++i) {
        if (point_trits[i] == Trit::Pos && values[i] > largest_pos) {
            largest_pos = values[i];
        } else if (point_trits[i] == Trit::Neg && values[i] < smallest_neg) {
            smallest_neg = values[i];
        }
    }
    // Exact magnitude tie goes to +1.
    return std::abs(largest_pos) >= std::abs(smallest_neg) ? Trit::Pos : Trit::Neg;
}

}  // namespace

Trit tritize_point(double v, const DatasetStats& stats, double alpha) noexcept {
    return tritize(v, thresholds(stats, alpha));
}

Trit symbolize_segment(std::span<const double> segment, const DatasetStats& stats, double alpha) {
    if (segment.empty()) {
        throw InvalidArgument("segment must not be empty");
    }
    const auto th = thresholds(stats, alpha);
    std::vector<Trit> point_trits(segment.size());
    for (std::size_t i = 0; i < segment.size(); ++i) {
        point_trits[i] = tritize(segment[i], th);
    }
    return vote(segment, point_trits);
}

FdVector fd_discretize(std::span<const double> values, const FdParams& params, const DatasetStats& stats) {
    const std::size_t n = values.size();
    const std::size_t w = params.window;
    if (w < 1 || w > n) {
        throw InvalidArgument("window " + std::to_string(w) + " does not fit series of length " +
                              std::to_string(n));
    }
    if (!(stats.sigma > 0.0)) {
        throw DataError("degenerate dataset stats: sigma must be > 0");
    }

    const auto th = thresholds(stats, params.alpha);
    std::vector<Trit> point_trits(n);
    for (std::size_t i = 0; i < n; ++i) {
        point_trits[i] = tritize(values[i], th);
    }

    // Running counts; the extreme values are only rescanned on ties.
    const std::size_t out_len = n - w + 1;
    std::vector<Trit> out(out_len);
    int pos = 0;
    int neg = 0;
    for (std::size_t i = 0; i < w; ++i) {
        pos += point_trits[i] == Trit::Pos;
        neg += point_trits[i] == Trit::Neg;
    }
    for (std::size_t j = 0;; ++j) {
        if (pos > neg) {
            out[j] = Trit::Pos;
        } else if (pos < neg) {
            out[j] = Trit::Neg;
        } else if (pos == 0) {
            out[j] = Trit::Zero;
        } else {
            out[j] = vote(values.subspan(j, w), std::span<const Trit>(point_trits).subspan(j, w));
        }
        if (j + 1 == out_len) {
            break;
        }
        pos += (point_trits[j + w] == Trit::Pos) - (point_trits[j] == Trit::Pos);
        neg += (point_trits[j + w] == Trit::Neg) - (point_trits[j] == Trit::Neg);
    }
    return FdVector(std::move(out), n);
}

FdVector fd_discretize(const TimeSeries& t, const FdParams& params, const DatasetStats& stats) {
    return fd_discretize(t.values(), params, stats);
}

std::size_t fd_similarity(const FdVector& a, const FdVector& b) {
    if (a.size() != b.size()) {
        throw DataError("FD vectors differ in length: " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()));
    }
    const auto* pa = reinterpret_cast<const std::int8_t*>(a.trits().data());
    const auto* pb = reinterpret_cast<const std::int8_t*>(b.trits().data());
    // Narrow per-block counters keep the loop vectorizable.
    std::size_t sim = 0;
    const std::size_t n = a.size();
    for (std::size_t lo = 0; lo < n; lo += 255) {
        const std::size_t hi = std::min(n, lo + 255);
        std::uint8_t block = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            block += static_cast<std::uint8_t>((pa[i] == pb[i]) & (pa[i] != 0));
        }
        sim += block;
    }
    return sim;
}

double fdist(const FdVector& a, const FdVector& b) {
    const auto sim = fd_similarity(a, b);
    return 1.0 - static_cast<double>(sim) / static_cast<double>(a.size());
}

}  // namespace fdtsc
