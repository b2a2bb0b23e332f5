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

#include "fdtsc/sax.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace fdtsc {

std::vector<double> znormalize(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) {
        throw InvalidArgument("z-normalization needs at least 2 points");
    }
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    const double sd = std::sqrt(ss / static_cast<double>(n));
    if (!(sd > kZnormTolerance)) {
        throw DegenerateNormalization("degenerate normalization: series std " + std::to_string(sd) +
                                      " <= " + std::to_string(kZnormTolerance));
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (values[i] - mean) / sd;
    }
    return out;
}

TimeSeries znormalize(const TimeSeries& t) {
    return TimeSeries(znormalize(t.values()), t.label());
}

std::vector<double> paa(std::span<const double> values, std::size_t segments) {
    const std::size_t n = values.size();
    const std::size_t r = segments;
    if (r < 1 || r > n) {
        throw InvalidArgument("PAA segments " + std::to_string(r) + " outside [1, " + std::to_string(n) + "]");
    }
    if (r == n) {
        return {values.begin(), values.end()};
    }
    std::vector<double> out(r, 0.0);
    if (n % r == 0) {
        const std::size_t frame = n / r;
        for (std::size_t k = 0; k < r; ++k) {
            double s = 0.0;
            for (std::size_t i = k * frame; i < (k + 1) * frame; ++i) {
                s += values[i];
            }
            out[k] = s / static_cast<double>(frame);
        }
        return out;
    }
    // Scale positions by r: point i spans [i*r, (i+1)*r), frame k spans
    // [k*n, (k+1)*n). Overlaps are integers, so the weights are exact.
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t lo = k * n;
        const std::size_t hi = lo + n;
        double s = 0.0;
        for (std::size_t i = lo / r; i < n && i * r < hi; ++i) {
            const std::size_t a = std::max(lo, i * r);
            const std::size_t b = std::min(hi, (i + 1) * r);
            if (b > a) {
                s += static_cast<double>(b - a) * values[i];
            }
        }
        out[k] = s / static_cast<double>(n);
    }
    return out;
}

namespace {

// Acklam's rational approximation, refined below with one Halley step.
constexpr std::array<double, 6> kCentralNum = {-3.969683028665376e+01, 2.209460984245205e+02,
                                               -2.759285104469687e+02, 1.383577518672690e+02,
                                               -3.066479806614716e+01, 2.506628277459239e+00};
constexpr std::array<double, 5> kCentralDen = {-5.447609879822406e+01, 1.615858368580409e+02,
                                               -1.556989798598866e+02, 6.680131188771972e+01,
                                               -1.328068155288572e+01};
constexpr std::array<double, 6> kTailNum = {-7.784894002430293e-03, -3.223964580411365e-01,
                                            -2.400758277161838e+00, -2.549732539343734e+00,
                                            4.374664141464968e+00, 2.938163982698783e+00};
constexpr std::array<double, 4> kTailDen = {7.784695709041462e-03, 3.224671290700398e-01,
                                            2.445134137142996e+00, 3.754408661907416e+00};
constexpr double kTailBoundary = 0.02425;

double lower_tail(double p) {
    const double q = std::sqrt(-2.0 * std::log(p));
    const auto& c = kTailNum;
    const auto& d = kTailDen;
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw InvalidArgument("normal quantile needs p in (0, 1)");
    }
    double x;
    if (p < kTailBoundary) {
        x = lower_tail(p);
    } else if (p > 1.0 - kTailBoundary) {
        x = -lower_tail(1.0 - p);
    } else {
        const double q = p - 0.5;
        const double r = q * q;
        const auto& a = kCentralNum;
        const auto& b = kCentralDen;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

std::vector<double> gaussian_breakpoints(int alphabet) {
    if (alphabet < kMinAlphabet || alphabet > kMaxAlphabet) {
        throw InvalidArgument("alphabet must be in [2, 20], got " + std::to_string(alphabet));
    }
    const auto a = static_cast<std::size_t>(alphabet);
    std::vector<double> beta(a - 1, 0.0);
    // Fill the lower half and mirror it so the table is exactly symmetric
    // and the median breakpoint (even a) is exactly 0.
    for (std::size_t i = 1; 2 * i < a; ++i) {
        const double q = normal_quantile(static_cast<double>(i) / static_cast<double>(a));
        beta[i - 1] = q;
        beta[a - 1 - i] = -q;
    }
    return beta;
}

std::uint8_t sax_symbol(double value, std::span<const double> breakpoints) noexcept {
    auto above = std::upper_bound(breakpoints.begin(), breakpoints.end(), value);
    return static_cast<std::uint8_t>(1 + (above - breakpoints.begin()));
}

SaxWord sax_word_from_paa(std::span<const double> paa_values, std::size_t source_length, int alphabet) {
    const auto beta = gaussian_breakpoints(alphabet);
    std::vector<std::uint8_t> symbols(paa_values.size());
    for (std::size_t k = 0; k < paa_values.size(); ++k) {
        symbols[k] = sax_symbol(paa_values[k], beta);
    }
    return SaxWord(std::move(symbols), source_length, alphabet);
}

SaxWord sax_word(std::span<const double> values, const SaxParams& p) {
    p.check_against(values.size());
    const auto z = znormalize(values);
    const auto frames = paa(z, p.segments);
    return sax_word_from_paa(frames, values.size(), p.alphabet);
}

SaxWord sax_word(const TimeSeries& t, const SaxParams& p) {
    return sax_word(t.values(), p);
}

DistTable::DistTable(int alphabet) : alphabet_(alphabet) {
    const auto beta = gaussian_breakpoints(alphabet);
    const auto a = static_cast<std::size_t>(alphabet);
    cells_.assign(a * a, 0.0);
    for (std::size_t i = 1; i <= a; ++i) {
        for (std::size_t j = 1; j <= a; ++j) {
            const std::size_t hi = std::max(i, j);
            const std::size_t lo = std::min(i, j);
            if (hi - lo > 1) {
                // 1-based beta_{hi-1} - beta_{lo}
                cells_[(i - 1) * a + (j - 1)] = beta[hi - 2] - beta[lo - 1];
            }
        }
    }
}

DistTable build_dist_table(int alphabet) {
    return DistTable(alphabet);
}

double mindist(const SaxWord& s, const SaxWord& t, const DistTable& table) {
    if (s.size() != t.size() || s.alphabet() != t.alphabet() || s.source_length() != t.source_length()) {
        throw DataError("SAX words differ in shape");
    }
    if (table.alphabet() != s.alphabet()) {
        throw InvalidArgument("distance table alphabet does not match SAX words");
    }
    const auto ss = s.symbols();
    const auto ts = t.symbols();
    double acc = 0.0;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const double d = table(ss[i], ts[i]);
        acc += d * d;
    }
    return std::sqrt(static_cast<double>(s.source_length()) / static_cast<double>(s.size())) * std::sqrt(acc);
}

double mindist(const SaxWord& s, const SaxWord& t) {
    return mindist(s, t, DistTable(s.alphabet()));
}

}  // namespace fdtsc
