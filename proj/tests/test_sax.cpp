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

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "fdtsc/sax.hpp"
#include "oracles.hpp"

namespace fdtsc {
namespace {

using namespace fdtsc::testing;

// Frozen from bisect_normal_quantile.
constexpr double kQ75 = 0.6744897501960817;
constexpr double kQ2of3 = 0.4307272992954576;

TEST(Oracle, BisectionQuantileMatchesFrozenValues) {
    EXPECT_NEAR(bisect_normal_quantile(0.75), kQ75, 1e-12);
    EXPECT_NEAR(bisect_normal_quantile(2.0 / 3.0), kQ2of3, 1e-12);
    EXPECT_NEAR(bisect_normal_quantile(0.5), 0.0, 1e-12);
}

TEST(Znormalize, HandComputed) {
    const auto z = znormalize(std::vector<double>{1, 2, 3});
    const double k = std::sqrt(1.5);  // 1 / sqrt(2/3)
    ASSERT_EQ(z.size(), 3u);
    EXPECT_NEAR(z[0], -k, 1e-12);
    EXPECT_NEAR(z[1], 0.0, 1e-12);
    EXPECT_NEAR(z[2], k, 1e-12);
    EXPECT_NEAR(z[2], 1.2247, 1e-4);
}

TEST(Znormalize, MeanZeroUnitStdAndIdempotent) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 100)(rng);
        auto x = random_series(rng, n, 5.0);
        for (auto& v : x) v += 3.0;
        const auto z = znormalize(x);
        const double mean = std::accumulate(z.begin(), z.end(), 0.0) / static_cast<double>(n);
        double ss = 0.0;
        for (double v : z) ss += (v - mean) * (v - mean);
        ASSERT_NEAR(mean, 0.0, 1e-9);
        ASSERT_NEAR(std::sqrt(ss / static_cast<double>(n)), 1.0, 1e-9);
        const auto zz = znormalize(z);
        for (std::size_t k = 0; k < n; ++k) ASSERT_NEAR(zz[k], z[k], 1e-9);
    }
}

TEST(Znormalize, Errors) {
    EXPECT_THROW(znormalize(std::vector<double>{5, 5, 5}), DegenerateNormalization);
    EXPECT_THROW(znormalize(std::vector<double>{1, 1 + 1e-12}), DegenerateNormalization);
    EXPECT_THROW(znormalize(std::vector<double>{1}), InvalidArgument);
}

TEST(Paa, Examples) {
    EXPECT_EQ(paa(std::vector<double>{1, 1, 2, 2}, 2), (std::vector<double>{1, 2}));
    const auto f = paa(std::vector<double>{1, 2, 3}, 2);
    EXPECT_NEAR(f[0], 4.0 / 3.0, 1e-15);
    EXPECT_NEAR(f[1], 8.0 / 3.0, 1e-15);
    EXPECT_EQ(paa(std::vector<double>{0.1, 0.7, -3.3}, 3), (std::vector<double>{0.1, 0.7, -3.3}));
    EXPECT_THROW(paa(std::vector<double>{1, 2}, 3), InvalidArgument);
    EXPECT_THROW(paa(std::vector<double>{1, 2}, 0), InvalidArgument);
}

TEST(Paa, MatchesSliverOracleAndPreservesMass) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 600; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 80)(rng);
        const auto r = std::uniform_int_distribution<std::size_t>(1, n)(rng);
        const auto x = random_series(rng, n);
        const auto f = paa(x, r);
        const auto oracle = sliver_paa(x, r);
        ASSERT_EQ(f.size(), r);
        for (std::size_t k = 0; k < r; ++k) ASSERT_NEAR(f[k], oracle[k], 1e-9);
        const double mass = std::accumulate(f.begin(), f.end(), 0.0) * static_cast<double>(n) / static_cast<double>(r);
        ASSERT_NEAR(mass, std::accumulate(x.begin(), x.end(), 0.0), 1e-6);
        ASSERT_EQ(paa(x, n), x);
    }
}

TEST(GaussianBreakpoints, SmallAlphabets) {
    EXPECT_EQ(gaussian_breakpoints(2), (std::vector<double>{0.0}));
    const auto b4 = gaussian_breakpoints(4);
    ASSERT_EQ(b4.size(), 3u);
    EXPECT_NEAR(b4[0], -0.6745, 1e-3);
    EXPECT_EQ(b4[1], 0.0);
    EXPECT_NEAR(b4[2], 0.6745, 1e-3);
    const auto b3 = gaussian_breakpoints(3);
    EXPECT_NEAR(b3[0], -0.4307, 1e-3);
    EXPECT_NEAR(b3[1], 0.4307, 1e-3);
}

TEST(GaussianBreakpoints, AgreeWithBisectionOracleForEveryAlphabet) {
    for (int a = 2; a <= 20; ++a) {
        const auto b = gaussian_breakpoints(a);
        ASSERT_EQ(b.size(), static_cast<std::size_t>(a - 1));
        for (int i = 1; i < a; ++i) {
            EXPECT_NEAR(b[static_cast<std::size_t>(i - 1)], bisect_normal_quantile(static_cast<double>(i) / a), 1e-9)
                << "a=" << a << " i=" << i;
        }
        EXPECT_TRUE(std::is_sorted(b.begin(), b.end()));
        EXPECT_EQ(std::adjacent_find(b.begin(), b.end()), b.end());
    }
    EXPECT_THROW(gaussian_breakpoints(1), InvalidArgument);
    EXPECT_THROW(gaussian_breakpoints(21), InvalidArgument);
}

TEST(NormalQuantile, TailsAgreeWithOracle) {
    for (double p : {1e-10, 1e-5, 0.001, 0.02, 0.0243, 0.0244, 0.3, 0.9, 0.976, 0.999, 1 - 1e-7}) {
        EXPECT_NEAR(normal_quantile(p), bisect_normal_quantile(p), 1e-8) << p;
    }
    EXPECT_THROW(normal_quantile(0.0), InvalidArgument);
    EXPECT_THROW(normal_quantile(1.0), InvalidArgument);
}

TEST(SaxWord, SymbolizationExamples) {
    // Normalizes to [-1,-1,1,1]; PAA [-1, 1].
    const auto w = sax_word(TimeSeries({-1, -1, 1, 1}), SaxParams(2, 2));
    EXPECT_EQ(std::vector<std::uint8_t>(w.symbols().begin(), w.symbols().end()), (std::vector<std::uint8_t>{1, 2}));
    EXPECT_EQ(w.source_length(), 4u);

    const auto zeros = sax_word_from_paa(std::vector<double>{0, 0, 0}, 12, 4);
    for (auto s : zeros.symbols()) EXPECT_EQ(s, 3);

    const auto ramp = sax_word_from_paa(std::vector<double>{-1.0, -0.1, 0.1, 1.0}, 16, 4);
    EXPECT_EQ(std::vector<std::uint8_t>(ramp.symbols().begin(), ramp.symbols().end()),
              (std::vector<std::uint8_t>{1, 2, 3, 4}));
}

TEST(SaxWord, ValueOnBreakpointTakesHigherSymbol) {
    const auto b = gaussian_breakpoints(4);
    EXPECT_EQ(sax_symbol(b[0], b), 2);
    EXPECT_EQ(sax_symbol(std::nextafter(b[0], -1.0), b), 1);
    EXPECT_EQ(sax_symbol(b[2], b), 4);
}

TEST(SaxWord, PipelineErrorsPropagate) {
    EXPECT_THROW(sax_word(TimeSeries({2, 2, 2, 2}), SaxParams(2, 4)), DegenerateNormalization);
    EXPECT_THROW(sax_word(TimeSeries({1, 2, 3}), SaxParams(4, 4)), InvalidArgument);
}

TEST(DistTable, Cells) {
    const auto t = build_dist_table(4);
    EXPECT_EQ(t(1, 2), 0.0);
    EXPECT_EQ(t(2, 2), 0.0);
    EXPECT_NEAR(t(1, 4), 2 * kQ75, 1e-12);
    EXPECT_NEAR(t(1, 4), 1.349, 2e-3);
    EXPECT_NEAR(t(2, 4), 0.6745, 1e-3);
    EXPECT_NEAR(t(1, 3), kQ75, 1e-12);
    EXPECT_THROW(build_dist_table(1), InvalidArgument);
}

TEST(DistTable, SymmetricWithZeroBandForEveryAlphabet) {
    for (int a = 2; a <= 20; ++a) {
        const auto t = build_dist_table(a);
        for (int i = 1; i <= a; ++i) {
            for (int j = 1; j <= a; ++j) {
                ASSERT_EQ(t(i, j), t(j, i));
                ASSERT_EQ(t(i, j) == 0.0, std::abs(i - j) <= 1) << a << ' ' << i << ' ' << j;
                ASSERT_GE(t(i, j), 0.0);
            }
        }
    }
}

TEST(Mindist, Examples) {
    const SaxWord ones(std::vector<std::uint8_t>(8, 1), 128, 4);
    const SaxWord fours(std::vector<std::uint8_t>(8, 4), 128, 4);
    EXPECT_EQ(mindist(ones, ones), 0.0);
    EXPECT_NEAR(mindist(ones, fours), 4.0 * 2 * kQ75 * std::sqrt(8.0), 1e-9);
    EXPECT_NEAR(mindist(ones, fours), 15.262, 0.02);

    const SaxWord a({1, 2, 3, 4}, 16, 4);
    const SaxWord b({2, 3, 4, 3}, 16, 4);
    EXPECT_EQ(mindist(a, b), 0.0);
}

TEST(Mindist, ShapeMismatch) {
    const SaxWord a({1, 2}, 16, 4);
    EXPECT_THROW(mindist(a, SaxWord({1, 2, 3}, 16, 4)), DataError);
    EXPECT_THROW(mindist(a, SaxWord({1, 2}, 18, 4)), DataError);
    EXPECT_THROW(mindist(a, SaxWord({1, 2}, 16, 5)), DataError);
    EXPECT_THROW(mindist(a, a, build_dist_table(5)), InvalidArgument);
}

TEST(Mindist, LowerBoundsEuclideanOnNormalizedSeries) {
    std::mt19937_64 rng(3);
    int cases = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 64)(rng);
        const auto r = std::uniform_int_distribution<std::size_t>(1, n)(rng);
        const int a = std::uniform_int_distribution<int>(2, 20)(rng);
        const auto s = random_series(rng, n);
        const auto t = random_series(rng, n);
        const SaxParams p(r, a);
        const auto ws = sax_word(TimeSeries(s), p);
        const auto wt = sax_word(TimeSeries(t), p);
        const double md = mindist(ws, wt);
        ASSERT_LE(md, euclidean(naive_znorm(s), naive_znorm(t)) + 1e-9) << "n=" << n << " r=" << r << " a=" << a;
        ASSERT_EQ(md, mindist(wt, ws));
        ASSERT_EQ(mindist(ws, ws), 0.0);
        ++cases;
    }
    EXPECT_GE(cases, 500);
}

}  // namespace
}  // namespace fdtsc
