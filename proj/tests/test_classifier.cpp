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

#include <random>

#include <gtest/gtest.h>

#include "fdtsc/classifier.hpp"
#include "fdtsc/dataset_io.hpp"
#include "oracles.hpp"

namespace fdtsc {
namespace {

using namespace fdtsc::testing;

FdVector fdv(const std::vector<int>& v) {
    std::vector<Trit> t;
    for (int x : v) t.push_back(trit_from_int(x));
    return FdVector(std::move(t), v.size());
}

FdStore store_of(std::vector<std::vector<int>> reps, std::vector<Label> labels) {
    std::vector<FdVector> r;
    for (const auto& v : reps) r.push_back(fdv(v));
    return FdStore(std::move(r), std::move(labels), FdParams(1, 0.01), DatasetStats(0.0, 1.0));
}

TEST(Classify1nn, SingletonStoreAlwaysAnswersItsLabel) {
    const auto store = store_of({{1, 0, -1}}, {7});
    for (const auto& q : {std::vector<int>{1, 0, -1}, {0, 0, 0}, {-1, 1, 1}}) {
        const auto p = classify_1nn(store, fdv(q));
        EXPECT_EQ(p.label, 7u);
        EXPECT_EQ(p.index, 0u);
    }
}

TEST(Classify1nn, TwoOppositeReferences) {
    const auto store = store_of({{1, 1, 1, 1}, {-1, -1, -1, -1}}, {0, 1});
    EXPECT_EQ(classify_1nn(store, fdv({1, 1, 1, -1})).label, 0u);
    EXPECT_EQ(classify_1nn(store, fdv({-1, 1, -1, -1})).label, 1u);
    // Equal similarity to both: the lower index wins.
    const auto tie = classify_1nn(store, fdv({1, 1, -1, -1}));
    EXPECT_EQ(tie.index, 0u);
    EXPECT_EQ(tie.distance, 0.5);
}

TEST(Classify1nn, MatchesExhaustiveOracle) {
    std::mt19937_64 rng(21);
    for (int c = 0; c < 500; ++c) {
        const std::size_t L = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        std::vector<std::vector<int>> reps;
        std::vector<Label> labels;
        for (Label k = 0; k < 5; ++k) {
            reps.push_back(random_trits(rng, L));
            labels.push_back(k);
        }
        const auto q = random_trits(rng, L);
        std::vector<double> d;
        for (const auto& r : reps) d.push_back(1.0 - static_cast<double>(naive_similarity(r, q)) / L);
        const auto expect = naive_argmin(d);
        const auto got = classify_1nn(store_of(reps, labels), fdv(q));
        ASSERT_EQ(got.index, expect);
        ASSERT_EQ(got.label, labels[expect]);
        ASSERT_NEAR(got.distance, d[expect], 1e-12);
    }
}

TEST(Classify1nn, QueryShapeMismatch) {
    const auto store = store_of({{1, 1, 1}}, {0});
    EXPECT_THROW(classify_1nn(store, fdv({1, 1})), DataError);
    EXPECT_THROW(store_of({{1, 1}, {1, 1, 1}}, {0, 1}), DataError);
}

// Pooled train stats: mu = 0, sigma = 2. With w = 1 each point is its own window.
LabeledDataset hand_train() {
    return LabeledDataset("hand", {TimeSeries({2, 2, 2, 2}, 0), TimeSeries({-2, -2, -2, -2}, 1)});
}

LabeledDataset hand_test() {
    return LabeledDataset("hand", {
                                      TimeSeries({1, 1, 1, -1}, 0),     // 3 vs 1 matches: class 0, right
                                      TimeSeries({-1, -1, 1, -1}, 0),   // 1 vs 3: class 1, wrong
                                      TimeSeries({0, 0, 0, 0}, 1),      // no matches, tie to index 0, wrong
                                      TimeSeries({-3, -1, -1, -1}, 1),  // class 1, right
                                  });
}

TEST(Evaluate, HandWorkedFdExample) {
    const auto r = evaluate(hand_train(), hand_test(), FdParams(1, 0.01));
    ASSERT_TRUE(r.stats);
    EXPECT_EQ(r.stats->mu, 0.0);
    EXPECT_EQ(r.stats->sigma, 2.0);
    EXPECT_EQ(r.predictions, (std::vector<Label>{0, 1, 0, 1}));
    EXPECT_EQ(r.misclassified, 2u);
    EXPECT_EQ(r.error, 0.5);
    EXPECT_EQ(r.confusion, (std::vector<std::vector<std::size_t>>{{1, 1}, {1, 1}}));
    EXPECT_EQ(r.method, "FD");
    EXPECT_EQ(r.params, "w=1;alpha=0.01");
}

TEST(Evaluate, TestEqualToTrainGivesZeroError) {
    std::mt19937_64 rng(22);
    std::vector<TimeSeries> s;
    for (Label k = 0; k < 10; ++k) s.emplace_back(random_series(rng, 30), k);
    const LabeledDataset d("self", s);
    EXPECT_EQ(evaluate(d, d, SaxParams(30, 20)).error, 0.0);
}

LabeledDataset random_dataset(std::mt19937_64& rng, const std::string& name, std::size_t count, std::size_t n,
                              Label classes) {
    std::vector<TimeSeries> s;
    for (std::size_t i = 0; i < count; ++i) {
        const Label c = std::uniform_int_distribution<Label>(0, classes - 1)(rng);
        auto v = random_series(rng, n);
        for (std::size_t k = 0; k < n; ++k) v[k] += std::sin(static_cast<double>(k * (c + 1)) / 3.0);
        s.emplace_back(std::move(v), c);
    }
    return LabeledDataset(name, std::move(s));
}

TEST(Evaluate, DeterministicAndIndependentOfWorkers) {
    std::mt19937_64 rng(23);
    const auto train = random_dataset(rng, "r", 40, 32, 3);
    const auto test = random_dataset(rng, "r", 57, 32, 3);
    for (const Method& m : {Method(FdParams(4, 0.01)), Method(SaxParams(4, 6))}) {
        const auto serial = evaluate(train, test, m);
        EXPECT_EQ(evaluate(train, test, m).predictions, serial.predictions);
        EvalOptions par;
        par.workers = 4;
        const auto parallel = evaluate(train, test, m, par);
        EXPECT_EQ(parallel.predictions, serial.predictions);
        EXPECT_EQ(parallel.confusion, serial.confusion);
        EXPECT_EQ(parallel.workers, 4u);
    }
}

TEST(Evaluate, ErrorBoundsAndConfusionSums) {
    std::mt19937_64 rng(24);
    for (int c = 0; c < 20; ++c) {
        const auto train = random_dataset(rng, "b", 15, 20, 4);
        const auto test = random_dataset(rng, "b", 25, 20, 4);
        for (const Method& m : {Method(FdParams(3, 0.1)), Method(SaxParams(5, 4))}) {
            const auto r = evaluate(train, test, m);
            ASSERT_GE(r.error, 0.0);
            ASSERT_LE(r.error, 1.0);
            std::size_t total = 0;
            std::size_t diag = 0;
            for (std::size_t i = 0; i < r.confusion.size(); ++i) {
                for (std::size_t j = 0; j < r.confusion[i].size(); ++j) total += r.confusion[i][j];
                diag += r.confusion[i][i];
            }
            ASSERT_EQ(total, test.size());
            ASSERT_EQ(test.size() - diag, r.misclassified);
        }
    }
}

TEST(Evaluate, InvariantUnderAffineRescalingOfBothSplits) {
    // Both representations are scale free: FD through the pooled stats, SAX
    // through per-series normalization.
    std::mt19937_64 rng(25);
    const auto train = random_dataset(rng, "a", 20, 24, 2);
    const auto test = random_dataset(rng, "a", 20, 24, 2);
    auto rescale = [](const LabeledDataset& d) {
        std::vector<TimeSeries> s;
        for (const auto& t : d.series()) {
            std::vector<double> v;
            for (double x : t.values()) v.push_back(4.0 * x + 3.0);
            s.emplace_back(std::move(v), t.label());
        }
        return LabeledDataset(d.name(), std::move(s));
    };
    const auto a = evaluate(train, test, FdParams(4, 0.3));
    const auto b = evaluate(rescale(train), rescale(test), FdParams(4, 0.3));
    int diffs = 0;
    for (std::size_t i = 0; i < a.predictions.size(); ++i) diffs += a.predictions[i] != b.predictions[i];
    // Rounding can move a point across a threshold; allow the odd flip.
    EXPECT_LE(diffs, 1);
}

TEST(Evaluate, SaxSubstitutesFlatSeriesWithWarning) {
    const LabeledDataset train("flat", {TimeSeries({1, 2, 3, 4}, 0), TimeSeries({5, 5, 5, 5}, 1)});
    const LabeledDataset test("flat", {TimeSeries({7, 7, 7, 7}, 1), TimeSeries({1, 2, 3, 5}, 0)});
    std::vector<std::string> warnings;
    EvalOptions opts;
    opts.on_warning = [&](std::string_view m) { warnings.emplace_back(m); };
    const auto r = evaluate(train, test, SaxParams(2, 4), opts);
    EXPECT_EQ(r.degenerate_series, 2u);
    ASSERT_EQ(warnings.size(), 2u);
    EXPECT_NE(warnings[0].find("flat"), std::string::npos);
    EXPECT_EQ(r.predictions, (std::vector<Label>{1, 0}));

    opts.substitute_degenerate = false;
    EXPECT_THROW(evaluate(train, test, SaxParams(2, 4), opts), DegenerateNormalization);
}

TEST(Evaluate, LengthMismatchBetweenSplits) {
    const LabeledDataset train("x", {TimeSeries({1, 2, 3}, 0), TimeSeries({3, 2, 1}, 1)});
    const LabeledDataset test("x", {TimeSeries({1, 2, 3, 4}, 0)});
    EXPECT_THROW(evaluate(train, test, FdParams(2, 0.1)), DataError);
    EXPECT_THROW(evaluate(train, train, FdParams(4, 0.1)), InvalidArgument);
}

TEST(Evaluate, JsonReport) {
    const auto r = evaluate(hand_train(), hand_test(), FdParams(1, 0.01));
    const auto j = to_json(r);
    EXPECT_EQ(j.front(), '{');
    EXPECT_NE(j.find("\"error\":0.5"), std::string::npos);
    EXPECT_NE(j.find("\"fitted_on\":\"train\""), std::string::npos);
    EXPECT_NE(j.find("\"confusion\":[[1,1],[1,1]]"), std::string::npos);
}

}  // namespace
}  // namespace fdtsc
