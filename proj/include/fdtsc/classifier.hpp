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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fdtsc/core.hpp"
#include "fdtsc/fd.hpp"
#include "fdtsc/sax.hpp"

namespace fdtsc {

/// Representations of the training split plus everything needed to
/// represent and compare a query against them.
class FdStore {
public:
    using Representation = FdVector;

    FdStore(std::vector<FdVector> reps, std::vector<Label> labels, FdParams params, DatasetStats stats);

    const std::vector<FdVector>& representations() const noexcept { return reps_; }
    const std::vector<Label>& labels() const noexcept { return labels_; }
    const FdParams& params() const noexcept { return params_; }
    const DatasetStats& stats() const noexcept { return stats_; }
    std::size_t size() const noexcept { return reps_.size(); }

    void check_query(const FdVector& q) const;
    double distance(const FdVector& a, const FdVector& b) const { return fdist(a, b); }

private:
    std::vector<FdVector> reps_;
    std::vector<Label> labels_;
    FdParams params_;
    DatasetStats stats_;
};

class SaxStore {
public:
    using Representation = SaxWord;

    SaxStore(std::vector<SaxWord> reps, std::vector<Label> labels, SaxParams params);

    const std::vector<SaxWord>& representations() const noexcept { return reps_; }
    const std::vector<Label>& labels() const noexcept { return labels_; }
    const SaxParams& params() const noexcept { return params_; }
    const DistTable& table() const noexcept { return table_; }
    std::size_t size() const noexcept { return reps_.size(); }

    void check_query(const SaxWord& q) const;
    double distance(const SaxWord& a, const SaxWord& b) const { return mindist(a, b, table_); }

private:
    std::vector<SaxWord> reps_;
    std::vector<Label> labels_;
    SaxParams params_;
    DistTable table_;
};

struct Prediction {
    Label label;
    std::size_t index;  ///< matched store element
    double distance;
};

/// Nearest store element; distance ties go to the lowest index.
template <class Store>
Prediction classify_1nn(const Store& store, const typename Store::Representation& query) {
    store.check_query(query);
    const auto& reps = store.representations();
    std::size_t best = 0;
    double best_d = store.distance(reps[0], query);
    for (std::size_t i = 1; i < reps.size(); ++i) {
        const double d = store.distance(reps[i], query);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return {store.labels()[best], best, best_d};
}

using Method = std::variant<FdParams, SaxParams>;

std::string_view method_name(const Method& m) noexcept;

/// "w=4;alpha=0.01" or "r=16;a=4".
std::string method_params(const Method& m);

struct EvalOptions {
    /// Worker threads for the query phase. Predictions do not depend on it.
    unsigned workers = 1;
    /// Replace flat series with all zeros under SAX instead of failing.
    bool substitute_degenerate = true;
    /// Receives warnings such as substituted flat series. Defaults to stderr.
    std::function<void(std::string_view)> on_warning;
};

struct EvalReport {
    std::string dataset;
    std::string method;
    std::string params;
    std::string protocol = "1NN, test split queried against train split";
    std::size_t train_size = 0;
    std::size_t test_size = 0;
    std::size_t misclassified = 0;
    double error = 0.0;
    /// confusion[true][predicted]
    std::vector<std::vector<std::size_t>> confusion;
    std::vector<std::string> class_names;
    std::vector<Label> predictions;
    std::optional<DatasetStats> stats;  ///< FD only; fitted on train
    std::size_t degenerate_series = 0;
    unsigned workers = 1;
    double repr_seconds = 0.0;
    double query_seconds = 0.0;
    /// Filled by the bench harness.
    double mean_seconds = 0.0;
    int repeats = 0;
};

FdStore build_fd_store(const LabeledDataset& train, const FdParams& params);
SaxStore build_sax_store(const LabeledDataset& train, const SaxParams& params, const EvalOptions& opts = {});

/// 1NN over the whole test split, with stats and stores fitted on train.
/// Throws DataError if the splits differ in series length.
EvalReport evaluate(const LabeledDataset& train, const LabeledDataset& test, const Method& method,
                    const EvalOptions& opts = {});

/// One-line JSON object of a report.
std::string to_json(const EvalReport& r);

}  // namespace fdtsc
