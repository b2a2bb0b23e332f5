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

#include "fdtsc/classifier.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <iostream>
#include <sstream>
#include <thread>

#include "fdtsc/dataset_io.hpp"
#include "json.hpp"

namespace fdtsc {

namespace {

std::vector<Label> labels_of(const LabeledDataset& d) {
    std::vector<Label> out;
    out.reserve(d.size());
    for (const auto& s : d.series()) {
        out.push_back(*s.label());
    }
    return out;
}

void warn(const EvalOptions& opts, std::string_view msg) {
    if (opts.on_warning) {
        opts.on_warning(msg);
    } else {
        std::cerr << "warning: " << msg << '\n';
    }
}

SaxWord represent_sax(const TimeSeries& t, const SaxParams& p, const EvalOptions& opts, std::string_view where,
                      std::size_t index) {
    try {
        return sax_word(t, p);
    } catch (const DegenerateNormalization&) {
        if (!opts.substitute_degenerate) {
            throw;
        }
        std::ostringstream msg;
        msg << where << " series " << index << " is flat; using the all-zero normalized series";
        warn(opts, msg.str());
        const std::vector<double> zeros(p.segments, 0.0);
        return sax_word_from_paa(zeros, t.size(), p.alphabet);
    }
}

template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (w == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> threads;
    threads.reserve(w);
    const std::size_t chunk = (n + w - 1) / w;
    for (unsigned t = 0; t < w; ++t) {
        threads.emplace_back([&, t] {
            try {
                const std::size_t lo = t * chunk;
                const std::size_t hi = std::min(n, lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) {
                    fn(i);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class Store, class Represent>
void run_queries(const Store& store, const LabeledDataset& test, Represent&& represent, const EvalOptions& opts,
                 EvalReport& report) {
    using Rep = typename Store::Representation;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::optional<Rep>> queries(test.size());
    for (std::size_t i = 0; i < test.size(); ++i) {
        queries[i].emplace(represent(test[i], i));
    }
    report.repr_seconds += seconds_since(t0);

    auto t1 = std::chrono::steady_clock::now();
    report.predictions.assign(test.size(), 0);
    parallel_for(test.size(), opts.workers,
                 [&](std::size_t i) { report.predictions[i] = classify_1nn(store, *queries[i]).label; });
    report.query_seconds = seconds_since(t1);
}

}  // namespace

FdStore::FdStore(std::vector<FdVector> reps, std::vector<Label> labels, FdParams params, DatasetStats stats)
    : reps_(std::move(reps)), labels_(std::move(labels)), params_(params), stats_(stats) {
    if (reps_.empty()) {
        throw DataError("reference store is empty");
    }
    if (reps_.size() != labels_.size()) {
        throw InvalidArgument("reference store needs one label per representation");
    }
    for (const auto& r : reps_) {
        if (r.size() != reps_.front().size() || r.source_length() != reps_.front().source_length()) {
            throw DataError("reference store holds FD vectors of different shapes");
        }
    }
}

void FdStore::check_query(const FdVector& q) const {
    if (q.size() != reps_.front().size()) {
        throw DataError("query FD vector length " + std::to_string(q.size()) + " does not match store length " +
                        std::to_string(reps_.front().size()));
    }
}

SaxStore::SaxStore(std::vector<SaxWord> reps, std::vector<Label> labels, SaxParams params)
    : reps_(std::move(reps)), labels_(std::move(labels)), params_(params), table_(params.alphabet) {
    if (reps_.empty()) {
        throw DataError("reference store is empty");
    }
    if (reps_.size() != labels_.size()) {
        throw InvalidArgument("reference store needs one label per representation");
    }
    const auto& f = reps_.front();
    for (const auto& r : reps_) {
        if (r.size() != f.size() || r.source_length() != f.source_length() || r.alphabet() != params_.alphabet) {
            throw DataError("reference store holds SAX words of different shapes");
        }
    }
}

void SaxStore::check_query(const SaxWord& q) const {
    const auto& f = reps_.front();
    if (q.size() != f.size() || q.source_length() != f.source_length() || q.alphabet() != f.alphabet()) {
        throw DataError("query SAX word shape does not match the store");
    }
}

std::string_view method_name(const Method& m) noexcept {
    return std::holds_alternative<FdParams>(m) ? "FD" : "SAX";
}

std::string method_params(const Method& m) {
    std::ostringstream os;
    if (const auto* fd = std::get_if<FdParams>(&m)) {
        os << "w=" << fd->window << ";alpha=" << fd->alpha;
    } else {
        const auto& sax = std::get<SaxParams>(m);
        os << "r=" << sax.segments << ";a=" << sax.alphabet;
    }
    return os.str();
}

FdStore build_fd_store(const LabeledDataset& train, const FdParams& params) {
    const auto stats = compute_stats(train);
    std::vector<FdVector> reps;
    reps.reserve(train.size());
    for (const auto& s : train.series()) {
        reps.push_back(fd_discretize(s, params, stats));
    }
    return FdStore(std::move(reps), labels_of(train), params, stats);
}

SaxStore build_sax_store(const LabeledDataset& train, const SaxParams& params, const EvalOptions& opts) {
    params.check_against(train.series_length());
    std::vector<SaxWord> reps;
    reps.reserve(train.size());
    for (std::size_t i = 0; i < train.size(); ++i) {
        reps.push_back(represent_sax(train[i], params, opts, train.name() + " train", i));
    }
    return SaxStore(std::move(reps), labels_of(train), params);
}

EvalReport evaluate(const LabeledDataset& train, const LabeledDataset& test, const Method& method,
                    const EvalOptions& opts) {
    if (train.series_length() != test.series_length()) {
        throw DataError("train and test series lengths differ: " + std::to_string(train.series_length()) +
                        " vs " + std::to_string(test.series_length()));
    }
    EvalReport report;
    report.dataset = train.name();
    report.method = std::string(method_name(method));
    report.params = method_params(method);
    report.train_size = train.size();
    report.test_size = test.size();
    report.workers = std::max(1u, opts.workers);
    report.class_names = test.class_names().size() >= train.class_names().size() ? test.class_names()
                                                                                  : train.class_names();

    if (const auto* fd = std::get_if<FdParams>(&method)) {
        auto t0 = std::chrono::steady_clock::now();
        const auto store = build_fd_store(train, *fd);
        report.repr_seconds = seconds_since(t0);
        report.stats = store.stats();
        run_queries(
            store, test, [&](const TimeSeries& s, std::size_t) { return fd_discretize(s, *fd, store.stats()); }, opts,
            report);
    } else {
        const auto& sax = std::get<SaxParams>(method);
        std::size_t degenerate = 0;
        EvalOptions counted = opts;
        counted.on_warning = [&](std::string_view msg) {
            ++degenerate;
            warn(opts, msg);
        };
        auto t0 = std::chrono::steady_clock::now();
        const auto store = build_sax_store(train, sax, counted);
        report.repr_seconds = seconds_since(t0);
        run_queries(
            store, test,
            [&](const TimeSeries& s, std::size_t i) {
                return represent_sax(s, sax, counted, test.name() + " test", i);
            },
            opts, report);
        report.degenerate_series = degenerate;
    }

    Label max_label = 0;
    for (const auto& s : train.series()) {
        max_label = std::max(max_label, *s.label());
    }
    for (const auto& s : test.series()) {
        max_label = std::max(max_label, *s.label());
    }
    const std::size_t classes = static_cast<std::size_t>(max_label) + 1;
    report.confusion.assign(classes, std::vector<std::size_t>(classes, 0));
    for (std::size_t i = 0; i < test.size(); ++i) {
        const Label truth = *test[i].label();
        const Label pred = report.predictions[i];
        ++report.confusion[truth][pred];
        report.misclassified += truth != pred;
    }
    report.error = static_cast<double>(report.misclassified) / static_cast<double>(report.test_size);
    return report;
}

std::string to_json(const EvalReport& r) {
    nlohmann::ordered_json j;
    j["dataset"] = r.dataset;
    j["method"] = r.method;
    j["params"] = r.params;
    j["protocol"] = r.protocol;
    j["train_size"] = r.train_size;
    j["test_size"] = r.test_size;
    j["misclassified"] = r.misclassified;
    j["error"] = r.error;
    j["class_names"] = r.class_names;
    j["confusion"] = r.confusion;
    if (r.stats) {
        j["stats"] = {{"mu", r.stats->mu}, {"sigma", r.stats->sigma}, {"fitted_on", "train"}};
    }
    j["degenerate_series"] = r.degenerate_series;
    j["workers"] = r.workers;
    j["repr_seconds"] = r.repr_seconds;
    j["query_seconds"] = r.query_seconds;
    if (r.repeats > 0) {
        j["mean_seconds"] = r.mean_seconds;
        j["repeats"] = r.repeats;
    }
    return j.dump();
}

}  // namespace fdtsc
