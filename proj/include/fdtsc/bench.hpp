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
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdtsc/classifier.hpp"
#include "fdtsc/dataset_io.hpp"

namespace fdtsc {

struct TimingSummary {
    std::vector<double> samples;  ///< seconds per timed run, warm-up excluded
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

TimingSummary summarize(std::vector<double> samples);

struct TimedEval {
    EvalReport report;
    TimingSummary total;
    TimingSummary representation;
    TimingSummary query;
};

/// Runs one untimed warm-up pass and then `repeats` timed passes of
/// represent + classify. Every pass must yield the same predictions.
TimedEval time_method(const LabeledDataset& train, const LabeledDataset& test, const Method& method,
                      int repeats = 10, const EvalOptions& opts = {});

struct SuiteConfig {
    std::vector<std::string> datasets;
    FdParams fd{4, 0.01};
    int alphabet = 4;
    /// SAX segment count; per-dataset max(1, round(n/8)) when unset.
    std::optional<std::size_t> segments;
    int repeats = 10;
    EvalOptions options;
};

struct SuiteRow {
    std::string dataset;
    std::string failure;  ///< empty on success
    std::vector<std::string> warnings;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
    std::size_t length = 0;
    std::optional<TimedEval> fd;
    std::optional<TimedEval> sax;

    bool ok() const noexcept { return failure.empty() && fd && sax; }
    /// SAX mean time / FD mean time.
    double speed_gain() const;
};

struct SuiteResult {
    std::vector<SuiteRow> rows;
    std::size_t sax_wins = 0;
    std::size_t fd_wins = 0;
    std::size_t compared = 0;

    /// "<sax wins>/<n> <fd wins>/<n>", ties counting for neither.
    std::string tally() const;
};

using SplitLoader = std::function<DatasetSplit(const std::string& name)>;

/// Per-dataset failures are recorded in the row and never abort the suite.
SuiteResult run_suite(const SuiteConfig& cfg, const SplitLoader& load);
SuiteResult run_suite(const std::filesystem::path& root, const SuiteConfig& cfg);

struct ErrorPoint {
    std::string dataset;
    double fd_error;
    double sax_error;
};

std::vector<ErrorPoint> error_points(const SuiteResult& r);

/// Where a point falls relative to y = x with x = FD error, y = SAX error.
enum class Region { FdBetter, SaxBetter, Diagonal };
Region region_of(const ErrorPoint& p) noexcept;
std::string_view region_name(Region r) noexcept;

// CSV emitters. Numbers use the shortest round-trip form so identical inputs
// give byte-identical files.
void write_results_csv(const SuiteResult& r, std::ostream& out);
void write_speed_gain_csv(const SuiteResult& r, std::ostream& out);
void write_errors_csv(const SuiteResult& r, std::ostream& out);
void write_runs_csv(const SuiteResult& r, std::ostream& out);

/// Scatter data: one point per dataset plus its side of the diagonal.
void emit_scatter(std::span<const ErrorPoint> points, std::ostream& csv);
void emit_scatter_svg(std::span<const ErrorPoint> points, std::ostream& svg);
/// Paired bars, FD then SAX, one group per dataset in input order.
void emit_bars(std::span<const ErrorPoint> points, std::ostream& csv);
void emit_bars_svg(std::span<const ErrorPoint> points, std::ostream& svg);

/// Writes results.csv, speed_gain.csv, errors.csv, runs.csv, scatter.csv,
/// scatter.svg, bars.csv, bars.svg and meta.json into `dir`.
void write_suite_outputs(const SuiteResult& r, const SuiteConfig& cfg, const std::filesystem::path& dir);

/// Published per-dataset values kept as reference metadata next to
/// measured results. Times are hardware dependent and never asserted.
struct PublishedResult {
    std::string_view dataset;
    double fd_seconds;
    double sax_seconds;
    double speed_gain;
    double sax_error;
    double fd_error;
};

std::span<const PublishedResult> published_results() noexcept;
std::optional<PublishedResult> find_published(std::string_view dataset) noexcept;

std::string format_number(double v);

}  // namespace fdtsc
