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
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdtsc {

/// Bad input data: malformed files, degenerate statistics, shape mismatches.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter outside its admissible range.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using Label = std::uint32_t;

/// Univariate series. Timestamps are implicit positions.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values, std::optional<Label> label = std::nullopt);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::optional<Label>& label() const noexcept { return label_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    bool operator==(const TimeSeries&) const = default;

private:
    std::vector<double> values_;
    std::optional<Label> label_;
};

/// Outcome of validate_dataset. `ok()` iff no violation was found.
struct ValidationResult {
    enum class Reason { None, LengthMismatch, MissingLabel, NonFiniteValue, Empty };

    Reason reason = Reason::None;
    std::size_t index = 0;  ///< offending series
    std::string message;

    bool ok() const noexcept { return reason == Reason::None; }
};

/// Checks the labeled-dataset invariants on raw parts, reporting the first
/// violation. LabeledDataset's constructor runs the same check.
ValidationResult validate_dataset(std::span<const TimeSeries> series, std::size_t expected_length);

/// Equal-length, fully labeled collection of series.
///
/// `class_names` maps dense label ids back to the raw labels found in the
/// source file; it may be empty for synthetic data.
class LabeledDataset {
public:
    LabeledDataset(std::string name, std::vector<TimeSeries> series,
                   std::vector<std::string> class_names = {});

    const std::string& name() const noexcept { return name_; }
    std::span<const TimeSeries> series() const noexcept { return series_; }
    std::size_t size() const noexcept { return series_.size(); }
    std::size_t series_length() const noexcept { return expected_length_; }
    const std::vector<std::string>& class_names() const noexcept { return class_names_; }
    const TimeSeries& operator[](std::size_t i) const noexcept { return series_[i]; }

    /// Number of distinct labels present.
    std::size_t class_count() const;

private:
    std::string name_;
    std::vector<TimeSeries> series_;
    std::size_t expected_length_;
    std::vector<std::string> class_names_;
};

ValidationResult validate_dataset(const LabeledDataset& d);

/// Pooled mean and population standard deviation of a dataset.
struct DatasetStats {
    double mu = 0.0;
    double sigma = 0.0;

    DatasetStats() = default;
    DatasetStats(double mu, double sigma);
};

/// FD parameters: sliding window w and threshold multiplier alpha.
struct FdParams {
    std::size_t window = 4;
    double alpha = 0.01;

    FdParams() = default;
    FdParams(std::size_t window, double alpha);
};

enum class Trit : std::int8_t { Neg = -1, Zero = 0, Pos = 1 };

constexpr int to_int(Trit t) noexcept { return static_cast<int>(t); }

/// Throws InvalidArgument unless v is -1, 0 or +1.
Trit trit_from_int(int v);

/// FD representation of one series.
///
/// Length is always source_length - window + 1, so the window is recoverable
/// from the two stored quantities.
class FdVector {
public:
    FdVector(std::vector<Trit> trits, std::size_t source_length);

    std::span<const Trit> trits() const noexcept { return trits_; }
    std::size_t size() const noexcept { return trits_.size(); }
    std::size_t source_length() const noexcept { return source_length_; }
    std::size_t window() const noexcept { return source_length_ - trits_.size() + 1; }
    Trit operator[](std::size_t i) const noexcept { return trits_[i]; }

    /// Count of nonzero trits.
    std::size_t nnz() const noexcept;

    bool operator==(const FdVector&) const = default;

private:
    std::vector<Trit> trits_;
    std::size_t source_length_;
};

inline constexpr int kMinAlphabet = 2;
inline constexpr int kMaxAlphabet = 20;

struct SaxParams {
    std::size_t segments = 1;
    int alphabet = 4;

    SaxParams() = default;
    SaxParams(std::size_t segments, int alphabet);

    /// Also checks segments against a concrete series length.
    void check_against(std::size_t series_length) const;
};

/// r = max(1, round(n / 8)).
std::size_t default_sax_segments(std::size_t series_length) noexcept;

/// SAX word with 1-based symbols in {1..alphabet}.
class SaxWord {
public:
    SaxWord(std::vector<std::uint8_t> symbols, std::size_t source_length, int alphabet);

    std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    std::size_t source_length() const noexcept { return source_length_; }
    int alphabet() const noexcept { return alphabet_; }

    bool operator==(const SaxWord&) const = default;

private:
    std::vector<std::uint8_t> symbols_;
    std::size_t source_length_;
    int alphabet_;
};

}  // namespace fdtsc
