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

#include "fdtsc/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace fdtsc {

TimeSeries::TimeSeries(std::vector<double> values, std::optional<Label> label)
    : values_(std::move(values)), label_(label) {
    if (values_.empty()) {
        throw DataError("time series must not be empty");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DataError("non-finite value at position " + std::to_string(i));
        }
    }
}

ValidationResult validate_dataset(std::span<const TimeSeries> series, std::size_t expected_length) {
    using R = ValidationResult::Reason;
    if (series.empty()) {
        return {R::Empty, 0, "dataset has no series"};
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        if (s.size() != expected_length) {
            return {R::LengthMismatch, i,
                    "series " + std::to_string(i) + " has length " + std::to_string(s.size()) +
                        ", expected " + std::to_string(expected_length)};
        }
        if (!s.label()) {
            return {R::MissingLabel, i, "series " + std::to_string(i) + " has no label"};
        }
        // TimeSeries already rejects these; kept so the check stands alone.
        for (double v : s.values()) {
            if (!std::isfinite(v)) {
                return {R::NonFiniteValue, i, "non-finite value in series " + std::to_string(i)};
            }
        }
    }
    return {};
}

ValidationResult validate_dataset(const LabeledDataset& d) {
    return validate_dataset(d.series(), d.series_length());
}

LabeledDataset::LabeledDataset(std::string name, std::vector<TimeSeries> series,
                               std::vector<std::string> class_names)
    : name_(std::move(name)),
      series_(std::move(series)),
      expected_length_(series_.empty() ? 0 : series_.front().size()),
      class_names_(std::move(class_names)) {
    auto v = validate_dataset(series_, expected_length_);
    if (!v.ok()) {
        throw DataError(name_ + ": " + v.message);
    }
}

std::size_t LabeledDataset::class_count() const {
    std::set<Label> labels;
    for (const auto& s : series_) {
        labels.insert(*s.label());
    }
    return labels.size();
}

DatasetStats::DatasetStats(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
    if (!std::isfinite(mu) || !std::isfinite(sigma) || sigma < 0.0) {
        throw InvalidArgument("dataset stats require finite mu and sigma >= 0");
    }
}

FdParams::FdParams(std::size_t window_, double alpha_) : window(window_), alpha(alpha_) {
    if (window < 1) {
        throw InvalidArgument("window must be >= 1");
    }
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw InvalidArgument("alpha must be finite and >= 0");
    }
}

Trit trit_from_int(int v) {
    switch (v) {
        case -1: return Trit::Neg;
        case 0: return Trit::Zero;
        case 1: return Trit::Pos;
        default: throw InvalidArgument("trit value outside {-1,0,1}: " + std::to_string(v));
    }
}

FdVector::FdVector(std::vector<Trit> trits, std::size_t source_length)
    : trits_(std::move(trits)), source_length_(source_length) {
    if (trits_.empty()) {
        throw InvalidArgument("FD vector must not be empty");
    }
    if (trits_.size() > source_length_) {
        throw InvalidArgument("FD vector longer than its source series");
    }
    for (Trit t : trits_) {
        if (t != Trit::Neg && t != Trit::Zero && t != Trit::Pos) {
            throw InvalidArgument("FD vector holds a non-trit value");
        }
    }
}

std::size_t FdVector::nnz() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(trits_.begin(), trits_.end(), [](Trit t) { return t != Trit::Zero; }));
}

SaxParams::SaxParams(std::size_t segments_, int alphabet_) : segments(segments_), alphabet(alphabet_) {
    if (segments < 1) {
        throw InvalidArgument("SAX segments must be >= 1");
    }
    if (alphabet < kMinAlphabet || alphabet > kMaxAlphabet) {
        throw InvalidArgument("SAX alphabet must be in [2, 20], got " + std::to_string(alphabet));
    }
}

void SaxParams::check_against(std::size_t series_length) const {
    if (segments > series_length) {
        throw InvalidArgument("SAX segments (" + std::to_string(segments) +
                              ") exceed series length (" + std::to_string(series_length) + ")");
    }
}

std::size_t default_sax_segments(std::size_t series_length) noexcept {
    auto r = std::lround(static_cast<double>(series_length) / 8.0);
    return r < 1 ? 1 : static_cast<std::size_t>(r);
}

SaxWord::SaxWord(std::vector<std::uint8_t> symbols, std::size_t source_length, int alphabet)
    : symbols_(std::move(symbols)), source_length_(source_length), alphabet_(alphabet) {
    if (alphabet_ < kMinAlphabet || alphabet_ > kMaxAlphabet) {
        throw InvalidArgument("SAX alphabet must be in [2, 20]");
    }
    if (symbols_.empty() || symbols_.size() > source_length_) {
        throw InvalidArgument("SAX word length must be in [1, source_length]");
    }
    for (auto s : symbols_) {
        if (s < 1 || s > alphabet_) {
            throw InvalidArgument("SAX symbol outside {1.." + std::to_string(alphabet_) + "}");
        }
    }
}

}  // namespace fdtsc
