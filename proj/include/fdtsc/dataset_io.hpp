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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fdtsc/core.hpp"

namespace fdtsc {

/// Raw class label text -> dense id, in first-appearance order.
///
/// Numeric labels are canonicalized first, so "1", "1.0" and
/// "1.0000000e+00" share an id.
class LabelMap {
public:
    Label intern(std::string_view raw);
    std::optional<Label> find(std::string_view raw) const;

    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }

    static std::string canonical(std::string_view raw);

private:
    std::unordered_map<std::string, Label> ids_;
    std::vector<std::string> names_;
};

/// Reads one UCR-style file: one series per line, class label first.
///
/// Tab-, comma- and whitespace-separated layouts are detected from the first
/// data line. Missing values ("NaN", empty fields) are rejected, not imputed.
/// Pass `labels` to share ids across splits; the dataset's class_names are a
/// snapshot of the map after loading.
LabeledDataset load_ucr_file(const std::filesystem::path& path, LabelMap* labels = nullptr);
LabeledDataset load_ucr_stream(std::istream& in, const std::string& name, LabelMap* labels = nullptr);

/// Writes TSV using the shortest text that round-trips every value.
void write_ucr_file(const LabeledDataset& d, const std::filesystem::path& path);
void write_ucr_stream(const LabeledDataset& d, std::ostream& out);

struct DatasetSplit {
    LabeledDataset train;
    LabeledDataset test;
    LabelMap labels;
};

/// `<root>/<name>/<name>_TRAIN.tsv` and `_TEST.tsv` (falls back to .txt and
/// extensionless names used by older archive releases).
DatasetSplit load_ucr_split(const std::filesystem::path& root, const std::string& name);

/// Throws DataError if sigma == 0 or fewer than 2 values are present.
DatasetStats compute_stats(const LabeledDataset& d);
DatasetStats compute_stats(std::span<const TimeSeries> series);

struct ManifestEntry {
    std::string_view name;
    std::string_view type;
    std::size_t size;  ///< matches the archive's test split
    std::size_t classes;
    std::size_t length;
};

/// The 29 large archive datasets used for the FD vs SAX comparison.
std::span<const ManifestEntry> dataset_manifest() noexcept;
std::optional<ManifestEntry> find_manifest_entry(std::string_view name) noexcept;

}  // namespace fdtsc
