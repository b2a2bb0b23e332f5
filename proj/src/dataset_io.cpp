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

#include "fdtsc/dataset_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace fdtsc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<double> parse_double(std::string_view s) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

enum class Layout { Tab, Comma, Whitespace };

Layout detect_layout(std::string_view line) {
    if (line.find('\t') != std::string_view::npos) {
        return Layout::Tab;
    }
    if (line.find(',') != std::string_view::npos) {
        return Layout::Comma;
    }
    return Layout::Whitespace;
}

std::vector<std::string_view> split_fields(std::string_view line, Layout layout) {
    std::vector<std::string_view> fields;
    if (layout == Layout::Whitespace) {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            if (i > start) {
                fields.push_back(line.substr(start, i - start));
            }
        }
        return fields;
    }
    const char sep = layout == Layout::Tab ? '\t' : ',';
    std::size_t start = 0;
    while (true) {
        const auto next = line.find(sep, start);
        fields.push_back(trim(line.substr(start, next == std::string_view::npos ? std::string_view::npos : next - start)));
        if (next == std::string_view::npos) {
            break;
        }
        start = next + 1;
    }
    return fields;
}

bool is_missing(std::string_view field) {
    if (field.empty() || field == "?") {
        return true;
    }
    std::string lower(field);
    for (auto& c : lower) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return lower == "nan" || lower == "na";
}

std::string dataset_name_from(const std::filesystem::path& path) {
    std::string stem = path.stem().string();
    for (std::string_view suffix : {"_TRAIN", "_TEST"}) {
        if (stem.size() > suffix.size() && stem.ends_with(suffix)) {
            return stem.substr(0, stem.size() - suffix.size());
        }
    }
    return stem;
}

std::string shortest(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        throw InvariantViolation("to_chars failed");
    }
    return {buf.data(), end};
}

}  // namespace

std::string LabelMap::canonical(std::string_view raw) {
    raw = trim(raw);
    if (auto v = parse_double(raw); v && std::isfinite(*v) && std::nearbyint(*v) == *v &&
                                    std::abs(*v) < 1e15) {
        return std::to_string(static_cast<long long>(*v));
    }
    return std::string(raw);
}

Label LabelMap::intern(std::string_view raw) {
    auto key = canonical(raw);
    if (auto it = ids_.find(key); it != ids_.end()) {
        return it->second;
    }
    const auto id = static_cast<Label>(names_.size());
    ids_.emplace(key, id);
    names_.push_back(std::move(key));
    return id;
}

std::optional<Label> LabelMap::find(std::string_view raw) const {
    if (auto it = ids_.find(canonical(raw)); it != ids_.end()) {
        return it->second;
    }
    return std::nullopt;
}

LabeledDataset load_ucr_stream(std::istream& in, const std::string& name, LabelMap* labels) {
    LabelMap local;
    LabelMap& map = labels ? *labels : local;

    std::vector<TimeSeries> series;
    std::optional<Layout> layout;
    std::size_t expected_length = 0;
    std::string line;
    std::size_t line_no = 0;
    std::vector<double> values;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty()) {
            continue;
        }
        const auto where = name + ":" + std::to_string(line_no);
        if (!layout) {
            layout = detect_layout(body);
        }
        const auto fields = split_fields(body, *layout);
        if (fields.size() < 2) {
            throw DataError(where + ": expected a label and at least one value");
        }
        if (fields[0].empty()) {
            throw DataError(where + ": missing class label");
        }
        values.clear();
        values.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            if (is_missing(fields[i])) {
                throw DataError(where + ": missing value in field " + std::to_string(i + 1));
            }
            auto v = parse_double(fields[i]);
            if (!v) {
                throw DataError(where + ": non-numeric value '" + std::string(fields[i]) + "'");
            }
            if (!std::isfinite(*v)) {
                throw DataError(where + ": non-finite value");
            }
            values.push_back(*v);
        }
        if (series.empty()) {
            expected_length = values.size();
        } else if (values.size() != expected_length) {
            throw DataError(where + ": ragged row with " + std::to_string(values.size()) + " values, expected " +
                            std::to_string(expected_length));
        }
        series.emplace_back(values, map.intern(fields[0]));
    }
    if (in.bad()) {
        throw DataError(name + ": read error");
    }
    if (series.empty()) {
        throw DataError(name + ": no series found");
    }
    return LabeledDataset(name, std::move(series), map.names());
}

LabeledDataset load_ucr_file(const std::filesystem::path& path, LabelMap* labels) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    auto d = load_ucr_stream(in, dataset_name_from(path), labels);
    return d;
}

void write_ucr_stream(const LabeledDataset& d, std::ostream& out) {
    const auto& names = d.class_names();
    for (const auto& s : d.series()) {
        const Label id = *s.label();
        out << (id < names.size() ? names[id] : std::to_string(id));
        for (double v : s.values()) {
            out << '\t' << shortest(v);
        }
        out << '\n';
    }
}

void write_ucr_file(const LabeledDataset& d, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write " + path.string());
    }
    write_ucr_stream(d, out);
    if (!out) {
        throw DataError("write failed for " + path.string());
    }
}

DatasetSplit load_ucr_split(const std::filesystem::path& root, const std::string& name) {
    auto locate = [&](const std::string& split) {
        const auto dir = root / name;
        for (const char* ext : {".tsv", ".txt", ""}) {
            auto p = dir / (name + "_" + split + ext);
            if (std::filesystem::is_regular_file(p)) {
                return p;
            }
        }
        throw DataError("dataset " + name + ": no " + split + " file under " + dir.string());
    };
    LabelMap labels;
    auto train = load_ucr_file(locate("TRAIN"), &labels);
    auto test = load_ucr_file(locate("TEST"), &labels);
    if (train.series_length() != test.series_length()) {
        throw DataError("dataset " + name + ": train length " + std::to_string(train.series_length()) +
                        " differs from test length " + std::to_string(test.series_length()));
    }
    return {std::move(train), std::move(test), std::move(labels)};
}

DatasetStats compute_stats(std::span<const TimeSeries> series) {
    std::size_t count = 0;
    double sum = 0.0;
    for (const auto& s : series) {
        for (double v : s.values()) {
            sum += v;
        }
        count += s.size();
    }
    if (count < 2) {
        throw DataError("dataset stats need at least 2 values");
    }
    const double mu = sum / static_cast<double>(count);
    double ss = 0.0;
    for (const auto& s : series) {
        for (double v : s.values()) {
            ss += (v - mu) * (v - mu);
        }
    }
    const double sigma = std::sqrt(ss / static_cast<double>(count));
    if (!(sigma > 0.0)) {
        throw DataError("degenerate dataset: sigma = 0");
    }
    return DatasetStats(mu, sigma);
}

DatasetStats compute_stats(const LabeledDataset& d) {
    return compute_stats(d.series());
}

namespace {

constexpr std::array<ManifestEntry, 29> kManifest = {{
    {"ChlorineConcentration", "Sensor", 3840, 3, 166},
    {"CinCECGTorso", "Sensor", 1380, 4, 1639},
    {"ECG5000", "ECG", 4500, 5, 140},
    {"ElectricDevices", "Device", 7711, 7, 96},
    {"FaceAll", "Image", 1690, 14, 131},
    {"FacesUCR", "Image", 2050, 14, 131},
    {"FordA", "Sensor", 1320, 2, 500},
    {"InsectWingbeatSound", "Sensor", 1980, 11, 256},
    {"ItalyPowerDemand", "Sensor", 1029, 2, 24},
    {"Mallat", "Simulated", 2345, 8, 1024},
    {"MoteStrain", "Sensor", 1252, 2, 84},
    {"NonInvasiveFetalECGThorax1", "ECG", 1965, 42, 750},
    {"NonInvasiveFetalECGThorax2", "ECG", 1965, 42, 750},
    {"Phoneme", "Sensor", 1896, 39, 1024},
    {"StarLightCurves", "Sensor", 8236, 3, 1024},
    {"Symbols", "Image", 995, 6, 398},
    {"TwoLeadECG", "ECG", 1139, 2, 82},
    {"TwoPatterns", "Simulated", 4000, 4, 128},
    {"UWaveGestureLibraryAll", "Motion", 3582, 8, 945},
    {"UWaveGestureLibraryX", "Motion", 3582, 8, 315},
    {"UWaveGestureLibraryY", "Motion", 3582, 8, 315},
    {"UWaveGestureLibraryZ", "Motion", 3582, 8, 315},
    {"Wafer", "Sensor", 6164, 2, 152},
    {"Yoga", "Image", 3000, 2, 426},
    {"Crop", "Image", 16800, 24, 46},
    {"FreezerRegularTrain", "Sensor", 2850, 2, 301},
    {"FreezerSmallTrain", "Sensor", 2850, 2, 301},
    {"MixedShapesRegularTrain", "Image", 2425, 5, 1024},
    {"MixedShapesSmallTrain", "Image", 2425, 5, 1024},
}};

}  // namespace

std::span<const ManifestEntry> dataset_manifest() noexcept {
    return kManifest;
}

std::optional<ManifestEntry> find_manifest_entry(std::string_view name) noexcept {
    for (const auto& e : kManifest) {
        if (e.name == name) {
            return e;
        }
    }
    return std::nullopt;
}

}  // namespace fdtsc
