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

#include "fdtsc/bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace fdtsc {

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        throw InvariantViolation("to_chars failed");
    }
    return {buf.data(), end};
}

TimingSummary summarize(std::vector<double> samples) {
    TimingSummary s;
    if (samples.empty()) {
        throw InvalidArgument("timing summary needs at least one sample");
    }
    s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
    auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    s.min = *lo;
    s.max = *hi;
    s.samples = std::move(samples);
    return s;
}

TimedEval time_method(const LabeledDataset& train, const LabeledDataset& test, const Method& method, int repeats,
                      const EvalOptions& opts) {
    if (repeats < 1) {
        throw InvalidArgument("repeats must be >= 1");
    }
    // Warm-up: caches, page faults, and the reference predictions. Only its
    // warnings are surfaced; the timed passes would repeat them.
    EvalReport reference = evaluate(train, test, method, opts);
    EvalOptions quiet = opts;
    quiet.on_warning = [](std::string_view) {};

    std::vector<double> total;
    std::vector<double> repr;
    std::vector<double> query;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        auto r = evaluate(train, test, method, quiet);
        total.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        repr.push_back(r.repr_seconds);
        query.push_back(r.query_seconds);
        if (r.predictions != reference.predictions) {
            throw InvariantViolation("timed run changed predictions on " + train.name());
        }
    }
    TimedEval out{std::move(reference), summarize(std::move(total)), summarize(std::move(repr)),
                  summarize(std::move(query))};
    out.report.mean_seconds = out.total.mean;
    out.report.repeats = repeats;
    return out;
}

double SuiteRow::speed_gain() const {
    if (!ok() || fd->total.mean <= 0.0) {
        return std::nan("");
    }
    return sax->total.mean / fd->total.mean;
}

std::string SuiteResult::tally() const {
    return std::to_string(sax_wins) + "/" + std::to_string(compared) + " " + std::to_string(fd_wins) + "/" +
           std::to_string(compared);
}

SuiteResult run_suite(const SuiteConfig& cfg, const SplitLoader& load) {
    SuiteResult result;
    for (const auto& name : cfg.datasets) {
        SuiteRow row;
        row.dataset = name;
        EvalOptions opts = cfg.options;
        opts.on_warning = [&](std::string_view msg) {
            row.warnings.emplace_back(msg);
            if (cfg.options.on_warning) {
                cfg.options.on_warning(msg);
            }
        };
        const auto manifest = find_manifest_entry(name);
        if (!manifest) {
            opts.on_warning(name + " is not one of the 29 manifest datasets");
        }
        try {
            auto split = load(name);
            row.train_size = split.train.size();
            row.test_size = split.test.size();
            row.length = split.train.series_length();
            if (manifest) {
                if (manifest->size != row.test_size) {
                    opts.on_warning(name + ": test split has " + std::to_string(row.test_size) +
                                    " series, manifest size is " + std::to_string(manifest->size));
                }
                if (manifest->length != row.length) {
                    opts.on_warning(name + ": series length " + std::to_string(row.length) +
                                    " differs from manifest length " + std::to_string(manifest->length));
                }
            }
            const std::size_t r = cfg.segments.value_or(default_sax_segments(row.length));
            const SaxParams sax(r, cfg.alphabet);
            row.fd = time_method(split.train, split.test, cfg.fd, cfg.repeats, opts);
            row.sax = time_method(split.train, split.test, sax, cfg.repeats, opts);
        } catch (const std::exception& e) {
            row.failure = e.what();
            row.fd.reset();
            row.sax.reset();
        }
        if (row.ok()) {
            ++result.compared;
            if (row.fd->report.error < row.sax->report.error) {
                ++result.fd_wins;
            } else if (row.sax->report.error < row.fd->report.error) {
                ++result.sax_wins;
            }
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

SuiteResult run_suite(const std::filesystem::path& root, const SuiteConfig& cfg) {
    return run_suite(cfg, [&](const std::string& name) { return load_ucr_split(root, name); });
}

std::vector<ErrorPoint> error_points(const SuiteResult& r) {
    std::vector<ErrorPoint> points;
    for (const auto& row : r.rows) {
        if (row.ok()) {
            points.push_back({row.dataset, row.fd->report.error, row.sax->report.error});
        }
    }
    return points;
}

Region region_of(const ErrorPoint& p) noexcept {
    if (p.sax_error > p.fd_error) {
        return Region::FdBetter;
    }
    if (p.sax_error < p.fd_error) {
        return Region::SaxBetter;
    }
    return Region::Diagonal;
}

std::string_view region_name(Region r) noexcept {
    switch (r) {
        case Region::FdBetter: return "fd_better";
        case Region::SaxBetter: return "sax_better";
        default: return "diagonal";
    }
}

namespace {

// CSV fields must not contain separators or newlines.
std::string csv_safe(std::string_view s) {
    std::string out(s);
    std::replace(out.begin(), out.end(), ',', ';');
    std::replace(out.begin(), out.end(), '\n', ' ');
    return out;
}

void write_method_row(std::ostream& out, const std::string& dataset, const TimedEval& t) {
    out << csv_safe(dataset) << ',' << t.report.method << ',' << format_number(t.report.error) << ','
        << format_number(t.total.mean) << ',' << format_number(t.total.min) << ',' << format_number(t.total.max)
        << ',' << t.report.params << '\n';
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fixed(double v, int digits = 2) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

}  // namespace

void write_results_csv(const SuiteResult& r, std::ostream& out) {
    out << "dataset,method,error,mean_s,min_s,max_s,params\n";
    for (const auto& row : r.rows) {
        if (row.ok()) {
            write_method_row(out, row.dataset, *row.fd);
            write_method_row(out, row.dataset, *row.sax);
        } else {
            out << csv_safe(row.dataset) << ",NA,nan,nan,nan,nan,failed: " << csv_safe(row.failure) << '\n';
        }
    }
}

void write_speed_gain_csv(const SuiteResult& r, std::ostream& out) {
    out << "dataset,fd_s,sax_s,gain\n";
    for (const auto& row : r.rows) {
        if (!row.ok()) {
            continue;
        }
        out << csv_safe(row.dataset) << ',' << format_number(row.fd->total.mean) << ','
            << format_number(row.sax->total.mean) << ',' << format_number(row.speed_gain()) << '\n';
    }
}

void write_errors_csv(const SuiteResult& r, std::ostream& out) {
    out << "dataset,sax_error,fd_error\n";
    for (const auto& row : r.rows) {
        if (!row.ok()) {
            continue;
        }
        out << csv_safe(row.dataset) << ',' << format_number(row.sax->report.error) << ','
            << format_number(row.fd->report.error) << '\n';
    }
    out << "tally," << r.sax_wins << '/' << r.compared << ',' << r.fd_wins << '/' << r.compared << '\n';
}

void write_runs_csv(const SuiteResult& r, std::ostream& out) {
    out << "dataset,method,run,total_s,repr_s,query_s\n";
    for (const auto& row : r.rows) {
        if (!row.ok()) {
            continue;
        }
        for (const TimedEval* t : {&*row.fd, &*row.sax}) {
            for (std::size_t i = 0; i < t->total.samples.size(); ++i) {
                out << csv_safe(row.dataset) << ',' << t->report.method << ',' << (i + 1) << ','
                    << format_number(t->total.samples[i]) << ',' << format_number(t->representation.samples[i])
                    << ',' << format_number(t->query.samples[i]) << '\n';
            }
        }
    }
}

void emit_scatter(std::span<const ErrorPoint> points, std::ostream& csv) {
    csv << "dataset,fd_error,sax_error,region\n";
    for (const auto& p : points) {
        csv << csv_safe(p.dataset) << ',' << format_number(p.fd_error) << ',' << format_number(p.sax_error) << ','
            << region_name(region_of(p)) << '\n';
    }
}

void emit_bars(std::span<const ErrorPoint> points, std::ostream& csv) {
    csv << "group,dataset,method,error\n";
    for (std::size_t g = 0; g < points.size(); ++g) {
        const auto& p = points[g];
        csv << g << ',' << csv_safe(p.dataset) << ",FD," << format_number(p.fd_error) << '\n';
        csv << g << ',' << csv_safe(p.dataset) << ",SAX," << format_number(p.sax_error) << '\n';
    }
}

void emit_scatter_svg(std::span<const ErrorPoint> points, std::ostream& svg) {
    constexpr double size = 400.0;
    constexpr double margin = 50.0;
    const double axis_max = [&] {
        double m = 0.0;
        for (const auto& p : points) {
            m = std::max({m, p.fd_error, p.sax_error});
        }
        return m > 0.0 ? std::min(1.0, std::ceil(m * 10.0) / 10.0) : 1.0;
    }();
    auto x = [&](double v) { return margin + v / axis_max * size; };
    auto y = [&](double v) { return margin + size - v / axis_max * size; };

    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(size + 2 * margin) << "\" height=\""
        << fixed(size + 2 * margin) << "\">\n";
    svg << "<rect x=\"" << fixed(margin) << "\" y=\"" << fixed(margin) << "\" width=\"" << fixed(size)
        << "\" height=\"" << fixed(size) << "\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << fixed(x(0)) << "\" y1=\"" << fixed(y(0)) << "\" x2=\"" << fixed(x(axis_max))
        << "\" y2=\"" << fixed(y(axis_max)) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
    for (const auto& p : points) {
        const auto color = region_of(p) == Region::FdBetter ? "#d4a017" : region_of(p) == Region::SaxBetter
                                                                              ? "#1f77b4"
                                                                              : "gray";
        svg << "<circle cx=\"" << fixed(x(p.fd_error)) << "\" cy=\"" << fixed(y(p.sax_error))
            << "\" r=\"4\" fill=\"" << color << "\"><title>" << xml_escape(p.dataset) << "</title></circle>\n";
    }
    svg << "<text x=\"" << fixed(margin + size / 2) << "\" y=\"" << fixed(size + 1.7 * margin)
        << "\" text-anchor=\"middle\">FD error</text>\n";
    svg << "<text x=\"15\" y=\"" << fixed(margin + size / 2) << "\" transform=\"rotate(-90 15 "
        << fixed(margin + size / 2) << ")\" text-anchor=\"middle\">SAX error</text>\n";
    svg << "</svg>\n";
}

void emit_bars_svg(std::span<const ErrorPoint> points, std::ostream& svg) {
    constexpr double bar = 12.0;
    constexpr double gap = 10.0;
    constexpr double height = 300.0;
    constexpr double margin = 40.0;
    const double width = margin * 2 + static_cast<double>(points.size()) * (2 * bar + gap);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\""
        << fixed(height + 3 * margin) << "\">\n";
    for (std::size_t g = 0; g < points.size(); ++g) {
        const auto& p = points[g];
        const double x0 = margin + static_cast<double>(g) * (2 * bar + gap);
        for (int k = 0; k < 2; ++k) {
            const double e = k == 0 ? p.fd_error : p.sax_error;
            const double h = e * height;
            svg << "<rect x=\"" << fixed(x0 + k * bar) << "\" y=\"" << fixed(margin + height - h) << "\" width=\""
                << fixed(bar) << "\" height=\"" << fixed(h) << "\" fill=\"" << (k == 0 ? "#d4a017" : "#1f77b4")
                << "\"><title>" << xml_escape(p.dataset) << (k == 0 ? " FD " : " SAX ") << format_number(e)
                << "</title></rect>\n";
        }
        const double tx = x0 + bar;
        const double ty = margin + height + 8;
        svg << "<text x=\"" << fixed(tx) << "\" y=\"" << fixed(ty) << "\" font-size=\"8\" transform=\"rotate(60 "
            << fixed(tx) << ' ' << fixed(ty) << ")\">" << xml_escape(p.dataset) << "</text>\n";
    }
    svg << "</svg>\n";
}

void write_suite_outputs(const SuiteResult& r, const SuiteConfig& cfg, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream f(dir / name);
        if (!f) {
            throw DataError("cannot write " + (dir / name).string());
        }
        return f;
    };
    const auto points = error_points(r);
    {
        auto f = open("results.csv");
        write_results_csv(r, f);
    }
    {
        auto f = open("speed_gain.csv");
        write_speed_gain_csv(r, f);
    }
    {
        auto f = open("errors.csv");
        write_errors_csv(r, f);
    }
    {
        auto f = open("runs.csv");
        write_runs_csv(r, f);
    }
    {
        auto f = open("scatter.csv");
        emit_scatter(points, f);
    }
    {
        auto f = open("scatter.svg");
        emit_scatter_svg(points, f);
    }
    {
        auto f = open("bars.csv");
        emit_bars(points, f);
    }
    {
        auto f = open("bars.svg");
        emit_bars_svg(points, f);
    }

    nlohmann::ordered_json meta;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::array<char, 32> stamp{};
    std::strftime(stamp.data(), stamp.size(), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    meta["generated_at"] = stamp.data();
    meta["protocol"] = "1NN, test split queried against train split; FD stats fitted on train";
    meta["timing"] = "wall clock, one warm-up run excluded, mean of repeats";
    meta["repeats"] = cfg.repeats;
    meta["workers"] = std::max(1u, cfg.options.workers);
    meta["fd"] = {{"window", cfg.fd.window}, {"alpha", cfg.fd.alpha}};
    meta["sax"] = {{"alphabet", cfg.alphabet},
                   {"segments", cfg.segments ? nlohmann::ordered_json(*cfg.segments)
                                             : nlohmann::ordered_json("max(1, round(n/8)) per dataset")}};
    meta["tally"] = r.tally();
    auto& rows = meta["datasets"];
    rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json j;
        j["dataset"] = row.dataset;
        j["ok"] = row.ok();
        if (!row.failure.empty()) {
            j["failure"] = row.failure;
        }
        j["train_size"] = row.train_size;
        j["test_size"] = row.test_size;
        j["length"] = row.length;
        j["warnings"] = row.warnings;
        if (row.ok()) {
            j["fd_params"] = row.fd->report.params;
            j["sax_params"] = row.sax->report.params;
        }
        if (auto pub = find_published(row.dataset)) {
            j["published_reference"] = {{"fd_seconds", pub->fd_seconds},   {"sax_seconds", pub->sax_seconds},
                                        {"speed_gain", pub->speed_gain},   {"fd_error", pub->fd_error},
                                        {"sax_error", pub->sax_error},
                                        {"hardware", "Intel Core i7-6600U @ 2.60GHz, 16 GB RAM"}};
        }
        rows.push_back(std::move(j));
    }
    auto f = open("meta.json");
    f << meta.dump(2) << '\n';
}

namespace {

constexpr std::array<PublishedResult, 29> kPublished = {{
    {"ChlorineConcentration", 4.49, 8.14, 1.8129, 0.742, 0.482},
    {"CinCECGTorso", 2.54, 35.33, 13.9094, 0.304, 0.277},
    {"ECG5000", 4.95, 21.37, 4.3172, 0.195, 0.097},
    {"ElectricDevices", 144.37, 329.55, 2.2827, 0.878, 0.545},
    {"FaceAll", 2.43, 4.02, 1.6543, 0.571, 0.305},
    {"FacesUCR", 0.12, 0.17, 1.4167, 0.476, 0.251},
    {"FordA", 3.80, 15.01, 3.9500, 0.378, 0.348},
    {"InsectWingbeatSound", 1.71, 6.54, 3.8246, 0.494, 0.449},
    {"ItalyPowerDemand", 0.13, 0.40, 3.0769, 0.459, 0.373},
    {"Mallat", 0.33, 1.42, 4.3030, 0.668, 0.311},
    {"MoteStrain", 0.16, 0.24, 1.5000, 0.277, 0.215},
    {"NonInvasiveFetalECGThorax1", 24.40, 165.17, 6.7693, 0.908, 0.414},
    {"NonInvasiveFetalECGThorax2", 24.48, 146.56, 5.9869, 0.871, 0.370},
    {"Phoneme", 5.32, 40.74, 7.6579, 0.946, 0.929},
    {"StarLightCurves", 99.39, 663.06, 6.6713, 0.165, 0.146},
    {"Symbols", 0.47, 0.42, 0.8936, 0.354, 0.220},
    {"TwoLeadECG", 0.15, 0.13, 0.8667, 0.475, 0.310},
    {"TwoPatterns", 9.72, 19.24, 1.9794, 0.307, 0.546},
    {"UWaveGestureLibraryAll", 37.81, 205.49, 5.4348, 0.062, 0.076},
    {"UWaveGestureLibraryX", 10.94, 36.17, 3.3062, 0.414, 0.387},
    {"UWaveGestureLibraryY", 10.75, 36.38, 3.3842, 0.463, 0.474},
    {"UWaveGestureLibraryZ", 13.06, 61.20, 4.6861, 0.420, 0.478},
    {"Wafer", 13.54, 33.08, 2.4431, 0.006, 0.004},
    {"Yoga", 4.39, 24.47, 5.5740, 0.390, 0.231},
    {"Crop", 214.48, 459.17, 2.1409, 0.918, 0.595},
    {"FreezerRegularTrain", 2.09, 7.67, 3.6699, 0.496, 0.413},
    {"FreezerSmallTrain", 1.04, 1.15, 1.1058, 0.330, 0.327},
    {"MixedShapesRegularTrain", 11.52, 87.38, 7.5851, 0.231, 0.209},
    {"MixedShapesSmallTrain", 3.86, 19.57, 5.0699, 0.233, 0.254},
}};

}  // namespace

std::span<const PublishedResult> published_results() noexcept {
    return kPublished;
}

std::optional<PublishedResult> find_published(std::string_view dataset) noexcept {
    for (const auto& p : kPublished) {
        if (p.dataset == dataset) {
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace fdtsc
