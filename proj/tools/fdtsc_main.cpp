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

// fdtsc command line: repr, decode, dist, classify, bench, manifest.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fdtsc/bench.hpp"
#include "fdtsc/classifier.hpp"
#include "fdtsc/codec.hpp"
#include "fdtsc/dataset_io.hpp"
#include "fdtsc/fd.hpp"

namespace {

using namespace fdtsc;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

constexpr std::string_view kRleHeader = "# fdtsc-rle";

struct ReprOptions {
    std::string input;
    std::size_t window = 4;
    double alpha = 0.01;
    std::string stats_from;
    std::optional<double> mu;
    std::optional<double> sigma;
    std::string rle_out;
    std::string binary_out;
};

struct DecodeOptions {
    std::string input;
    std::optional<std::size_t> length;
    std::optional<std::size_t> window;
};

struct DistOptions {
    std::string a;
    std::string b;
    std::size_t a_index = 0;
    std::size_t b_index = 0;
};

struct ClassifyOptions {
    std::string train;
    std::string test;
    std::string method;
    std::size_t window = 4;
    double alpha = 0.01;
    std::size_t segments = 0;
    int alphabet = 4;
    unsigned workers = 1;
    std::string format = "csv";
};

struct BenchOptions {
    std::string root;
    std::vector<std::string> datasets;
    int repeats = 10;
    std::string out;
    std::size_t window = 4;
    double alpha = 0.01;
    std::size_t segments = 0;
    int alphabet = 4;
    unsigned workers = 1;
};

std::string describe(const DatasetStats& s) {
    return "mu=" + format_number(s.mu) + " sigma=" + format_number(s.sigma);
}

int run_repr(const ReprOptions& o) {
    const auto data = load_ucr_file(o.input);
    const FdParams params(o.window, o.alpha);

    DatasetStats stats;
    std::string source;
    if (o.mu && o.sigma) {
        stats = DatasetStats(*o.mu, *o.sigma);
        source = "explicit";
    } else if (!o.stats_from.empty()) {
        stats = compute_stats(load_ucr_file(o.stats_from));
        source = o.stats_from;
    } else {
        stats = compute_stats(data);
        source = o.input + " (input itself)";
    }

    std::vector<FdVector> reps;
    reps.reserve(data.size());
    for (const auto& s : data.series()) {
        reps.push_back(fd_discretize(s, params, stats));
    }

    std::cout << "# stats source: " << source << ' ' << describe(stats) << '\n';
    std::cout << "# params: window=" << params.window << " alpha=" << format_number(params.alpha)
              << " n=" << data.series_length() << " L=" << reps.front().size() << '\n';
    std::cout << "index\tlabel\trle\n";
    for (std::size_t i = 0; i < reps.size(); ++i) {
        std::cout << i << '\t' << data.class_names()[*data[i].label()] << '\t' << rle_encode(reps[i]) << '\n';
    }

    if (!o.rle_out.empty()) {
        std::ofstream f(o.rle_out);
        if (!f) {
            throw DataError("cannot write " + o.rle_out);
        }
        f << kRleHeader << " n=" << data.series_length() << " w=" << params.window << '\n';
        for (const auto& r : reps) {
            f << rle_encode(r) << '\n';
        }
    }
    if (!o.binary_out.empty()) {
        std::ofstream f(o.binary_out, std::ios::binary);
        if (!f) {
            throw DataError("cannot write " + o.binary_out);
        }
        for (const auto& r : reps) {
            const auto bytes = pack_trits(r);
            f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        }
    }
    return 0;
}

// Reads every record in an .fdt file or an RLE text file.
std::vector<FdVector> read_records(const std::string& path, std::optional<std::size_t> length,
                                   std::optional<std::size_t> window) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw DataError("cannot open " + path);
    }
    const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
    std::vector<FdVector> out;
    if (bytes.size() >= 4 && std::string_view(reinterpret_cast<const char*>(bytes.data()), 4) == "FDT1") {
        std::span<const std::uint8_t> rest(bytes);
        while (!rest.empty()) {
            std::size_t used = 0;
            out.push_back(unpack_trits_prefix(rest, used));
            rest = rest.subspan(used);
        }
        return out;
    }

    std::istringstream text(std::string(bytes.begin(), bytes.end()));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(text, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.starts_with(kRleHeader)) {
            std::istringstream h(line.substr(kRleHeader.size()));
            std::string kv;
            while (h >> kv) {
                if (kv.starts_with("n=") && !length) {
                    length = std::stoul(kv.substr(2));
                } else if (kv.starts_with("w=") && !window) {
                    window = std::stoul(kv.substr(2));
                }
            }
            continue;
        }
        if (line.front() == '#') {
            continue;
        }
        if (!length || !window) {
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": RLE needs the source length and window (header or --length/--window)");
        }
        try {
            out.push_back(rle_decode(line, *length, *window));
        } catch (const DataError& e) {
            throw DataError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (out.empty()) {
        throw DataError(path + ": no records");
    }
    return out;
}

int run_decode(const DecodeOptions& o) {
    const auto records = read_records(o.input, o.length, o.window);
    std::cout << "index\tn\tw\trle\ttrits\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        std::cout << i << '\t' << r.source_length() << '\t' << r.window() << '\t' << rle_encode(r) << '\t';
        for (std::size_t k = 0; k < r.size(); ++k) {
            std::cout << (k ? "," : "") << to_int(r[k]);
        }
        std::cout << '\n';
    }
    return 0;
}

int run_dist(const DistOptions& o) {
    const auto a = read_records(o.a, std::nullopt, std::nullopt);
    const auto b = read_records(o.b, std::nullopt, std::nullopt);
    if (o.a_index >= a.size() || o.b_index >= b.size()) {
        throw InvalidArgument("record index out of range");
    }
    const auto& x = a[o.a_index];
    const auto& y = b[o.b_index];
    std::cout << "similarity,length,fdist\n"
              << fd_similarity(x, y) << ',' << x.size() << ',' << format_number(fdist(x, y)) << '\n';
    return 0;
}

int run_classify(const ClassifyOptions& o) {
    LabelMap labels;
    const auto train = load_ucr_file(o.train, &labels);
    const auto test = load_ucr_file(o.test, &labels);
    Method method = FdParams(o.window, o.alpha);
    if (o.method == "sax") {
        method = SaxParams(o.segments ? o.segments : default_sax_segments(train.series_length()), o.alphabet);
    }
    EvalOptions opts;
    opts.workers = o.workers;
    const auto report = evaluate(train, test, method, opts);

    if (o.format == "jsonl") {
        std::cout << to_json(report) << '\n';
        return 0;
    }
    std::cout << "dataset,method,params,train_size,test_size,misclassified,error\n"
              << report.dataset << ',' << report.method << ',' << report.params << ',' << report.train_size << ','
              << report.test_size << ',' << report.misclassified << ',' << format_number(report.error) << '\n';
    std::cout << "# protocol: " << report.protocol << '\n';
    if (report.stats) {
        std::cout << "# stats (train): " << describe(*report.stats) << '\n';
    }
    std::cout << "# confusion: rows true label, columns predicted label\n";
    const auto& names = report.class_names;
    auto name_of = [&](std::size_t i) { return i < names.size() ? names[i] : std::to_string(i); };
    std::cout << "true\\pred";
    for (std::size_t j = 0; j < report.confusion.size(); ++j) {
        std::cout << ',' << name_of(j);
    }
    std::cout << '\n';
    for (std::size_t i = 0; i < report.confusion.size(); ++i) {
        std::cout << name_of(i);
        for (auto c : report.confusion[i]) {
            std::cout << ',' << c;
        }
        std::cout << '\n';
    }
    return 0;
}

int run_bench(BenchOptions o) {
    if (o.root.empty()) {
        if (const char* env = std::getenv("FD_TSC_DATA_ROOT")) {
            o.root = env;
        } else {
            throw InvalidArgument("no dataset root: pass --root or set FD_TSC_DATA_ROOT");
        }
    }
    SuiteConfig cfg;
    if (o.datasets.empty()) {
        for (const auto& e : dataset_manifest()) {
            cfg.datasets.emplace_back(e.name);
        }
    } else {
        cfg.datasets = o.datasets;
    }
    cfg.fd = FdParams(o.window, o.alpha);
    cfg.alphabet = o.alphabet;
    if (o.segments) {
        cfg.segments = o.segments;
    }
    cfg.repeats = o.repeats;
    cfg.options.workers = o.workers;
    cfg.options.on_warning = [](std::string_view msg) {
        std::cerr << "warning: " << msg;
        if (msg.find("manifest datasets") != std::string_view::npos) {
            std::cerr << " (run `fdtsc manifest` for the list)";
        }
        std::cerr << '\n';
    };

    const auto result = run_suite(o.root, cfg);
    for (const auto& row : result.rows) {
        if (!row.ok()) {
            std::cerr << "error: " << row.dataset << ": " << row.failure << '\n';
        }
    }
    if (o.workers > 1) {
        std::cerr << "note: classification ran on " << o.workers << " workers; timings are parallel timings\n";
    }
    if (o.out.empty()) {
        write_results_csv(result, std::cout);
        std::cout << '\n';
        write_speed_gain_csv(result, std::cout);
        std::cout << '\n';
        write_errors_csv(result, std::cout);
    } else {
        write_suite_outputs(result, cfg, o.out);
        std::cout << "wrote suite outputs to " << o.out << " (tally " << result.tally() << ")\n";
    }
    // Nothing compared at all is a data problem, not a partial result.
    return result.compared == 0 ? 2 : 0;
}

int run_manifest() {
    std::cout << "dataset,type,size,classes,length\n";
    for (const auto& e : dataset_manifest()) {
        std::cout << e.name << ',' << e.type << ',' << e.size << ',' << e.classes << ',' << e.length << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FD sliding-window ternary representation, SAX baseline and 1NN benchmarks"};
    app.require_subcommand(1);

    ReprOptions repr;
    auto* repr_cmd = app.add_subcommand("repr", "Write FD representations of every series in a UCR file");
    repr_cmd->add_option("--input", repr.input, "UCR-format input file")->required();
    repr_cmd->add_option("--window", repr.window, "Sliding window size w")->capture_default_str();
    repr_cmd->add_option("--alpha", repr.alpha, "Threshold multiplier alpha")->capture_default_str();
    auto* stats_opt = repr_cmd->add_option("--stats-from", repr.stats_from, "Fit mu/sigma on this file (e.g. TRAIN)");
    auto* mu_opt = repr_cmd->add_option("--mu", repr.mu, "Explicit dataset mean");
    auto* sigma_opt = repr_cmd->add_option("--sigma", repr.sigma, "Explicit dataset standard deviation");
    mu_opt->excludes(stats_opt);
    sigma_opt->excludes(stats_opt);
    mu_opt->needs(sigma_opt);
    sigma_opt->needs(mu_opt);
    repr_cmd->add_option("--rle", repr.rle_out, "Also write RLE text to this file");
    repr_cmd->add_option("--binary", repr.binary_out, "Also write packed .fdt records to this file");

    DecodeOptions decode;
    auto* decode_cmd = app.add_subcommand("decode", "Print the trits stored in an .fdt or RLE file");
    decode_cmd->add_option("--input", decode.input, "Encoded file")->required();
    decode_cmd->add_option("--length", decode.length, "Source length n for headerless RLE");
    decode_cmd->add_option("--window", decode.window, "Window w for headerless RLE");

    DistOptions dist;
    auto* dist_cmd = app.add_subcommand("dist", "FDist between two encoded representations");
    dist_cmd->add_option("--a", dist.a, "First encoded file")->required();
    dist_cmd->add_option("--b", dist.b, "Second encoded file")->required();
    dist_cmd->add_option("--a-index", dist.a_index, "Record index in the first file")->capture_default_str();
    dist_cmd->add_option("--b-index", dist.b_index, "Record index in the second file")->capture_default_str();

    ClassifyOptions cls;
    auto* cls_cmd = app.add_subcommand("classify", "1NN classification of a test file against a train file");
    cls_cmd->add_option("--train", cls.train, "Train split")->required();
    cls_cmd->add_option("--test", cls.test, "Test split")->required();
    cls_cmd->add_option("--method", cls.method, "fd or sax")->required()->check(CLI::IsMember({"fd", "sax"}));
    cls_cmd->add_option("--window", cls.window, "FD window w")->capture_default_str();
    cls_cmd->add_option("--alpha", cls.alpha, "FD alpha")->capture_default_str();
    cls_cmd->add_option("--segments", cls.segments, "SAX segments r (0: max(1, round(n/8)))")->capture_default_str();
    cls_cmd->add_option("--alphabet", cls.alphabet, "SAX alphabet size")->capture_default_str();
    cls_cmd->add_option("--workers", cls.workers, "Query worker threads")->capture_default_str();
    cls_cmd->add_option("--format", cls.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time and score FD vs SAX over archive datasets");
    bench_cmd->add_option("--root", bench.root, "Archive root (default: $FD_TSC_DATA_ROOT)");
    bench_cmd->add_option("--datasets", bench.datasets, "Comma-separated names (default: all manifest datasets)")
        ->delimiter(',');
    bench_cmd->add_option("--repeats", bench.repeats, "Timed runs per method")->capture_default_str();
    bench_cmd->add_option("--out", bench.out, "Output directory (default: CSV on stdout)");
    bench_cmd->add_option("--window", bench.window, "FD window w")->capture_default_str();
    bench_cmd->add_option("--alpha", bench.alpha, "FD alpha")->capture_default_str();
    bench_cmd->add_option("--segments", bench.segments, "SAX segments r (0: max(1, round(n/8)))")
        ->capture_default_str();
    bench_cmd->add_option("--alphabet", bench.alphabet, "SAX alphabet size")->capture_default_str();
    bench_cmd->add_option("--workers", bench.workers, "Query worker threads")->capture_default_str();

    auto* manifest_cmd = app.add_subcommand("manifest", "List the benchmark dataset manifest");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*repr_cmd) return run_repr(repr);
        if (*decode_cmd) return run_decode(decode);
        if (*dist_cmd) return run_dist(dist);
        if (*cls_cmd) return run_classify(cls);
        if (*bench_cmd) return run_bench(bench);
        if (*manifest_cmd) return run_manifest();
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
