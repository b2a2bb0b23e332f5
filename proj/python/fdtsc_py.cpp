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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fdtsc/classifier.hpp"
#include "fdtsc/codec.hpp"
#include "fdtsc/dataset_io.hpp"
#include "fdtsc/fd.hpp"
#include "fdtsc/sax.hpp"

namespace py = pybind11;
using namespace fdtsc;

namespace {

std::vector<int> trits_of(const FdVector& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (auto t : v.trits()) out.push_back(to_int(t));
    return out;
}

FdVector make_fd(const std::vector<int>& trits, std::size_t source_length) {
    std::vector<Trit> t;
    t.reserve(trits.size());
    for (int x : trits) t.push_back(trit_from_int(x));
    return FdVector(std::move(t), source_length);
}

LabeledDataset make_dataset(const std::vector<std::vector<double>>& rows, const std::vector<Label>& labels,
                            const std::string& name) {
    if (rows.size() != labels.size()) {
        throw InvalidArgument("need one label per series");
    }
    std::vector<TimeSeries> s;
    s.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) s.emplace_back(rows[i], labels[i]);
    return LabeledDataset(name, std::move(s));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "FD ternary representation, SAX baseline and 1NN evaluation";

    auto data_error = py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<CodecError>(m, "CodecError", data_error.ptr());
    py::register_exception<DegenerateNormalization>(m, "DegenerateNormalization", data_error.ptr());
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    py::class_<FdVector>(m, "FdVector")
        .def(py::init(&make_fd), py::arg("trits"), py::arg("source_length"))
        .def_property_readonly("trits", &trits_of)
        .def_property_readonly("source_length", &FdVector::source_length)
        .def_property_readonly("window", &FdVector::window)
        .def_property_readonly("nnz", &FdVector::nnz)
        .def("__len__", &FdVector::size)
        .def("__eq__", [](const FdVector& a, const FdVector& b) { return a == b; })
        .def("__repr__", [](const FdVector& v) { return "FdVector('" + rle_encode(v) + "')"; });

    py::class_<SaxWord>(m, "SaxWord")
        .def(py::init<std::vector<std::uint8_t>, std::size_t, int>(), py::arg("symbols"), py::arg("source_length"),
             py::arg("alphabet"))
        .def_property_readonly("symbols",
                               [](const SaxWord& w) { return std::vector<int>(w.symbols().begin(), w.symbols().end()); })
        .def_property_readonly("source_length", &SaxWord::source_length)
        .def_property_readonly("alphabet", &SaxWord::alphabet)
        .def("__len__", &SaxWord::size)
        .def("__eq__", [](const SaxWord& a, const SaxWord& b) { return a == b; });

    m.def(
        "fd_discretize",
        [](const std::vector<double>& values, std::size_t window, double alpha, double mu, double sigma) {
            return fd_discretize(values, FdParams(window, alpha), DatasetStats(mu, sigma));
        },
        py::arg("values"), py::arg("window"), py::arg("alpha"), py::arg("mu"), py::arg("sigma"));
    m.def("fd_similarity", &fd_similarity);
    m.def("fdist", &fdist);

    m.def("rle_encode", &rle_encode);
    m.def("rle_decode", &rle_decode, py::arg("text"), py::arg("source_length"), py::arg("window"));
    m.def("pack_trits", [](const FdVector& v) {
        const auto b = pack_trits(v);
        return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
    });
    m.def("unpack_trits", [](py::bytes data) {
        const std::string s = data;
        return unpack_trits(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
    });

    m.def("znormalize", [](const std::vector<double>& v) { return znormalize(std::span<const double>(v)); });
    m.def(
        "paa", [](const std::vector<double>& v, std::size_t segments) { return paa(v, segments); }, py::arg("values"),
        py::arg("segments"));
    m.def("gaussian_breakpoints", &gaussian_breakpoints);
    m.def(
        "sax_word",
        [](const std::vector<double>& values, std::size_t segments, int alphabet) {
            return sax_word(values, SaxParams(segments, alphabet));
        },
        py::arg("values"), py::arg("segments"), py::arg("alphabet") = 4);
    m.def("mindist", py::overload_cast<const SaxWord&, const SaxWord&>(&mindist));
    m.def("default_sax_segments", &default_sax_segments);

    m.def(
        "load_ucr_file",
        [](const std::filesystem::path& path) {
            const auto d = load_ucr_file(path);
            std::vector<std::vector<double>> rows;
            std::vector<Label> labels;
            for (const auto& s : d.series()) {
                rows.emplace_back(s.values().begin(), s.values().end());
                labels.push_back(*s.label());
            }
            return py::make_tuple(rows, labels, d.class_names());
        },
        py::arg("path"), "Returns (rows, label ids, class names).");

    m.def(
        "evaluate_json",
        [](const std::vector<std::vector<double>>& train, const std::vector<Label>& train_labels,
           const std::vector<std::vector<double>>& test, const std::vector<Label>& test_labels,
           const std::string& method, std::size_t window, double alpha, std::size_t segments, int alphabet,
           unsigned workers) {
            const auto tr = make_dataset(train, train_labels, "python");
            const auto te = make_dataset(test, test_labels, "python");
            Method m = FdParams(window, alpha);
            if (method == "sax") {
                m = SaxParams(segments ? segments : default_sax_segments(tr.series_length()), alphabet);
            } else if (method != "fd") {
                throw InvalidArgument("method must be 'fd' or 'sax'");
            }
            EvalOptions opts;
            opts.workers = workers;
            opts.on_warning = [](std::string_view) {};
            py::gil_scoped_release release;
            return to_json(evaluate(tr, te, m, opts));
        },
        py::arg("train"), py::arg("train_labels"), py::arg("test"), py::arg("test_labels"), py::arg("method") = "fd",
        py::arg("window") = 4, py::arg("alpha") = 0.01, py::arg("segments") = 0, py::arg("alphabet") = 4,
        py::arg("workers") = 1);
}
