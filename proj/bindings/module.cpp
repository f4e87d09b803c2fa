/*
 * Copyright (c) 2026 the pdct authors
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
 */

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdct/codec.hpp"
#include "pdct/imageio.hpp"
#include "pdct/kernels.hpp"
#include "pdct/opbench.hpp"
#include "pdct/zonal.hpp"

namespace py = pybind11;

namespace {

pdct::Block8 to_block(const py::array_t<double>& a) {
    const auto r = a.unchecked<2>();
    if (r.shape(0) != 8 || r.shape(1) != 8) throw py::value_error("block must be 8x8");
    pdct::Block8 b;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) b[i][j] = r(i, j);
    return b;
}

py::array_t<double> from_block(const pdct::Block8& b) {
    py::array_t<double> a({8, 8});
    auto w = a.mutable_unchecked<2>();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) w(i, j) = b[i][j];
    return a;
}

pdct::GrayImage to_image(const py::array_t<std::uint8_t>& a) {
    const auto r = a.unchecked<2>();
    pdct::GrayImage img;
    img.height = static_cast<int>(r.shape(0));
    img.width = static_cast<int>(r.shape(1));
    img.samples.resize(static_cast<std::size_t>(img.width) * img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            img.samples[static_cast<std::size_t>(y) * img.width + x] = r(y, x);
    return img;
}

py::array_t<std::uint8_t> from_image(const pdct::GrayImage& img) {
    py::array_t<std::uint8_t> a({img.height, img.width});
    auto w = a.mutable_unchecked<2>();
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) w(y, x) = img.at(x, y);
    return a;
}

py::dict metrics_dict(const pdct::ImageMetrics& m) {
    py::dict d;
    d["psnr_db"] = m.psnr_db;
    d["nz_pct"] = m.nz_pct;
    d["energy_compaction"] = m.energy_compaction;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "pruned approximate DCT toolkit";

    m.def("transform_names", &pdct::transform_names);

    m.def(
        "forward_1d",
        [](const std::string& name, const std::array<double, 8>& x, bool scaled) {
            const auto& spec = pdct::transform_by_name(name);
            const pdct::Vec8 y = pdct::apply_1d(spec, x);
            std::vector<double> out(static_cast<std::size_t>(spec.rows));
            for (int i = 0; i < spec.rows; ++i) out[i] = scaled ? spec.scaling[i] * y[i] : y[i];
            return out;
        },
        py::arg("transform"), py::arg("x"), py::arg("scaled") = false);

    m.def(
        "transform_matrix",
        [](const std::string& name) {
            const auto& spec = pdct::transform_by_name(name);
            py::array_t<double> a({spec.rows, pdct::kBlockSize});
            auto w = a.mutable_unchecked<2>();
            for (int i = 0; i < spec.rows; ++i)
                for (int j = 0; j < pdct::kBlockSize; ++j) w(i, j) = spec.matrix[i][j];
            return a;
        },
        py::arg("transform"));

    m.def(
        "scaling",
        [](const std::string& name) {
            const auto& spec = pdct::transform_by_name(name);
            return std::vector<double>(spec.scaling.begin(), spec.scaling.begin() + spec.rows);
        },
        py::arg("transform"));

    m.def(
        "forward_2d",
        [](const std::string& name, const py::array_t<double>& a, bool scaled) {
            const auto& spec = pdct::transform_by_name(name);
            const auto f = pdct::forward_2d(spec, to_block(a), scaled);
            py::dict d;
            d["coeffs"] = from_block(f.coeffs);
            d["rows"] = f.rows;
            d["ops"] = py::make_tuple(f.ops.mult, f.ops.add, f.ops.shift);
            return d;
        },
        py::arg("transform"), py::arg("block"), py::arg("scaled") = false);

    m.def(
        "inverse_2d",
        [](const std::string& name, const py::array_t<double>& b, bool scaled) {
            const auto& spec = pdct::transform_by_name(name);
            const auto r = b.unchecked<2>();
            if (r.shape(0) == 4 && r.shape(1) == 4) {
                pdct::Block4 b4;
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) b4[i][j] = r(i, j);
                return from_block(pdct::inverse_2d(spec, b4, scaled));
            }
            return from_block(pdct::inverse_2d(spec, to_block(b), scaled));
        },
        py::arg("transform"), py::arg("block"), py::arg("scaled") = true);

    m.def(
        "energy_compaction",
        [](const py::array_t<double>& a) -> py::object {
            const auto v = pdct::energy_compaction(to_block(a));
            if (!v) return py::none();
            return py::float_(*v);
        },
        py::arg("block"));

    m.def(
        "compress_image",
        [](const py::array_t<std::uint8_t>& img, const std::string& transform, bool pruned,
           bool level_shift) {
            pdct::CodecConfig cfg;
            cfg.transform = transform;
            cfg.pruned = pruned;
            cfg.level_shift = level_shift;
            const auto r = pdct::compress_image(to_image(img), cfg);
            return py::make_tuple(from_image(r.reconstructed), metrics_dict(r.metrics));
        },
        py::arg("image"), py::arg("transform") = "modified-rdct", py::arg("pruned") = false,
        py::arg("level_shift") = false);

    m.def(
        "psnr",
        [](const py::array_t<std::uint8_t>& a, const py::array_t<std::uint8_t>& b) {
            return pdct::psnr(to_image(a), to_image(b));
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "measure",
        [](const std::string& transform, const std::string& dim, bool pruned) {
            const pdct::Dim d = dim == "2D" ? pdct::Dim::k2D : pdct::Dim::k1D;
            const auto row = pdct::measure(transform, d, pruned);
            py::dict out;
            out["method"] = row.method;
            out["dim"] = pdct::to_string(row.dim);
            out["pruned"] = row.pruned;
            out["mult"] = row.ops.mult;
            out["add"] = row.ops.add;
            out["shift"] = row.ops.shift;
            out["source"] = pdct::to_string(row.source);
            return out;
        },
        py::arg("transform"), py::arg("dim") = "1D", py::arg("pruned") = false);

    m.def("complexity_csv", [] { return pdct::complexity_csv(pdct::complexity_table()); });
    m.def("savings_csv", [] { return pdct::savings_csv(pdct::savings_report()); });

    m.def(
        "load_pgm", [](const std::string& path) { return from_image(pdct::load_pgm(path)); },
        py::arg("path"));
    m.def(
        "save_pgm",
        [](const std::string& path, const py::array_t<std::uint8_t>& img) {
            pdct::save_pgm(path, to_image(img));
        },
        py::arg("path"), py::arg("image"));
    m.def(
        "synth_image",
        [](const std::string& kind, int width, int height, std::uint32_t seed) {
            return from_image(pdct::synth_image(kind, width, height, seed));
        },
        py::arg("kind"), py::arg("width"), py::arg("height"), py::arg("seed") = 0);
}
