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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pdct/codec.hpp"
#include "pdct/imageio.hpp"
#include "pdct/kernels.hpp"
#include "pdct/opbench.hpp"
#include "pdct/zonal.hpp"

namespace {

std::string format4(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << v;
    return os.str();
}

pdct::Vec8 parse_vector8(const std::string& csv) {
    pdct::Vec8 x{};
    std::stringstream ss(csv);
    std::string item;
    int n = 0;
    while (std::getline(ss, item, ',')) {
        if (n >= pdct::kBlockSize) throw CLI::ValidationError("--vector", "expected 8 values");
        x[n++] = std::stod(item);
    }
    if (n != pdct::kBlockSize) throw CLI::ValidationError("--vector", "expected 8 values");
    return x;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
    f << text;
}

int run_transform(const std::string& name, const std::string& vec_csv, bool scaled) {
    const auto& spec = pdct::transform_by_name(name);
    const pdct::Vec8 x = parse_vector8(vec_csv);
    const pdct::Vec8 y = pdct::apply_1d(spec, x);
    std::string line;
    for (int i = 0; i < spec.rows; ++i) {
        if (i) line += ',';
        line += format4(scaled ? spec.scaling[i] * y[i] : y[i]);
    }
    std::cout << line << '\n';
    return 0;
}

int run_compress(const std::string& in, const std::string& name, bool pruned, bool level_shift,
                 const std::string& out_pgm, const std::string& out_csv) {
    pdct::CodecConfig cfg;
    cfg.transform = name;
    cfg.pruned = pruned;
    cfg.level_shift = level_shift;
    const pdct::GrayImage img = pdct::load_pgm(in);
    const auto result = pdct::compress_image(img, cfg);
    if (!out_pgm.empty()) pdct::save_pgm(out_pgm, result.reconstructed);

    pdct::MetricsRow row;
    // canonical row: the 4-row kernel codes as its 8-row parent with pruning on
    const bool low_band = pdct::transform_by_name(name).rows == pdct::kLowBand;
    row.transform = low_band ? "modified-rdct" : name;
    row.pruned = pruned || low_band;
    row.image = std::filesystem::path(in).stem().string();
    row.metrics = result.metrics;
    emit(pdct::metrics_csv_header() + "\n" + pdct::metrics_csv_row(row) + "\n", out_csv);
    return 0;
}

int run_bench_complexity(bool savings, const std::string& out) {
    emit(savings ? pdct::savings_csv(pdct::savings_report())
                 : pdct::complexity_csv(pdct::complexity_table()),
         out);
    return 0;
}

int run_bench_corpus(const std::string& dir, std::vector<std::string> transforms,
                     const std::string& out) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".pgm") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::runtime_error("no .pgm files in " + dir);

    std::vector<pdct::NamedImage> corpus;
    for (const auto& f : files) corpus.emplace_back(f.stem().string(), pdct::load_pgm(f));

    if (transforms.empty()) transforms = {"dct", "sdct", "rdct", "modified-rdct"};
    std::vector<pdct::CodecConfig> configs;
    for (const auto& t : transforms)
        for (const bool pruned : {false, true}) {
            pdct::CodecConfig cfg;
            cfg.transform = t;
            cfg.pruned = pruned;
            configs.push_back(cfg);
        }

    const auto result = pdct::corpus_average(corpus, configs);
    std::string text = pdct::metrics_csv_header() + "\n";
    for (const auto& r : result.per_image) text += pdct::metrics_csv_row(r) + "\n";
    for (const auto& r : result.averages) text += pdct::metrics_csv_row(r) + "\n";
    emit(text, out);
    return 0;
}

int run_energy(const std::vector<std::string>& inputs, const std::string& out) {
    std::string text = "image,blocks,energy_weighted,energy_unweighted\n";
    for (const auto& in : inputs) {
        const pdct::GrayImage img = pdct::load_pgm(in);
        std::vector<pdct::Block8> blocks;
        for (int by = 0; by + pdct::kBlockSize <= img.height; by += pdct::kBlockSize)
            for (int bx = 0; bx + pdct::kBlockSize <= img.width; bx += pdct::kBlockSize) {
                pdct::Block8 a;
                for (int y = 0; y < pdct::kBlockSize; ++y)
                    for (int x = 0; x < pdct::kBlockSize; ++x)
                        a[y][x] = img.at(bx + x, by + y);
                blocks.push_back(a);
            }
        const auto s = pdct::energy_compaction_summary(blocks);
        text += std::filesystem::path(in).stem().string() + "," + std::to_string(s.blocks) + "," +
                format4(s.weighted) + "," + format4(s.unweighted) + "\n";
    }
    emit(text, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pruned approximate DCT toolkit"};
    app.require_subcommand(1);

    std::string name = "modified-rdct";
    std::string vec_csv;
    std::string in_path;
    std::string dir_path;
    std::string out_path;
    std::string out_pgm;
    std::vector<std::string> in_paths;
    std::vector<std::string> transforms;
    bool scaled = false;
    bool pruned = false;
    bool level_shift = false;
    bool savings = false;

    auto* transform = app.add_subcommand("transform", "1-D transform of one length-8 vector");
    transform->add_option("--transform", name, "registry transform name");
    transform->add_option("--vector", vec_csv, "8 comma-separated samples")->required();
    transform->add_flag("--scaled", scaled, "apply the diagonal scaling");

    auto* compress = app.add_subcommand("compress", "compress one PGM image and print metrics");
    compress->add_option("--in", in_path, "input PGM")->required();
    compress->add_option("--transform", name, "registry transform name");
    compress->add_flag("--pruned", pruned, "keep only the 4x4 low-frequency coefficients");
    compress->add_flag("--level-shift", level_shift, "subtract 128 before the transform");
    compress->add_option("--out", out_pgm, "write the reconstructed PGM here");
    compress->add_option("--csv", out_path, "write metrics CSV here instead of stdout");

    auto* bench = app.add_subcommand("bench-complexity", "operation count table as CSV");
    bench->add_flag("--savings", savings, "emit percentage savings instead of raw counts");
    bench->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* corpus = app.add_subcommand("bench-corpus", "codec metrics over a directory of PGMs");
    corpus->add_option("--dir", dir_path, "directory of .pgm images")->required();
    corpus->add_option("--transform", transforms, "transforms to run (default: all full kernels)");
    corpus->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* energy = app.add_subcommand("energy", "energy compaction report for PGM images");
    energy->add_option("--in", in_paths, "input PGM (repeatable)")->required();
    energy->add_option("--out", out_path, "write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transform->parsed()) return run_transform(name, vec_csv, scaled);
        if (compress->parsed())
            return run_compress(in_path, name, pruned, level_shift, out_pgm, out_path);
        if (bench->parsed()) return run_bench_complexity(savings, out_path);
        if (corpus->parsed()) return run_bench_corpus(dir_path, transforms, out_path);
        if (energy->parsed()) return run_energy(in_paths, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
