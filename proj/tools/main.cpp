#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tsim/clustering.hpp"
#include "tsim/errors.hpp"
#include "tsim/io.hpp"
#include "tsim/pipeline.hpp"
#include "tsim/similarity.hpp"
#include "tsim/version.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCompute = 3;

struct CommonOptions {
    std::string input;
    std::string format = "basket";
    std::string measure = "tsim";
    std::string std_mode = "sample";
    double lambda = 1.0;
    double threshold = 0.8;
    std::string output_dir;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw tsim::ParseError("cannot read input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

tsim::Dataset load_dataset(const CommonOptions& opt) {
    if (opt.format != "basket" && opt.format != "matrix") {
        throw tsim::UsageError("unknown format: " + opt.format);
    }
    const std::string text = read_file(opt.input);
    try {
        return opt.format == "basket" ? tsim::parse_basket_file(text)
                                      : tsim::parse_matrix_file(text);
    } catch (const tsim::ParseError& e) {
        throw tsim::ParseError(opt.input + ": " + e.what());
    }
}

tsim::SimilarityConfig make_config(const CommonOptions& opt) {
    tsim::SimilarityConfig cfg;
    cfg.measure = tsim::parse_measure(opt.measure);
    cfg.std_mode = tsim::parse_std_mode(opt.std_mode);
    if (!(opt.lambda > 0.0)) {
        throw tsim::UsageError("lambda must be > 0");
    }
    cfg.lambda = opt.lambda;
    return cfg;
}

void emit(const CommonOptions& opt, const std::string& file_name,
          const std::string& content) {
    if (opt.output_dir.empty()) {
        std::cout << content;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path path = fs::path(opt.output_dir) / file_name;
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    std::cout << "wrote " << path.string() << "\n";
}

int run_stats(const CommonOptions& opt) {
    const tsim::Dataset ds = load_dataset(opt);
    const tsim::SimilarityConfig cfg = make_config(opt);
    const tsim::ItemStats stats = tsim::compute_stats(ds, cfg);
    emit(opt, "stats.csv", tsim::write_stats(ds, stats));
    return 0;
}

int run_matrix(const CommonOptions& opt) {
    const tsim::Dataset ds = load_dataset(opt);
    const tsim::SimilarityConfig cfg = make_config(opt);
    emit(opt, "matrix.csv", tsim::write_matrix(tsim::similarity_matrix(ds, cfg)));
    return 0;
}

int run_cluster(const CommonOptions& opt) {
    if (!(opt.threshold >= 0.0 && opt.threshold <= 1.0)) {
        throw tsim::UsageError("threshold must be in [0,1]");
    }
    const tsim::Dataset ds = load_dataset(opt);
    const tsim::SimilarityConfig cfg = make_config(opt);
    const tsim::SimilarityMatrix matrix = tsim::similarity_matrix(ds, cfg);
    const tsim::Clustering clustering =
        tsim::threshold_cluster(matrix, opt.threshold);
    emit(opt, "clusters.json", tsim::write_clusters(clustering));
    return 0;
}

int run_pipeline_cmd(const CommonOptions& opt, const std::string& manifest_path) {
    tsim::RunManifest manifest;
    if (!manifest_path.empty()) {
        manifest = tsim::manifest_from_json(read_file(manifest_path));
        if (!opt.output_dir.empty()) manifest.output_dir = opt.output_dir;
    } else {
        if (opt.input.empty()) {
            throw tsim::UsageError("pipeline needs --input or --manifest");
        }
        manifest.input = opt.input;
        manifest.format = opt.format;
        manifest.measure = opt.measure;
        manifest.std_mode = opt.std_mode;
        manifest.lambda = opt.lambda;
        manifest.threshold = opt.threshold;
        if (!opt.output_dir.empty()) manifest.output_dir = opt.output_dir;
    }
    const tsim::PipelineResult result = tsim::run_pipeline(manifest);
    for (const std::string& path : result.written) {
        std::cout << "wrote " << path << "\n";
    }
    std::cout << result.cluster_count << " clusters at threshold "
              << manifest.threshold << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian transaction-similarity toolkit"};
    app.set_version_flag("--version", std::string(tsim::kVersion));
    app.require_subcommand(1);

    CommonOptions opt;
    std::string manifest_path;

    const auto add_common = [&](CLI::App* cmd, bool input_required) {
        auto* in = cmd->add_option("--input", opt.input, "input file");
        if (input_required) in->required();
        cmd->add_option("--format", opt.format, "input format: basket|matrix");
        cmd->add_option("--std-mode", opt.std_mode,
                        "deviation divisor: sample|population");
        cmd->add_option("--output-dir", opt.output_dir,
                        "write artifacts here instead of stdout");
        return in;
    };
    const auto add_measure = [&](CLI::App* cmd) {
        cmd->add_option("--measure", opt.measure,
                        "tsim|jaccard|cosine|euclidean");
        cmd->add_option("--lambda", opt.lambda, "bias constant, > 0");
    };

    CLI::App* stats = app.add_subcommand("stats", "per-item deviation table");
    add_common(stats, true);

    CLI::App* matrix = app.add_subcommand("matrix", "pairwise similarity matrix");
    add_common(matrix, true);
    add_measure(matrix);

    CLI::App* cluster =
        app.add_subcommand("cluster", "threshold clustering of the matrix");
    add_common(cluster, true);
    add_measure(cluster);
    cluster->add_option("--threshold", opt.threshold, "edge threshold in [0,1]");

    CLI::App* pipeline =
        app.add_subcommand("pipeline", "full run: stats, matrix, clusters, errata");
    auto* in_opt = add_common(pipeline, false);
    add_measure(pipeline);
    pipeline->add_option("--threshold", opt.threshold, "edge threshold in [0,1]");
    pipeline->add_option("--manifest", manifest_path, "run manifest (JSON)")
        ->excludes(in_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (stats->parsed()) return run_stats(opt);
        if (matrix->parsed()) return run_matrix(opt);
        if (cluster->parsed()) return run_cluster(opt);
        if (pipeline->parsed()) return run_pipeline_cmd(opt, manifest_path);
        return kExitUsage;
    } catch (const tsim::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const tsim::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCompute;
    }
}
