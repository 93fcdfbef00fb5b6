#include "tsim/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "tsim/case_study.hpp"
#include "tsim/clustering.hpp"
#include "tsim/errors.hpp"
#include "tsim/io.hpp"
#include "tsim/similarity.hpp"

namespace fs = std::filesystem;

namespace tsim {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Staged artifact writer: content is collected first, then committed in one
// pass; a failed commit removes everything written during this run.
class OutputStager {
public:
    void stage(fs::path path, std::string content) {
        staged_.emplace_back(std::move(path), std::move(content));
    }

    std::vector<std::string> commit() {
        std::vector<std::string> written;
        try {
            for (const auto& [path, content] : staged_) {
                if (path.has_parent_path()) {
                    fs::create_directories(path.parent_path());
                }
                std::ofstream out(path, std::ios::binary | std::ios::trunc);
                out.write(content.data(),
                          static_cast<std::streamsize>(content.size()));
                if (!out) {
                    throw std::runtime_error("cannot write " + path.string());
                }
                written.push_back(path.string());
            }
        } catch (...) {
            std::error_code ec;
            for (const std::string& path : written) fs::remove(path, ec);
            throw;
        }
        return written;
    }

private:
    std::vector<std::pair<fs::path, std::string>> staged_;
};

void require_field(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw UsageError(std::string("manifest is missing field '") + key + "'");
    }
}

}  // namespace

RunManifest manifest_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("invalid manifest JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw UsageError("manifest must be a JSON object");
    }

    RunManifest manifest;
    require_field(doc, "input");
    try {
        manifest.input = doc.at("input").get<std::string>();
        manifest.format = doc.value("format", manifest.format);
        manifest.measure = doc.value("measure", manifest.measure);
        manifest.std_mode = doc.value("std_mode", manifest.std_mode);
        manifest.lambda = doc.value("lambda", manifest.lambda);
        manifest.threshold = doc.value("threshold", manifest.threshold);
        manifest.output_dir = doc.value("output_dir", manifest.output_dir);
        manifest.tool_version = doc.value("tool_version", manifest.tool_version);
        if (doc.contains("outputs")) {
            const nlohmann::json& outs = doc.at("outputs");
            manifest.stats_file = outs.value("stats", manifest.stats_file);
            manifest.matrix_file = outs.value("matrix", manifest.matrix_file);
            manifest.clusters_file = outs.value("clusters", manifest.clusters_file);
            manifest.errata_file = outs.value("errata", manifest.errata_file);
            manifest.manifest_file = outs.value("manifest", manifest.manifest_file);
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("invalid manifest field: ") + e.what());
    }
    return manifest;
}

std::string manifest_to_json(const RunManifest& manifest) {
    nlohmann::ordered_json doc;
    doc["input"] = manifest.input;
    doc["format"] = manifest.format;
    doc["measure"] = manifest.measure;
    doc["std_mode"] = manifest.std_mode;
    doc["lambda"] = manifest.lambda;
    doc["threshold"] = manifest.threshold;
    doc["output_dir"] = manifest.output_dir;
    doc["outputs"] = {{"stats", manifest.stats_file},
                      {"matrix", manifest.matrix_file},
                      {"clusters", manifest.clusters_file},
                      {"errata", manifest.errata_file},
                      {"manifest", manifest.manifest_file}};
    doc["tool_version"] = manifest.tool_version;
    return doc.dump(2) + "\n";
}

PipelineResult run_pipeline(const RunManifest& manifest) {
    const Measure measure = parse_measure(manifest.measure);
    const StdMode std_mode = parse_std_mode(manifest.std_mode);
    if (!(manifest.lambda > 0.0)) {
        throw UsageError("lambda must be > 0");
    }
    if (!(manifest.threshold >= 0.0 && manifest.threshold <= 1.0)) {
        throw UsageError("threshold must be in [0,1]");
    }
    if (manifest.format != "basket" && manifest.format != "matrix") {
        throw UsageError("unknown format: " + manifest.format);
    }
    if (manifest.input.empty()) {
        throw UsageError("manifest has no input path");
    }

    const std::string text = read_file(manifest.input);
    Dataset ds = [&] {
        try {
            return manifest.format == "basket" ? parse_basket_file(text)
                                               : parse_matrix_file(text);
        } catch (const ParseError& e) {
            throw ParseError(manifest.input + ": " + e.what());
        }
    }();

    SimilarityConfig cfg;
    cfg.lambda = manifest.lambda;
    cfg.std_mode = std_mode;
    cfg.measure = measure;

    const ItemStats stats = compute_stats(ds, cfg);
    const SimilarityMatrix matrix = similarity_matrix(ds, cfg);
    const Clustering clustering = threshold_cluster(matrix, manifest.threshold);

    RunManifest used = manifest;
    used.tool_version = std::string(kVersion);

    const fs::path dir(manifest.output_dir);
    OutputStager stager;
    stager.stage(dir / used.stats_file, write_stats(ds, stats));
    stager.stage(dir / used.matrix_file, write_matrix(matrix));
    stager.stage(dir / used.clusters_file, write_clusters(clustering));

    // The reported reference values assume this exact configuration.
    const bool errata = measure == Measure::Tsim && std_mode == StdMode::Sample &&
                        manifest.lambda == 1.0 && is_case_study(ds);
    if (errata) {
        stager.stage(dir / used.errata_file, errata_report(matrix));
    }
    stager.stage(dir / used.manifest_file, manifest_to_json(used));

    PipelineResult result;
    result.written = stager.commit();
    result.errata_emitted = errata;
    result.cluster_count = clustering.clusters.size();
    return result;
}

}  // namespace tsim
