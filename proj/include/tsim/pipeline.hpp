#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tsim/version.hpp"

namespace tsim {

/// Everything that determines a run. Same manifest + same input bytes give
/// byte-identical outputs, independent of thread count.
struct RunManifest {
    std::string input;
    std::string format = "basket";  // basket | matrix
    std::string measure = "tsim";   // tsim | jaccard | cosine | euclidean
    std::string std_mode = "sample";  // sample | population
    double lambda = 1.0;
    double threshold = 0.8;
    std::string output_dir = "out";
    std::string stats_file = "stats.csv";
    std::string matrix_file = "matrix.csv";
    std::string clusters_file = "clusters.json";
    std::string errata_file = "errata.csv";
    std::string manifest_file = "manifest.json";
    std::string tool_version = std::string(kVersion);
};

/// Throws UsageError on malformed JSON or unknown fields/values.
RunManifest manifest_from_json(std::string_view text);

std::string manifest_to_json(const RunManifest& manifest);

struct PipelineResult {
    std::vector<std::string> written;  // paths, in write order
    bool errata_emitted = false;
    std::size_t cluster_count = 0;
};

/// parse -> stats -> matrix -> cluster -> write. All artifacts are staged in
/// memory and committed together, so a failing stage leaves no partial
/// outputs behind. The errata report is emitted when the input matches the
/// bundled example and the run uses the tsim measure with sample deviation
/// and lambda 1 (the configuration the reported values assume).
PipelineResult run_pipeline(const RunManifest& manifest);

}  // namespace tsim
