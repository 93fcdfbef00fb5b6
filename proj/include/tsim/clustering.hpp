#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tsim/similarity.hpp"

namespace tsim {

/// A partition of the matrix ids: non-empty, disjoint, covering clusters.
/// Members are in matrix-id order; clusters are ordered by their smallest
/// member.
struct Clustering {
    double threshold = 0.0;
    Measure measure = Measure::Tsim;
    std::vector<std::vector<std::string>> clusters;
};

/// Connected components of the graph with an edge between i != j whenever
/// matrix[i][j] >= threshold. Deterministic for a given matrix + threshold.
/// Throws ValidationError on an asymmetric or out-of-range matrix, or a
/// threshold outside [0, 1].
Clustering threshold_cluster(const SimilarityMatrix& matrix, double threshold);

/// threshold_cluster evaluated at k / steps for k = 0..steps.
/// Throws ValidationError when steps < 1.
std::vector<std::pair<double, Clustering>> threshold_sweep(
    const SimilarityMatrix& matrix, std::size_t steps);

}  // namespace tsim
