#include "tsim/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tsim/errors.hpp"

namespace tsim {

namespace {

void validate_matrix(const SimilarityMatrix& matrix) {
    const std::size_t n = matrix.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double v = matrix.at(i, j);
            if (!(v >= 0.0 && v <= 1.0)) {
                throw ValidationError("matrix value out of [0,1] at (" +
                                      matrix.ids()[i] + "," + matrix.ids()[j] + ")");
            }
            if (matrix.at(j, i) != v) {
                throw ValidationError("matrix is not symmetric at (" +
                                      matrix.ids()[i] + "," + matrix.ids()[j] + ")");
            }
        }
    }
}

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // Attach the larger index under the smaller one so each root is the
        // smallest member of its component.
        if (a < b) parent[b] = a; else parent[a] = b;
    }
};

}  // namespace

Clustering threshold_cluster(const SimilarityMatrix& matrix, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
        throw ValidationError("threshold must be in [0,1]");
    }
    validate_matrix(matrix);

    const std::size_t n = matrix.size();
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (matrix.at(i, j) >= threshold) uf.unite(i, j);
        }
    }

    // Group members by root; roots appear in ascending index order, so the
    // clusters come out ordered by smallest member and internally sorted.
    std::vector<std::vector<std::size_t>> by_root(n);
    for (std::size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);

    Clustering result;
    result.threshold = threshold;
    result.measure = matrix.measure();
    for (std::size_t root = 0; root < n; ++root) {
        if (by_root[root].empty()) continue;
        std::vector<std::string> cluster;
        cluster.reserve(by_root[root].size());
        for (std::size_t member : by_root[root]) {
            cluster.push_back(matrix.ids()[member]);
        }
        result.clusters.push_back(std::move(cluster));
    }
    return result;
}

std::vector<std::pair<double, Clustering>> threshold_sweep(
    const SimilarityMatrix& matrix, std::size_t steps) {
    if (steps < 1) {
        throw ValidationError("steps must be >= 1");
    }
    std::vector<std::pair<double, Clustering>> sweep;
    sweep.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) {
        const double threshold =
            static_cast<double>(k) / static_cast<double>(steps);
        sweep.emplace_back(threshold, threshold_cluster(matrix, threshold));
    }
    return sweep;
}

}  // namespace tsim
