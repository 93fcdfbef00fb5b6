// Times the parallel matrix kernel against the serial reference on a
// synthetic dataset and reports the largest cell difference.
//
//   bench_matrix [n_transactions] [n_items] [reps] [counted01]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tsim/dataset.hpp"
#include "tsim/similarity.hpp"

namespace {

tsim::Dataset synthetic_dataset(std::size_t n, std::size_t m, bool counted,
                                std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution present(0.35);
    std::uniform_int_distribution<std::int64_t> count(1, 5);

    std::vector<tsim::BasketRecord> records;
    records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        tsim::BasketRecord record;
        record.tid = "T" + std::to_string(i + 1);
        for (std::size_t k = 0; k < m; ++k) {
            if (present(rng)) {
                record.items.push_back(
                    {"I" + std::to_string(k + 1), counted ? count(rng) : 1});
            }
        }
        records.push_back(std::move(record));
    }
    // Guarantee every item occurs at least once so the catalog has size m.
    tsim::BasketRecord full;
    full.tid = "T" + std::to_string(n + 1);
    for (std::size_t k = 0; k < m; ++k) {
        full.items.push_back({"I" + std::to_string(k + 1), 1});
    }
    records.push_back(std::move(full));
    return tsim::build_dataset(records);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 512;
    const std::size_t m = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 64;
    const int reps = argc > 3 ? std::atoi(argv[3]) : 3;
    const bool counted = argc > 4 && std::atoi(argv[4]) != 0;

    const tsim::Dataset ds = synthetic_dataset(n, m, counted, 42);
    tsim::SimilarityConfig cfg;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif
    std::printf("dataset: n=%zu m=%zu mode=%s\n", ds.size(), ds.item_count(),
                counted ? "counted" : "binary");

    double serial_best = 1e300;
    tsim::SimilarityMatrix reference = tsim::similarity_matrix_reference(ds, cfg);
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        reference = tsim::similarity_matrix_reference(ds, cfg);
        serial_best = std::min(serial_best, seconds_since(start));
    }

    double parallel_best = 1e300;
    tsim::SimilarityMatrix parallel = tsim::similarity_matrix(ds, cfg);
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        parallel = tsim::similarity_matrix(ds, cfg);
        parallel_best = std::min(parallel_best, seconds_since(start));
    }

    double max_diff = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        for (std::size_t j = 0; j < reference.size(); ++j) {
            max_diff = std::max(max_diff,
                                std::abs(reference.at(i, j) - parallel.at(i, j)));
        }
    }

    const double cells = static_cast<double>(ds.size()) * ds.size();
    std::printf("serial reference: %8.3f ms  (%6.2f Mcells/s)\n",
                serial_best * 1e3, cells / serial_best / 1e6);
    std::printf("parallel kernel:  %8.3f ms  (%6.2f Mcells/s)\n",
                parallel_best * 1e3, cells / parallel_best / 1e6);
    std::printf("speedup: %.2fx   max |diff|: %.3g\n", serial_best / parallel_best,
                max_diff);

    return max_diff == 0.0 ? 0 : 1;
}
