#include "tsim/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "tsim/baselines.hpp"
#include "tsim/errors.hpp"

namespace tsim {

std::string_view measure_name(Measure measure) noexcept {
    switch (measure) {
        case Measure::Tsim: return "tsim";
        case Measure::Jaccard: return "jaccard";
        case Measure::Cosine: return "cosine";
        case Measure::Euclidean: return "euclidean";
    }
    return "?";
}

std::string_view std_mode_name(StdMode mode) noexcept {
    return mode == StdMode::Sample ? "sample" : "population";
}

Measure parse_measure(std::string_view name) {
    if (name == "tsim") return Measure::Tsim;
    if (name == "jaccard") return Measure::Jaccard;
    if (name == "cosine") return Measure::Cosine;
    if (name == "euclidean") return Measure::Euclidean;
    throw UsageError("unknown measure: " + std::string(name));
}

StdMode parse_std_mode(std::string_view name) {
    if (name == "sample") return StdMode::Sample;
    if (name == "population") return StdMode::Population;
    throw UsageError("unknown std mode: " + std::string(name));
}

void validate(const SimilarityConfig& cfg) {
    if (!(cfg.lambda > 0.0) || !std::isfinite(cfg.lambda)) {
        throw ValidationError("lambda must be a positive finite number");
    }
}

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> ids, Measure measure)
    : ids_(std::move(ids)), values_(ids_.size() * ids_.size(), 0.0), measure_(measure) {
    index_.reserve(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (!index_.emplace(ids_[i], i).second) {
            throw ValidationError("duplicate transaction id: " + ids_[i]);
        }
    }
}

double SimilarityMatrix::at(const std::string& tid_i, const std::string& tid_j) const {
    return at(index_of(tid_i), index_of(tid_j));
}

void SimilarityMatrix::set(std::size_t i, std::size_t j, double value) {
    const std::size_t n = size();
    values_.at(i * n + j) = value;
    values_.at(j * n + i) = value;
}

std::size_t SimilarityMatrix::index_of(const std::string& tid) const {
    const auto it = index_.find(tid);
    if (it == index_.end()) {
        throw NotFoundError("unknown transaction id: " + tid);
    }
    return it->second;
}

ItemStats compute_stats(const Dataset& ds, const SimilarityConfig& cfg) {
    validate(cfg);
    const std::size_t n = ds.size();
    if (n < 2) {
        throw ValidationError("standard deviation needs at least two transactions");
    }
    const std::size_t m = ds.item_count();
    ItemStats stats;
    stats.sigma.assign(m, 0.0);
    stats.transaction_count = n;

    const auto& tx = ds.transactions();
    const double divisor =
        cfg.std_mode == StdMode::Sample ? static_cast<double>(n - 1)
                                        : static_cast<double>(n);
    // Welford per column; each column is accumulated serially in row order,
    // so the result does not depend on the thread count.
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < static_cast<long long>(m); ++k) {
        double mean = 0.0;
        double m2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = static_cast<double>(tx[i].counts[k]);
            const double d = x - mean;
            mean += d / static_cast<double>(i + 1);
            m2 += d * (x - mean);
        }
        stats.sigma[k] = std::sqrt(std::max(m2, 0.0) / divisor);
    }
    return stats;
}

double s_alpha_beta(const SequenceVector& sv, const ItemStats& stats) {
    if (sv.entries.size() != stats.sigma.size()) {
        throw ValidationError("sequence vector and stats cover different catalogs");
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < sv.entries.size(); ++k) {
        num += alpha(sv.entries[k], stats.sigma[k]);
        den += beta(sv.entries[k]);
    }
    if (den == 0.0) {
        return -1.0;  // every item absent from both transactions
    }
    return num / den;
}

double tsim(const Dataset& ds, const ItemStats& stats, const SimilarityConfig& cfg,
            const std::string& tid_i, const std::string& tid_j) {
    validate(cfg);
    const SequenceVector sv = sequence_vector(ds, tid_i, tid_j);
    const double s = s_alpha_beta(sv, stats);
    return (s + 1.0) / (cfg.lambda + 1.0);
}

namespace {

// Fused per-pair kernel: same per-item alpha/beta accumulation as
// s_alpha_beta, without materializing a SequenceVector.
double tsim_cell(const TransactionVector& a, const TransactionVector& b,
                 const ItemStats& stats, double lambda) {
    double num = 0.0;
    double den = 0.0;
    const std::size_t m = stats.sigma.size();
    for (std::size_t k = 0; k < m; ++k) {
        const SequenceEntry entry =
            make_entry(a.counts[k], b.counts[k], a.presence[k], b.presence[k]);
        num += alpha(entry, stats.sigma[k]);
        den += beta(entry);
    }
    const double s = den == 0.0 ? -1.0 : num / den;
    return (s + 1.0) / (lambda + 1.0);
}

double cell_value(const TransactionVector& a, const TransactionVector& b,
                  const ItemStats& stats, const SimilarityConfig& cfg) {
    switch (cfg.measure) {
        case Measure::Tsim: return tsim_cell(a, b, stats, cfg.lambda);
        case Measure::Jaccard: return jaccard(a, b);
        case Measure::Cosine: return cosine(a, b);
        case Measure::Euclidean: return euclidean_sim(a, b);
    }
    return 0.0;
}

void prepare(const Dataset& ds, const SimilarityConfig& cfg, ItemStats& stats) {
    validate(cfg);
    if (ds.size() < 2) {
        throw ValidationError("similarity matrix needs at least two transactions");
    }
    if (cfg.measure == Measure::Tsim) {
        stats = compute_stats(ds, cfg);
    } else {
        stats.sigma.assign(ds.item_count(), 0.0);
        stats.transaction_count = ds.size();
    }
}

}  // namespace

SimilarityMatrix similarity_matrix(const Dataset& ds, const SimilarityConfig& cfg) {
    ItemStats stats;
    prepare(ds, cfg, stats);

    std::vector<std::string> ids;
    ids.reserve(ds.size());
    for (const TransactionVector& tx : ds.transactions()) ids.push_back(tx.tid);
    SimilarityMatrix matrix(std::move(ids), cfg.measure);

    const auto& tx = ds.transactions();
    const long long n = static_cast<long long>(ds.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        for (std::size_t j = static_cast<std::size_t>(i); j < static_cast<std::size_t>(n); ++j) {
            matrix.set(static_cast<std::size_t>(i), j,
                       cell_value(tx[static_cast<std::size_t>(i)], tx[j], stats, cfg));
        }
    }
    return matrix;
}

SimilarityMatrix similarity_matrix_reference(const Dataset& ds,
                                             const SimilarityConfig& cfg) {
    ItemStats stats;
    prepare(ds, cfg, stats);

    std::vector<std::string> ids;
    ids.reserve(ds.size());
    for (const TransactionVector& tx : ds.transactions()) ids.push_back(tx.tid);
    SimilarityMatrix matrix(std::move(ids), cfg.measure);

    const auto& tx = ds.transactions();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = i; j < ds.size(); ++j) {
            double value = 0.0;
            switch (cfg.measure) {
                case Measure::Tsim:
                    value = tsim(ds, stats, cfg, tx[i].tid, tx[j].tid);
                    break;
                case Measure::Jaccard: value = jaccard(tx[i], tx[j]); break;
                case Measure::Cosine: value = cosine(tx[i], tx[j]); break;
                case Measure::Euclidean: value = euclidean_sim(tx[i], tx[j]); break;
            }
            matrix.set(i, j, value);
        }
    }
    return matrix;
}

}  // namespace tsim
