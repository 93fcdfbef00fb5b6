#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tsim/dataset.hpp"
#include "tsim/sequence_vector.hpp"

namespace tsim {

enum class StdMode { Sample, Population };
enum class Measure { Tsim, Jaccard, Cosine, Euclidean };

std::string_view measure_name(Measure measure) noexcept;
std::string_view std_mode_name(StdMode mode) noexcept;

/// Throws UsageError for names not in {tsim, jaccard, cosine, euclidean}.
Measure parse_measure(std::string_view name);
/// Throws UsageError for names not in {sample, population}.
StdMode parse_std_mode(std::string_view name);

/// Knobs of a similarity run. lambda biases the final mapping
/// (S + 1) / (lambda + 1); with the default lambda = 1 the result lies in
/// [0, 1]. std_mode selects the divisor of the per-item deviation.
struct SimilarityConfig {
    double lambda = 1.0;
    StdMode std_mode = StdMode::Sample;
    Measure measure = Measure::Tsim;
};

/// Throws ValidationError when lambda is not a positive finite number.
void validate(const SimilarityConfig& cfg);

/// Per-item standard deviation of counts across the dataset; the width of
/// the Gaussian weighting.
struct ItemStats {
    std::vector<double> sigma;
    std::size_t transaction_count = 0;
};

/// Symmetric n x n matrix of measure values keyed by transaction ids, in
/// dataset order.
class SimilarityMatrix {
public:
    SimilarityMatrix(std::vector<std::string> ids, Measure measure);

    std::size_t size() const noexcept { return ids_.size(); }
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    Measure measure() const noexcept { return measure_; }

    double at(std::size_t i, std::size_t j) const { return values_.at(i * size() + j); }
    double at(const std::string& tid_i, const std::string& tid_j) const;

    /// Stores a value into both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double value);

    /// Position of a transaction id; throws NotFoundError.
    std::size_t index_of(const std::string& tid) const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<double> values_;
    Measure measure_;
};

/// Gaussian weight e^(-(|delta|/sigma)^2) with the closed-corner
/// conventions: delta = 0 gives weight 1 even at sigma = 0; a nonzero delta
/// at sigma = 0 gives weight 0.
inline double gauss_weight(std::int64_t delta, double sigma) noexcept {
    if (delta == 0) return 1.0;
    if (!(sigma > 0.0)) return 0.0;
    const double gamma =
        static_cast<double>(delta < 0 ? -delta : delta) / sigma;
    return std::exp(-gamma * gamma);
}

/// Numerator contribution of one item: 0.5 * (1 + w) on a match, -w on a
/// mismatch, 0 when the item is absent from both transactions.
inline double alpha(SequenceEntry entry, double sigma) noexcept {
    switch (entry.phi) {
        case Phi::Match:
            return 0.5 * (1.0 + gauss_weight(entry.delta, sigma));
        case Phi::Mismatch:
            return -gauss_weight(entry.delta, sigma);
        case Phi::BothAbsent:
            return 0.0;
    }
    return 0.0;
}

/// Denominator contribution: 1 unless the item is absent from both.
inline double beta(SequenceEntry entry) noexcept {
    return entry.phi == Phi::BothAbsent ? 0.0 : 1.0;
}

/// Standard deviation of every catalog column. Requires n >= 2
/// (ValidationError otherwise); Sample divides by n - 1, Population by n.
ItemStats compute_stats(const Dataset& ds, const SimilarityConfig& cfg);

/// Sum(alpha) / Sum(beta) over the sequence vector, in [-1, 1]. Returns -1
/// through an explicit branch when every item is absent from both
/// transactions (Sum(beta) = 0), never via a 0/0 division.
double s_alpha_beta(const SequenceVector& sv, const ItemStats& stats);

/// The Gaussian transaction similarity (S + 1) / (lambda + 1) for one pair.
/// Throws NotFoundError for unknown ids.
double tsim(const Dataset& ds, const ItemStats& stats, const SimilarityConfig& cfg,
            const std::string& tid_i, const std::string& tid_j);

/// Full pairwise matrix of the configured measure. Unordered pairs are
/// evaluated concurrently (OpenMP when enabled); each cell is computed once
/// and independently, so the output is identical for any thread count.
SimilarityMatrix similarity_matrix(const Dataset& ds, const SimilarityConfig& cfg);

/// Single-threaded reference: assembles the matrix cell by cell through the
/// public scalar operations. Kept for tests and the benchmark; must agree
/// with similarity_matrix on every cell.
SimilarityMatrix similarity_matrix_reference(const Dataset& ds,
                                             const SimilarityConfig& cfg);

}  // namespace tsim
