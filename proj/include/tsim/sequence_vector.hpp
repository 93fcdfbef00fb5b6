#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsim/dataset.hpp"

namespace tsim {

/// Three-valued per-item agreement between two transactions:
/// Match (both present), Mismatch (exactly one present), BothAbsent.
enum class Phi : std::uint8_t { Match, Mismatch, BothAbsent };

/// One (delta, phi) pair of a sequence vector. delta is the signed count
/// difference; only |delta| ever reaches the similarity computation.
struct SequenceEntry {
    std::int64_t delta = 0;
    Phi phi = Phi::BothAbsent;
};

/// Item-by-item comparison of two transactions, in catalog order.
struct SequenceVector {
    std::string tid_i;
    std::string tid_j;
    std::vector<SequenceEntry> entries;
};

constexpr Phi phi(bool present_i, bool present_j) noexcept {
    if (present_i && present_j) return Phi::Match;
    if (present_i || present_j) return Phi::Mismatch;
    return Phi::BothAbsent;
}

constexpr std::int64_t delta(std::int64_t count_i, std::int64_t count_j) noexcept {
    return count_i - count_j;
}

/// Entry for one item: on a match delta is the signed count difference, on a
/// mismatch it is the one nonzero count, and 0 when both are absent.
constexpr SequenceEntry make_entry(std::int64_t count_i, std::int64_t count_j,
                                   bool present_i, bool present_j) noexcept {
    const Phi agreement = phi(present_i, present_j);
    switch (agreement) {
        case Phi::Match: return {delta(count_i, count_j), agreement};
        case Phi::Mismatch: return {present_i ? count_i : count_j, agreement};
        case Phi::BothAbsent: break;
    }
    return {0, agreement};
}

/// Builds the sequence vector for a pair of transactions.
/// Throws NotFoundError for unknown ids.
SequenceVector sequence_vector(const Dataset& ds, const std::string& tid_i,
                               const std::string& tid_j);

/// "1", "0" or "U".
std::string to_string(Phi value);

/// Debug form with one (delta,phi) pair per item.
std::string to_string(const SequenceVector& sv);

}  // namespace tsim
