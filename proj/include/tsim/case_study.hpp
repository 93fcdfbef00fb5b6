#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tsim/dataset.hpp"
#include "tsim/similarity.hpp"

namespace tsim {

/// The bundled nine-transaction market-basket example (also shipped under
/// data/ in basket and matrix form).
const Dataset& case_study_dataset();

/// The similarity values originally reported for the bundled example, as a
/// full symmetric matrix with unit diagonal. Many of those hand-computed
/// cells disagree with a faithful recomputation; see errata_report.
const SimilarityMatrix& case_study_reported_matrix();

/// The pairs whose originally reported derivation is arithmetically
/// consistent; flagged in the errata report.
const std::vector<std::pair<std::string, std::string>>& case_study_verified_pairs();

/// True when a dataset has the same content as the bundled example: same
/// transaction ids, same item set, same per-transaction counts. Catalog and
/// transaction order do not matter.
bool is_case_study(const Dataset& ds);

/// CSV `pair,reported_value,computed_value,abs_diff,verified` over every
/// unordered pair of the bundled example, comparing a computed matrix
/// against the reported one. Throws ValidationError when the matrix does
/// not cover the example's ids.
std::string errata_report(const SimilarityMatrix& computed);

}  // namespace tsim
