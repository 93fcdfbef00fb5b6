#pragma once

#include <string>
#include <string_view>

#include "tsim/clustering.hpp"
#include "tsim/dataset.hpp"
#include "tsim/similarity.hpp"

namespace tsim {

/// Long-form basket CSV: header `transaction_id,item[,count]`, one
/// (tid, item) pair per row. A missing count column means count 1. Rows are
/// grouped by tid in first-appearance order and the catalog is the sorted
/// item union. Throws ParseError with a 1-based line number.
Dataset parse_basket_file(std::string_view text);

/// Transaction-item matrix CSV: first row names the items (first cell is a
/// corner label, usually empty), each following row is `tid,c1,..,cm` with
/// non-negative integer cells. Catalog order is taken from the header as-is.
/// Throws ParseError on ragged rows or non-integer cells.
Dataset parse_matrix_file(std::string_view text);

/// Full symmetric matrix as CSV: header `,id1,..,idn`, one row per id,
/// every value printed with exactly 6 decimal places, dataset order.
std::string write_matrix(const SimilarityMatrix& matrix);

/// Parses a CSV produced by write_matrix back into a matrix. The file
/// carries no measure name, so the caller supplies it.
SimilarityMatrix read_matrix(std::string_view text, Measure measure);

/// Per-item CSV `item,sigma,mismatch_penalty`; the penalty column is the
/// Gaussian weight of a single-unit deviation, e^(-(1/sigma)^2).
std::string write_stats(const Dataset& ds, const ItemStats& stats);

/// Cluster document (JSON): measure, threshold, clusters as lists of ids.
std::string write_clusters(const Clustering& clustering);

}  // namespace tsim
