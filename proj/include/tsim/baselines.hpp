#pragma once

#include "tsim/dataset.hpp"

namespace tsim {

/// |presence_i AND presence_j| / |presence_i OR presence_j|.
/// 0 by convention when both transactions are empty.
double jaccard(const TransactionVector& a, const TransactionVector& b);

/// Cosine of the count vectors; 0 by convention when either is all-zero.
double cosine(const TransactionVector& a, const TransactionVector& b);

/// 1 / (1 + d) with d the Euclidean distance of the count vectors, mapping
/// distance into (0, 1].
double euclidean_sim(const TransactionVector& a, const TransactionVector& b);

}  // namespace tsim
