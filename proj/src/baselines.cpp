#include "tsim/baselines.hpp"

#include <cmath>

#include "tsim/errors.hpp"

namespace tsim {

namespace {

void check_same_catalog(const TransactionVector& a, const TransactionVector& b) {
    if (a.counts.size() != b.counts.size()) {
        throw ValidationError("transactions are indexed against different catalogs");
    }
}

}  // namespace

double jaccard(const TransactionVector& a, const TransactionVector& b) {
    check_same_catalog(a, b);
    std::size_t both = 0;
    std::size_t either = 0;
    for (std::size_t k = 0; k < a.presence.size(); ++k) {
        const bool pa = a.presence[k];
        const bool pb = b.presence[k];
        if (pa && pb) ++both;
        if (pa || pb) ++either;
    }
    if (either == 0) return 0.0;
    return static_cast<double>(both) / static_cast<double>(either);
}

double cosine(const TransactionVector& a, const TransactionVector& b) {
    check_same_catalog(a, b);
    double dot = 0.0;
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t k = 0; k < a.counts.size(); ++k) {
        const double xa = static_cast<double>(a.counts[k]);
        const double xb = static_cast<double>(b.counts[k]);
        dot += xa * xb;
        na += xa * xa;
        nb += xb * xb;
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

double euclidean_sim(const TransactionVector& a, const TransactionVector& b) {
    check_same_catalog(a, b);
    double sq = 0.0;
    for (std::size_t k = 0; k < a.counts.size(); ++k) {
        const double d = static_cast<double>(a.counts[k]) -
                         static_cast<double>(b.counts[k]);
        sq += d * d;
    }
    return 1.0 / (1.0 + std::sqrt(sq));
}

}  // namespace tsim
