#include "tsim/sequence_vector.hpp"

namespace tsim {

SequenceVector sequence_vector(const Dataset& ds, const std::string& tid_i,
                               const std::string& tid_j) {
    const TransactionVector& a = ds.vector_of(tid_i);
    const TransactionVector& b = ds.vector_of(tid_j);

    SequenceVector sv;
    sv.tid_i = tid_i;
    sv.tid_j = tid_j;
    const std::size_t m = ds.item_count();
    sv.entries.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        sv.entries.push_back(make_entry(a.counts[k], b.counts[k], a.presence[k],
                                        b.presence[k]));
    }
    return sv;
}

std::string to_string(Phi value) {
    switch (value) {
        case Phi::Match: return "1";
        case Phi::Mismatch: return "0";
        case Phi::BothAbsent: return "U";
    }
    return "?";
}

std::string to_string(const SequenceVector& sv) {
    std::string out = "⟨";
    for (std::size_t k = 0; k < sv.entries.size(); ++k) {
        if (k > 0) out += ",";
        out += "(" + std::to_string(sv.entries[k].delta) + "," +
               to_string(sv.entries[k].phi) + ")";
    }
    out += "⟩";
    return out;
}

}  // namespace tsim
