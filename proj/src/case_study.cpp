#include "tsim/case_study.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <set>

#include "tsim/errors.hpp"

namespace tsim {

namespace {

constexpr std::array<const char*, 9> kTids = {"T1", "T2", "T3", "T4", "T5",
                                              "T6", "T7", "T8", "T9"};
constexpr std::array<const char*, 5> kItems = {"bread", "butter", "jam", "coffee",
                                               "milk"};

// Presence rows, one per transaction, in kItems order.
constexpr std::array<std::array<int, 5>, 9> kRows = {{
    {1, 1, 1, 0, 0},  // T1
    {0, 0, 1, 1, 1},  // T2
    {0, 1, 1, 1, 1},  // T3
    {1, 1, 1, 0, 1},  // T4
    {0, 0, 1, 1, 0},  // T5
    {1, 1, 0, 0, 1},  // T6
    {1, 1, 0, 1, 0},  // T7
    {0, 1, 0, 1, 0},  // T8
    {0, 1, 1, 0, 1},  // T9
}};

// Upper-triangular similarity values as originally reported, row by row:
// (T1,T2)..(T1,T9), (T2,T3)..(T2,T9), ...
constexpr std::array<double, 36> kReportedUpper = {
    0.59122, 0.6918, 0.8715, 0.6158, 0.7442, 0.7442, 0.6158, 0.7431,  // T1
    0.8651, 0.6894, 0.6545, 0.5948, 0.5948, 0.6152, 0.7402,           // T2
    0.7894, 0.7402, 0.6894, 0.6894, 0.7402, 0.8652,                   // T3
    0.5894, 0.8652, 0.6894, 0.5894, 0.8652,                           // T4
    0.4949, 0.6152, 0.6581, 0.6152,                                   // T5
    0.7390, 0.6140, 0.7402,                                           // T6
    0.8233, 0.5894,                                                   // T7
    0.6152,                                                           // T8
};

std::string format_value(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

}  // namespace

const Dataset& case_study_dataset() {
    static const Dataset dataset = [] {
        std::vector<BasketRecord> records;
        records.reserve(kTids.size());
        for (std::size_t i = 0; i < kTids.size(); ++i) {
            BasketRecord record;
            record.tid = kTids[i];
            for (std::size_t k = 0; k < kItems.size(); ++k) {
                if (kRows[i][k] == 1) record.items.push_back({kItems[k], 1});
            }
            records.push_back(std::move(record));
        }
        return build_dataset(records);
    }();
    return dataset;
}

const SimilarityMatrix& case_study_reported_matrix() {
    static const SimilarityMatrix matrix = [] {
        SimilarityMatrix m(std::vector<std::string>(kTids.begin(), kTids.end()),
                           Measure::Tsim);
        std::size_t next = 0;
        for (std::size_t i = 0; i < kTids.size(); ++i) {
            m.set(i, i, 1.0);
            for (std::size_t j = i + 1; j < kTids.size(); ++j) {
                m.set(i, j, kReportedUpper[next++]);
            }
        }
        return m;
    }();
    return matrix;
}

const std::vector<std::pair<std::string, std::string>>& case_study_verified_pairs() {
    static const std::vector<std::pair<std::string, std::string>> pairs = {
        {"T1", "T2"}, {"T1", "T3"}, {"T1", "T4"},
        {"T1", "T6"}, {"T1", "T7"}, {"T1", "T9"},
    };
    return pairs;
}

bool is_case_study(const Dataset& ds) {
    const Dataset& ref = case_study_dataset();
    if (ds.size() != ref.size() || ds.item_count() != ref.item_count()) {
        return false;
    }
    const std::set<std::string> items(ds.catalog().items().begin(),
                                      ds.catalog().items().end());
    const std::set<std::string> ref_items(ref.catalog().items().begin(),
                                          ref.catalog().items().end());
    if (items != ref_items) return false;

    for (const TransactionVector& expected : ref.transactions()) {
        if (!ds.contains(expected.tid)) return false;
        const TransactionVector& actual = ds.vector_of(expected.tid);
        for (std::size_t k = 0; k < ref.item_count(); ++k) {
            const std::string& item = ref.catalog().item(k);
            if (actual.counts[ds.catalog().index_of(item)] != expected.counts[k]) {
                return false;
            }
        }
    }
    return true;
}

std::string errata_report(const SimilarityMatrix& computed) {
    const SimilarityMatrix& reported = case_study_reported_matrix();
    for (const std::string& tid : reported.ids()) {
        try {
            computed.index_of(tid);
        } catch (const NotFoundError&) {
            throw ValidationError("computed matrix is missing transaction " + tid);
        }
    }

    std::set<std::pair<std::string, std::string>> verified(
        case_study_verified_pairs().begin(), case_study_verified_pairs().end());

    std::string out = "pair,reported_value,computed_value,abs_diff,verified\n";
    const auto& ids = reported.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            const double reported_value = reported.at(i, j);
            const double computed_value = computed.at(ids[i], ids[j]);
            const double diff = std::abs(reported_value - computed_value);
            out += ids[i] + "-" + ids[j];
            out += ",";
            out += format_value(reported_value);
            out += ",";
            out += format_value(computed_value);
            out += ",";
            out += format_value(diff);
            out += ",";
            out += verified.count({ids[i], ids[j]}) ? "1" : "0";
            out += "\n";
        }
    }
    return out;
}

}  // namespace tsim
