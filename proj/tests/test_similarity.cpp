#include <doctest.h>

#include <cmath>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tsim/errors.hpp"
#include "tsim/io.hpp"
#include "tsim/similarity.hpp"

#include "oracle.hpp"

using namespace tsim;

namespace {

Dataset case_dataset() {
    std::vector<BasketRecord> records;
    for (std::size_t i = 0; i < oracle::kTransactions; ++i) {
        BasketRecord record;
        record.tid = oracle::kTids[i];
        for (std::size_t k = 0; k < oracle::kItems; ++k) {
            if (oracle::kRows[i][k] >= 1) {
                record.items.push_back({oracle::kItemNames[k], 1});
            }
        }
        records.push_back(std::move(record));
    }
    return build_dataset(records);
}

Dataset random_dataset(std::mt19937& rng, bool counted) {
    std::uniform_int_distribution<int> n_tx(2, 10);
    std::uniform_int_distribution<int> n_items(1, 6);
    std::bernoulli_distribution present(0.5);
    std::uniform_int_distribution<std::int64_t> count(1, 5);

    while (true) {
        const int n = n_tx(rng);
        const int m = n_items(rng);
        std::vector<BasketRecord> records;
        bool any = false;
        for (int t = 0; t < n; ++t) {
            BasketRecord record;
            record.tid = "T" + std::to_string(t);
            for (int k = 0; k < m; ++k) {
                if (present(rng)) {
                    record.items.push_back(
                        {"I" + std::to_string(k), counted ? count(rng) : 1});
                    any = true;
                }
            }
            records.push_back(std::move(record));
        }
        if (any) return build_dataset(records);
    }
}

}  // namespace

TEST_CASE("per-item deviations match a naive two-pass oracle") {
    const Dataset ds = case_dataset();

    for (StdMode mode : {StdMode::Sample, StdMode::Population}) {
        SimilarityConfig cfg;
        cfg.std_mode = mode;
        const ItemStats stats = compute_stats(ds, cfg);
        REQUIRE(stats.sigma.size() == ds.item_count());
        CHECK(stats.transaction_count == ds.size());

        for (std::size_t k = 0; k < ds.item_count(); ++k) {
            std::vector<double> column;
            for (const auto& tx : ds.transactions()) {
                column.push_back(static_cast<double>(tx.counts[k]));
            }
            const double expected = oracle::naive_std(column, mode == StdMode::Sample);
            CHECK(std::abs(stats.sigma[k] - expected) <= 1e-12);
        }
    }
}

TEST_CASE("case-study deviations and mismatch penalties") {
    const Dataset ds = case_dataset();
    const ItemStats stats = compute_stats(ds, SimilarityConfig{});

    const auto sigma_of = [&](const char* item) {
        return stats.sigma[ds.catalog().index_of(item)];
    };
    CHECK(sigma_of("jam") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sigma_of("butter") == doctest::Approx(0.44096).epsilon(1e-4));
    CHECK(gauss_weight(1, sigma_of("jam")) == doctest::Approx(0.01832).epsilon(1e-3));
    CHECK(gauss_weight(1, sigma_of("butter")) ==
          doctest::Approx(0.00584).epsilon(1e-2));
}

TEST_CASE("constant column has zero deviation") {
    const Dataset ds = build_dataset(
        {{"T1", {{"a", 2}, {"b", 1}}}, {"T2", {{"a", 2}}}, {"T3", {{"a", 2}}}});
    const ItemStats stats = compute_stats(ds, SimilarityConfig{});
    CHECK(stats.sigma[ds.catalog().index_of("a")] == 0.0);
}

TEST_CASE("stats require at least two transactions") {
    const Dataset ds = build_dataset({{"T1", {{"a", 1}}}});
    CHECK_THROWS_AS(compute_stats(ds, SimilarityConfig{}), ValidationError);
}

TEST_CASE("alpha cases") {
    SUBCASE("match with zero delta is exactly 1") {
        CHECK(alpha({0, Phi::Match}, 0.7) == 1.0);
        CHECK(alpha({0, Phi::Match}, 0.0) == 1.0);  // sigma 0 with delta 0
    }
    SUBCASE("mismatch is the negative gaussian weight") {
        const double sigma_bread = 0.5270462767;
        CHECK(alpha({1, Phi::Mismatch}, sigma_bread) ==
              doctest::Approx(-0.02732).epsilon(1e-3));
    }
    SUBCASE("both absent contributes nothing") {
        CHECK(alpha({0, Phi::BothAbsent}, 0.3) == 0.0);
    }
    SUBCASE("nonzero delta at sigma 0 zeroes the weight") {
        CHECK(alpha({3, Phi::Mismatch}, 0.0) == 0.0);
        CHECK(alpha({3, Phi::Match}, 0.0) == 0.5);
    }
    SUBCASE("sign of delta never matters") {
        CHECK(alpha({2, Phi::Match}, 0.9) == alpha({-2, Phi::Match}, 0.9));
        CHECK(alpha({2, Phi::Mismatch}, 0.9) == alpha({-2, Phi::Mismatch}, 0.9));
    }
    SUBCASE("counted match degrades from 1 toward 0.5 as counts diverge") {
        CHECK(alpha({1, Phi::Match}, 0.9) < 1.0);
        CHECK(alpha({2, Phi::Match}, 0.9) < alpha({1, Phi::Match}, 0.9));
        CHECK(alpha({3, Phi::Match}, 0.9) > 0.5);
        CHECK(alpha({50, Phi::Match}, 0.9) >= 0.5);
    }
}

TEST_CASE("beta cases") {
    CHECK(beta({0, Phi::Match}) == 1.0);
    CHECK(beta({1, Phi::Mismatch}) == 1.0);
    CHECK(beta({0, Phi::BothAbsent}) == 0.0);
}

TEST_CASE("s_alpha_beta") {
    const Dataset ds = case_dataset();
    const ItemStats stats = compute_stats(ds, SimilarityConfig{});

    SUBCASE("T1/T2 ratio") {
        const double s = s_alpha_beta(sequence_vector(ds, "T1", "T2"), stats);
        CHECK(s == doctest::Approx(0.18244).epsilon(1e-4));
    }
    SUBCASE("identical nonempty transactions give exactly 1") {
        const Dataset two = build_dataset(
            {{"A", {{"x", 1}, {"y", 1}}}, {"B", {{"x", 1}, {"y", 1}}}, {"C", {{"x", 1}}}});
        const ItemStats st = compute_stats(two, SimilarityConfig{});
        CHECK(s_alpha_beta(sequence_vector(two, "A", "B"), st) == 1.0);
    }
    SUBCASE("two all-absent transactions give exactly -1") {
        const Dataset ds2 = build_dataset({{"A", {{"x", 1}}}, {"B", {}}, {"C", {}}});
        const ItemStats st = compute_stats(ds2, SimilarityConfig{});
        CHECK(s_alpha_beta(sequence_vector(ds2, "B", "C"), st) == -1.0);
    }
    SUBCASE("catalog size mismatch is rejected") {
        ItemStats wrong;
        wrong.sigma = {1.0, 1.0};
        wrong.transaction_count = 9;
        CHECK_THROWS_AS(s_alpha_beta(sequence_vector(ds, "T1", "T2"), wrong),
                        ValidationError);
    }
}

TEST_CASE("tsim golden pairs") {
    const Dataset ds = case_dataset();
    const SimilarityConfig cfg;
    const ItemStats stats = compute_stats(ds, cfg);

    CHECK(std::abs(tsim::tsim(ds, stats, cfg, "T1", "T2") - 0.59122) <= 2e-4);
    CHECK(std::abs(tsim::tsim(ds, stats, cfg, "T1", "T4") - 0.871585) <= 2e-4);
    CHECK_THROWS_AS(tsim::tsim(ds, stats, cfg, "T1", "nope"), NotFoundError);
}

TEST_CASE("tsim boundary values") {
    SUBCASE("self pair of a nonempty transaction is exactly 1") {
        const Dataset ds = case_dataset();
        const SimilarityConfig cfg;
        const ItemStats stats = compute_stats(ds, cfg);
        for (const auto& tx : ds.transactions()) {
            CHECK(tsim::tsim(ds, stats, cfg, tx.tid, tx.tid) == 1.0);
        }
    }
    SUBCASE("pair of all-absent transactions is exactly 0") {
        const Dataset ds = build_dataset({{"A", {{"x", 1}}}, {"B", {}}, {"C", {}}});
        const SimilarityConfig cfg;
        const ItemStats stats = compute_stats(ds, cfg);
        CHECK(tsim::tsim(ds, stats, cfg, "B", "C") == 0.0);
    }
}

TEST_CASE("lambda rescales the final mapping") {
    const Dataset ds = case_dataset();
    SimilarityConfig cfg;
    const ItemStats stats = compute_stats(ds, cfg);
    const double s = s_alpha_beta(sequence_vector(ds, "T1", "T2"), stats);

    cfg.lambda = 3.0;
    CHECK(tsim::tsim(ds, stats, cfg, "T1", "T2") == doctest::Approx((s + 1.0) / 4.0));

    cfg.lambda = 0.0;
    CHECK_THROWS_AS(validate(cfg), ValidationError);
    cfg.lambda = -1.0;
    CHECK_THROWS_AS(validate(cfg), ValidationError);
}

TEST_CASE("average-case anchor with equal deviations") {
    // Complementary presence over four items; every entry is a mismatch, so
    // the result collapses to 0.5 * (1 - e^(-gamma^2)).
    ItemCatalog catalog = ItemCatalog::from_items({"a", "b", "c", "d"});
    std::vector<TransactionVector> txs = {
        {"T1", {1, 0, 1, 0}, {true, false, true, false}},
        {"T2", {0, 1, 0, 1}, {false, true, false, true}},
    };
    const Dataset ds(catalog, txs, DatasetMode::Binary);
    const SimilarityConfig cfg;

    for (double gamma : {0.5, 1.0, 2.0}) {
        ItemStats stats;
        stats.sigma.assign(4, 1.0 / gamma);
        stats.transaction_count = 2;
        const double expected = 0.5 * (1.0 - std::exp(-gamma * gamma));
        CHECK(std::abs(tsim::tsim(ds, stats, cfg, "T1", "T2") - expected) <=
              1e-12);
    }

    // gamma -> 0 limit: vanishing deviation-to-spread ratio drives the
    // similarity of fully complementary transactions to 0.
    ItemStats wide;
    wide.sigma.assign(4, 1e300);
    wide.transaction_count = 2;
    CHECK(std::abs(tsim::tsim(ds, wide, cfg, "T1", "T2")) <= 1e-12);
}

TEST_CASE("all-absent transaction has a zero diagonal cell") {
    const Dataset ds = build_dataset({{"A", {{"x", 1}}}, {"B", {}}});
    const SimilarityMatrix matrix = similarity_matrix(ds, SimilarityConfig{});
    CHECK(matrix.at("A", "A") == 1.0);
    CHECK(matrix.at("B", "B") == 0.0);
}

TEST_CASE("matrix engine matches the scalar path cell by cell") {
    std::mt19937 rng(101);
    for (int iter = 0; iter < 100; ++iter) {
        const Dataset ds = random_dataset(rng, iter % 2 == 1);
        const SimilarityConfig cfg;
        const ItemStats stats = compute_stats(ds, cfg);
        const SimilarityMatrix matrix = similarity_matrix(ds, cfg);

        for (std::size_t i = 0; i < ds.size(); ++i) {
            for (std::size_t j = 0; j < ds.size(); ++j) {
                const double scalar = tsim::tsim(ds, stats, cfg,
                                           ds.transactions()[i].tid,
                                           ds.transactions()[j].tid);
                CHECK(matrix.at(i, j) == scalar);
            }
        }
    }
}

TEST_CASE("parallel kernel agrees with the serial reference for every measure") {
    std::mt19937 rng(202);
    for (int iter = 0; iter < 20; ++iter) {
        const Dataset ds = random_dataset(rng, iter % 2 == 1);
        for (Measure measure :
             {Measure::Tsim, Measure::Jaccard, Measure::Cosine, Measure::Euclidean}) {
            SimilarityConfig cfg;
            cfg.measure = measure;
            const SimilarityMatrix a = similarity_matrix(ds, cfg);
            const SimilarityMatrix b = similarity_matrix_reference(ds, cfg);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                for (std::size_t j = 0; j < a.size(); ++j) {
                    CHECK(a.at(i, j) == b.at(i, j));
                }
            }
        }
    }
}

#ifdef _OPENMP
TEST_CASE("matrix output is identical for any thread count") {
    std::mt19937 rng(303);
    const Dataset ds = random_dataset(rng, false);
    const SimilarityConfig cfg;

    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const SimilarityMatrix one = similarity_matrix(ds, cfg);
    omp_set_num_threads(4);
    const SimilarityMatrix four = similarity_matrix(ds, cfg);
    omp_set_num_threads(saved);

    for (std::size_t i = 0; i < one.size(); ++i) {
        for (std::size_t j = 0; j < one.size(); ++j) {
            CHECK(one.at(i, j) == four.at(i, j));
        }
    }
}
#endif

TEST_CASE("matrix invariants on the bundled example") {
    const Dataset ds = case_dataset();
    const SimilarityMatrix matrix = similarity_matrix(ds, SimilarityConfig{});

    CHECK(std::abs(matrix.at("T1", "T2") - 0.59122) <= 2e-4);
    CHECK(std::abs(matrix.at("T1", "T6") - 0.7443) <= 2e-4);
    CHECK(std::abs(matrix.at("T1", "T7") - 0.7443) <= 2e-4);

    for (std::size_t i = 0; i < matrix.size(); ++i) {
        CHECK(matrix.at(i, i) == 1.0);
        for (std::size_t j = 0; j < matrix.size(); ++j) {
            CHECK(matrix.at(i, j) == matrix.at(j, i));
            CHECK(matrix.at(i, j) >= 0.0);
            CHECK(matrix.at(i, j) <= 1.0);
        }
    }
}

TEST_CASE("two identical transactions give off-diagonal 1") {
    const Dataset ds = build_dataset(
        {{"A", {{"x", 1}, {"y", 1}}}, {"B", {{"x", 1}, {"y", 1}}}});
    const SimilarityMatrix matrix = similarity_matrix(ds, SimilarityConfig{});
    CHECK(matrix.at("A", "B") == 1.0);
}

TEST_CASE("matrix needs at least two transactions") {
    const Dataset ds = build_dataset({{"T1", {{"a", 1}}}});
    CHECK_THROWS_AS(similarity_matrix(ds, SimilarityConfig{}), ValidationError);
}

TEST_CASE("turning a mismatch into a match strictly increases the ratio") {
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> m_dist(1, 8);
    std::uniform_real_distribution<double> sigma_dist(0.0, 2.0);
    std::uniform_int_distribution<int> phi_dist(0, 2);
    std::uniform_int_distribution<std::int64_t> count(1, 4);

    int exercised = 0;
    for (int iter = 0; iter < 500; ++iter) {
        const int m = m_dist(rng);
        SequenceVector sv;
        sv.tid_i = "A";
        sv.tid_j = "B";
        ItemStats stats;
        stats.transaction_count = 2;
        int mismatch_at = -1;
        for (int k = 0; k < m; ++k) {
            stats.sigma.push_back(sigma_dist(rng));
            switch (phi_dist(rng)) {
                case 0:
                    sv.entries.push_back({0, Phi::Match});
                    break;
                case 1:
                    sv.entries.push_back({count(rng), Phi::Mismatch});
                    mismatch_at = k;
                    break;
                default:
                    sv.entries.push_back({0, Phi::BothAbsent});
                    break;
            }
        }
        if (mismatch_at < 0) continue;
        ++exercised;

        const double before = s_alpha_beta(sv, stats);
        sv.entries[mismatch_at] = {0, Phi::Match};
        const double after = s_alpha_beta(sv, stats);
        CHECK(after > before);
    }
    CHECK(exercised > 100);
}
