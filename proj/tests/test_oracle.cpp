#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsa/error.hpp"
#include "qsa/oracle.hpp"

using namespace qsa;

TEST_CASE("brute force on hand-computed instances") {
    auto proteins = Alphabet::protein();
    auto db = database_from_string("ACDA", proteins);

    auto exact = brute_min_distance(db, query_from_string("AC", proteins),
                                    HammingMode::BitLevel);
    CHECK(exact.min_distance == 0);
    CHECK(exact.positions == std::vector<std::size_t>{0});
    CHECK(exact.full_table.values == std::vector<std::uint32_t>{0, 3, 2});

    auto near = brute_min_distance(db, query_from_string("AD", proteins),
                                   HammingMode::BitLevel);
    CHECK(near.min_distance == 1);
    CHECK(near.positions == std::vector<std::size_t>{1});

    auto all = brute_min_distance(database_from_string("AAAA", proteins),
                                  query_from_string("AA", proteins),
                                  HammingMode::BitLevel);
    CHECK(all.min_distance == 0);
    CHECK(all.positions == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("brute force errors") {
    auto db = database_from_string("AC", Alphabet::protein());
    CHECK_THROWS_AS(brute_min_distance(
                        db, query_from_string("ACD", Alphabet::protein()),
                        HammingMode::BitLevel),
                    Error);
    CHECK_THROWS_AS(brute_min_distance(
                        db, query_from_string("AC", Alphabet::dna()),
                        HammingMode::BitLevel),
                    Error);
}

TEST_CASE("brute table agrees with hamming_table everywhere") {
    std::mt19937 gen(17);
    for (int iter = 0; iter < 200; ++iter) {
        const Alphabet& alphabet =
            (iter % 2) ? Alphabet::dna() : Alphabet::protein();
        std::uniform_int_distribution<std::size_t> n_dist(1, 256);
        std::uniform_int_distribution<int> code(
            0, static_cast<int>(alphabet.size()) - 1);
        const std::size_t n = n_dist(gen);
        std::uniform_int_distribution<std::size_t> m_dist(
            1, std::min<std::size_t>(8, n));
        const std::size_t m = m_dist(gen);

        std::string db_text, q_text;
        for (std::size_t i = 0; i < n; ++i)
            db_text.push_back(alphabet.letters()[code(gen)]);
        for (std::size_t i = 0; i < m; ++i)
            q_text.push_back(alphabet.letters()[code(gen)]);

        auto db = database_from_string(db_text, alphabet);
        auto q = query_from_string(q_text, alphabet);
        for (auto mode : {HammingMode::BitLevel, HammingMode::ResidueLevel}) {
            auto brute = brute_min_distance(db, q, mode);
            auto table = hamming_table(db, q, mode);
            REQUIRE(brute.full_table.values == table.values);

            // Argmin set is exactly the positions attaining the minimum.
            std::vector<std::size_t> expected;
            std::uint32_t best = table.values[0];
            for (auto v : table.values) best = std::min(best, v);
            for (std::size_t i = 0; i < table.n_prime(); ++i)
                if (table.values[i] == best) expected.push_back(i);
            REQUIRE(brute.min_distance == best);
            REQUIRE(brute.positions == expected);
        }
    }
}
