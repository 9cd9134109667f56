#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qsa/bbht.hpp"
#include "qsa/error.hpp"
#include "qsa/rng.hpp"

using namespace qsa;

namespace {

HammingTable table_with_targets(std::size_t n_prime,
                                const std::vector<std::size_t>& targets) {
    std::vector<std::uint32_t> values(n_prime, 1);
    for (auto t : targets) values[t] = 0;
    return HammingTable::from_values(values, HammingMode::BitLevel, 1, 5);
}

double mean_oracle_calls(const HammingTable& table, const MarkPredicate& mark,
                         int runs, std::uint64_t seed_base,
                         int* successes_out = nullptr) {
    double total = 0.0;
    int successes = 0;
    for (int i = 0; i < runs; ++i) {
        BbhtParams params;
        params.seed = derive_seed(seed_base, static_cast<std::uint64_t>(i), 0);
        auto outcome = bbht_search(table, mark, params);
        total += static_cast<double>(outcome.oracle_calls);
        if (outcome.found) ++successes;
    }
    if (successes_out) *successes_out = successes;
    return total / runs;
}

} // namespace

TEST_CASE("all positions marked succeeds without any oracle call") {
    auto table = table_with_targets(16, {});
    // Every window at the same distance 1.
    auto outcome = bbht_search(table, MarkPredicate{1, {}}, BbhtParams{});
    REQUIRE(outcome.found.has_value());
    CHECK(outcome.oracle_calls == 0);
    CHECK(outcome.trials.size() == 1);
    CHECK(outcome.trials[0].iterations_chosen == 0);
}

TEST_CASE("no solution fails only after the oracle budget is spent") {
    auto table = table_with_targets(64, {});
    BbhtParams params;
    params.seed = 9;
    auto outcome = bbht_search(table, MarkPredicate{0, {}}, params);
    CHECK(!outcome.found.has_value());
    const auto budget =
        static_cast<std::uint64_t>(std::ceil(params.timeout_factor * 8.0));
    CHECK(outcome.oracle_calls >= budget);
    for (const auto& trial : outcome.trials) CHECK(!trial.success);
}

TEST_CASE("returned positions always satisfy the mark predicate") {
    auto table = table_with_targets(128, {3, 77});
    MarkPredicate mark{0, {3}}; // 77 is the only admissible target
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        BbhtParams params;
        params.seed = seed;
        auto outcome = bbht_search(table, mark, params);
        if (outcome.found) {
            CHECK(outcome.found->position == 77);
            CHECK(outcome.found->distance == 0);
        }
    }
}

TEST_CASE("single-target success rate and cost band at n_prime = 256") {
    auto table = table_with_targets(256, {123});
    int successes = 0;
    const double mean =
        mean_oracle_calls(table, MarkPredicate{0, {}}, 1000, 2024, &successes);
    CHECK(static_cast<double>(successes) / 1000 >= 0.95);
    CHECK(mean >= std::sin(std::numbers::pi / 8.0) * 16.0);
    CHECK(mean <= 4.5 * 16.0);
}

TEST_CASE("success rate stays high across sizes") {
    for (std::size_t n_prime : {16, 64, 1024, 4096}) {
        auto table = table_with_targets(n_prime, {n_prime / 2});
        int successes = 0;
        mean_oracle_calls(table, MarkPredicate{0, {}}, 200,
                          splitmix64(n_prime), &successes);
        CHECK(static_cast<double>(successes) / 200 >= 0.9);
    }
}

TEST_CASE("doubling the solution count cuts the mean cost by about sqrt(2)") {
    auto one = table_with_targets(512, {10});
    auto two = table_with_targets(512, {10, 300});
    auto four = table_with_targets(512, {10, 300, 100, 499});
    const double m1 = mean_oracle_calls(one, MarkPredicate{0, {}}, 1500, 5);
    const double m2 = mean_oracle_calls(two, MarkPredicate{0, {}}, 1500, 6);
    const double m4 = mean_oracle_calls(four, MarkPredicate{0, {}}, 1500, 7);
    CHECK(m1 / m2 >= 1.2);
    CHECK(m1 / m2 <= 1.7);
    CHECK(m2 / m4 >= 1.2);
    CHECK(m2 / m4 <= 1.7);
}

TEST_CASE("identical parameters replay bit-for-bit") {
    auto table = table_with_targets(100, {42});
    BbhtParams params;
    params.seed = 31337;
    auto a = bbht_search(table, MarkPredicate{0, {}}, params);
    auto b = bbht_search(table, MarkPredicate{0, {}}, params);
    REQUIRE(a.trials.size() == b.trials.size());
    CHECK(a.oracle_calls == b.oracle_calls);
    CHECK(a.found.has_value() == b.found.has_value());
    if (a.found) {
        CHECK(a.found->position == b.found->position);
        CHECK(a.found->distance == b.found->distance);
    }
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        CHECK(a.trials[i].iterations_chosen == b.trials[i].iterations_chosen);
        CHECK(a.trials[i].measured_position == b.trials[i].measured_position);
        CHECK(a.trials[i].success == b.trials[i].success);
    }
}

TEST_CASE("parameter validation") {
    auto table = table_with_targets(8, {1});
    BbhtParams bad_lambda;
    bad_lambda.lambda = 2.0;
    CHECK_THROWS_AS(bbht_search(table, MarkPredicate{0, {}}, bad_lambda),
                    Error);
    bad_lambda.lambda = 1.0;
    CHECK_THROWS_AS(bbht_search(table, MarkPredicate{0, {}}, bad_lambda),
                    Error);
    BbhtParams bad_timeout;
    bad_timeout.timeout_factor = 0.0;
    CHECK_THROWS_AS(bbht_search(table, MarkPredicate{0, {}}, bad_timeout),
                    Error);
}

TEST_CASE("degenerate single-window table terminates") {
    auto table = table_with_targets(1, {});
    auto hit = bbht_search(table, MarkPredicate{1, {}}, BbhtParams{});
    REQUIRE(hit.found.has_value());
    CHECK(hit.found->position == 0);

    auto miss = bbht_search(table, MarkPredicate{0, {}}, BbhtParams{});
    CHECK(!miss.found.has_value());
}
