#include "qsa/bbht.hpp"

#include <algorithm>
#include <cmath>

#include "qsa/error.hpp"

namespace qsa {

BbhtOutcome bbht_search(const HammingTable& table, const MarkPredicate& mark,
                        const BbhtParams& params) {
    if (table.n_prime() == 0)
        throw Error(ErrorCode::EmptyTable, "Hamming table must be nonempty");
    if (!(params.lambda > 1.0 && params.lambda < 4.0 / 3.0))
        throw Error(ErrorCode::InvalidArgument,
                    "lambda must be in (1, 4/3)");
    if (!(params.timeout_factor > 0.0))
        throw Error(ErrorCode::InvalidArgument,
                    "timeout_factor must be positive");

    const double sqrt_np = std::sqrt(static_cast<double>(table.n_prime()));
    const auto budget = static_cast<std::uint64_t>(
        std::ceil(params.timeout_factor * sqrt_np));
    // When n_prime is tiny j can stay 0 forever and oracle calls never
    // accrue; a generous trial cap keeps the no-solution case finite.
    const std::uint64_t trial_cap = 64 * (budget + 1);

    BbhtOutcome outcome;
    SampleRng rng(params.seed);
    double bound = 1.0;
    while (true) {
        const auto j_max =
            static_cast<std::uint64_t>(std::max(1.0, std::ceil(bound)));
        // Clamp to the remaining budget so a run never spends more than
        // ceil(timeout_factor * sqrt(n')) oracle calls in total.
        const std::uint64_t j =
            std::min(rng.uniform_below(j_max), budget - outcome.oracle_calls);

        SearchState state(table);
        state.evolve(mark, j);
        outcome.oracle_calls += state.oracle_calls();
        const std::size_t measured = state.measure(rng);
        const bool success = mark.marks(table, measured);
        outcome.trials.push_back({j, measured, success});
        if (success) {
            outcome.found = BbhtFound{measured, table.values[measured]};
            return outcome;
        }
        bound = std::min(params.lambda * bound, sqrt_np);
        if (outcome.oracle_calls >= budget ||
            outcome.trials.size() >= trial_cap)
            return outcome;
    }
}

} // namespace qsa
