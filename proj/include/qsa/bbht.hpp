#ifndef QSA_BBHT_HPP
#define QSA_BBHT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qsa/qsim.hpp"

namespace qsa {

struct BbhtParams {
    /// Growth factor for the iteration bound M; 1 < lambda < 4/3.
    double lambda = 6.0 / 5.0;
    /// A run fails once cumulative oracle calls exceed
    /// ceil(timeout_factor * sqrt(n_prime)).
    double timeout_factor = 4.0;
    std::uint64_t seed = 0;
};

struct BbhtTrial {
    std::uint64_t iterations_chosen; // j
    std::size_t measured_position;
    bool success;
};

struct BbhtFound {
    std::size_t position;
    std::uint32_t distance;
};

struct BbhtOutcome {
    std::optional<BbhtFound> found;
    std::uint64_t oracle_calls = 0;
    std::vector<BbhtTrial> trials;
};

/// Search with an unknown number of marked positions: draw j uniformly
/// from [0, ceil(M)), evolve a fresh uniform state j steps, measure,
/// and verify classically. M starts at 1, grows by lambda, and is
/// capped at sqrt(n_prime). Failure to find within the oracle-call
/// budget is a value, not an error.
BbhtOutcome bbht_search(const HammingTable& table, const MarkPredicate& mark,
                        const BbhtParams& params);

} // namespace qsa

#endif
