#include "qsa/align.hpp"

#include <cmath>

#include "qsa/error.hpp"
#include "qsa/rng.hpp"

namespace qsa {

namespace {

// Stream tag separating align-level seeds from enumerate-loop seeds.
constexpr std::uint64_t kEnumerateStream = 0x656e756d65726174ULL;

MarkPredicate make_mark(std::uint32_t distance,
                        const std::set<std::size_t>& excluded) {
    MarkPredicate mark;
    mark.target_distance = distance;
    mark.excluded.insert(excluded.begin(), excluded.end());
    return mark;
}

void validate(const HammingTable& table, const AlignParams& params) {
    if (table.n_prime() == 0)
        throw Error(ErrorCode::EmptyTable, "Hamming table must be nonempty");
    if (params.repeats < 1)
        throw Error(ErrorCode::InvalidArgument, "repeats must be >= 1");
    if (params.n_max > table.max_distance())
        throw Error(ErrorCode::InvalidArgument,
                    "n_max " + std::to_string(params.n_max) +
                        " exceeds maximum possible distance " +
                        std::to_string(table.max_distance()));
}

} // namespace

std::uint32_t default_n_max(HammingMode mode, std::size_t m,
                            int bits_per_residue) {
    const auto third = static_cast<std::uint32_t>((m + 2) / 3);
    return mode == HammingMode::BitLevel
               ? third * static_cast<std::uint32_t>(bits_per_residue)
               : third;
}

AlignmentResult align_optimal(const HammingTable& table,
                              const AlignParams& params) {
    validate(table, params);

    AlignmentResult result;
    for (std::uint32_t n = 0; n <= params.n_max; ++n) {
        const MarkPredicate mark = make_mark(n, params.excluded);
        LevelTrace trace{n, 0, 0, false};
        for (int rep = 0; rep < params.repeats; ++rep) {
            BbhtParams bbht = params.bbht;
            bbht.seed = derive_seed(params.master_seed, n,
                                    static_cast<std::uint64_t>(rep));
            const BbhtOutcome outcome = bbht_search(table, mark, bbht);
            trace.repeats_used = rep + 1;
            trace.oracle_calls += outcome.oracle_calls;
            result.oracle_calls_total += outcome.oracle_calls;
            if (outcome.found) {
                trace.found = true;
                result.per_level_trace.push_back(trace);
                result.status = AlignStatus::Found;
                result.position = outcome.found->position;
                result.distance = outcome.found->distance;
                return result;
            }
        }
        result.per_level_trace.push_back(trace);
    }
    result.status = AlignStatus::ExhaustedNMax;
    return result;
}

std::set<std::size_t> enumerate_optimal(const HammingTable& table,
                                        std::uint32_t k,
                                        const AlignParams& params,
                                        std::set<std::size_t> already_found) {
    validate(table, params);

    std::set<std::size_t> found = std::move(already_found);
    std::set<std::size_t> excluded = params.excluded;
    excluded.insert(found.begin(), found.end());

    int consecutive_failures = 0;
    std::uint64_t run_index = 0;
    while (consecutive_failures < params.repeats) {
        const MarkPredicate mark = make_mark(k, excluded);
        BbhtParams bbht = params.bbht;
        bbht.seed = derive_seed(params.master_seed ^ kEnumerateStream, k,
                                run_index++);
        const BbhtOutcome outcome = bbht_search(table, mark, bbht);
        if (outcome.found) {
            found.insert(outcome.found->position);
            excluded.insert(outcome.found->position);
            consecutive_failures = 0;
        } else {
            ++consecutive_failures;
        }
    }
    return found;
}

} // namespace qsa
