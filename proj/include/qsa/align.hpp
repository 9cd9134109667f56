#ifndef QSA_ALIGN_HPP
#define QSA_ALIGN_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "qsa/bbht.hpp"

namespace qsa {

struct AlignParams {
    /// Full BBHT runs per Hamming level before declaring it empty.
    int repeats = 3;
    /// Maximum Hamming distance searched; levels run n = 0..n_max.
    std::uint32_t n_max = 0;
    BbhtParams bbht;
    std::uint64_t master_seed = 0;
    /// Positions never marked at any level (domain-crossing exclusion
    /// and the enumerate sub-loop both feed this).
    std::set<std::size_t> excluded;
};

enum class AlignStatus { Found, ExhaustedNMax };

struct LevelTrace {
    std::uint32_t distance;
    int repeats_used;
    std::uint64_t oracle_calls;
    bool found;
};

struct AlignmentResult {
    AlignStatus status = AlignStatus::ExhaustedNMax;
    std::optional<std::size_t> position;
    std::optional<std::uint32_t> distance;
    std::uint64_t oracle_calls_total = 0;
    std::vector<LevelTrace> per_level_trace;
};

/// Default level cap: roughly one third of the residues mismatching.
std::uint32_t default_n_max(HammingMode mode, std::size_t m,
                            int bits_per_residue);

/// Iterative optimal alignment: search distance levels n = 0, 1, ...
/// with `repeats` BBHT runs each (fresh derived seeds); first verified
/// hit wins. Any returned (position, distance) satisfies
/// T[position] == distance unconditionally.
AlignmentResult align_optimal(const HammingTable& table,
                              const AlignParams& params);

/// Enumerate positions at distance k by repeated BBHT searches with a
/// growing exclusion set; stops after `repeats` consecutive failures.
/// Returns all positions collected, including the seed set.
std::set<std::size_t> enumerate_optimal(const HammingTable& table,
                                        std::uint32_t k,
                                        const AlignParams& params,
                                        std::set<std::size_t> already_found = {});

} // namespace qsa

#endif
