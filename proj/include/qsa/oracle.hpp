#ifndef QSA_ORACLE_HPP
#define QSA_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "qsa/hamming.hpp"

namespace qsa {

/// Classical brute-force ground truth. Intentionally naive so it is
/// auditable by eye; every quantum-simulated result is checked
/// against it.
struct BruteResult {
    std::uint32_t min_distance = 0;
    std::vector<std::size_t> positions; // sorted argmin set
    HammingTable full_table;
};

BruteResult brute_min_distance(const SequenceDatabase& db,
                               const QuerySequence& q, HammingMode mode);

} // namespace qsa

#endif
