#include "qsa/oracle.hpp"

#include "qsa/error.hpp"

namespace qsa {

namespace {

// Bit count by explicit loop; independent of the popcount-based path
// in hamming_table.
std::uint32_t count_bits(unsigned v) {
    std::uint32_t n = 0;
    while (v) {
        n += v & 1u;
        v >>= 1;
    }
    return n;
}

} // namespace

BruteResult brute_min_distance(const SequenceDatabase& db,
                               const QuerySequence& q, HammingMode mode) {
    if (db.alphabet != q.alphabet)
        throw Error(ErrorCode::AlphabetMismatch,
                    "database and query use different alphabets");
    if (q.size() > db.size())
        throw Error(ErrorCode::QueryLongerThanDatabase,
                    "query longer than database");

    const std::size_t n = db.size();
    const std::size_t m = q.size();

    BruteResult result;
    result.full_table.mode = mode;
    result.full_table.window_length = m;
    result.full_table.bits_per_residue = db.alphabet->bits_per_residue();
    result.full_table.values.resize(n - m + 1);

    for (std::size_t i = 0; i + m <= n; ++i) {
        std::uint32_t d = 0;
        for (std::size_t a = 0; a < m; ++a) {
            const unsigned x = db.residues[i + a];
            const unsigned y = q.residues[a];
            if (mode == HammingMode::BitLevel)
                d += count_bits(x ^ y);
            else if (x != y)
                d += 1;
        }
        result.full_table.values[i] = d;
        if (i == 0 || d < result.min_distance) {
            result.min_distance = d;
            result.positions.clear();
        }
        if (d == result.min_distance) result.positions.push_back(i);
    }
    return result;
}

} // namespace qsa
