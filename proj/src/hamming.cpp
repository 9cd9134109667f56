#include "qsa/hamming.hpp"

#include <bit>

#include "qsa/error.hpp"

namespace qsa {

std::size_t HammingTable::qubits_second_register() const noexcept {
    // Smallest Q2 with 2^Q2 > N - m, i.e. enough codes for positions
    // 0..n_prime-1.
    std::size_t q = 0;
    while ((std::size_t{1} << q) < n_prime()) ++q;
    return q;
}

HammingTable HammingTable::from_values(std::vector<std::uint32_t> values,
                                       HammingMode mode, std::size_t m,
                                       int bits_per_residue) {
    if (values.empty())
        throw Error(ErrorCode::EmptyTable, "Hamming table must be nonempty");
    HammingTable t;
    t.values = std::move(values);
    t.mode = mode;
    t.window_length = m;
    t.bits_per_residue = bits_per_residue;
    return t;
}

HammingTable hamming_table(const SequenceDatabase& db, const QuerySequence& q,
                           HammingMode mode) {
    if (db.alphabet != q.alphabet)
        throw Error(ErrorCode::AlphabetMismatch,
                    "database and query use different alphabets");
    const std::size_t n = db.size();
    const std::size_t m = q.size();
    if (m > n)
        throw Error(ErrorCode::QueryLongerThanDatabase,
                    "query of " + std::to_string(m) +
                        " residues exceeds database of " + std::to_string(n));

    HammingTable t;
    t.mode = mode;
    t.window_length = m;
    t.bits_per_residue = db.alphabet->bits_per_residue();
    t.values.resize(n - m + 1);
    for (std::size_t i = 0; i + m <= n; ++i) {
        std::uint32_t d = 0;
        for (std::size_t a = 0; a < m; ++a) {
            std::uint8_t x = db.residues[i + a];
            std::uint8_t y = q.residues[a];
            if (mode == HammingMode::BitLevel)
                d += static_cast<std::uint32_t>(
                    std::popcount(static_cast<unsigned>(x ^ y)));
            else
                d += (x != y) ? 1u : 0u;
        }
        t.values[i] = d;
    }
    return t;
}

} // namespace qsa
