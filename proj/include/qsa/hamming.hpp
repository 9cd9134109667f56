#ifndef QSA_HAMMING_HPP
#define QSA_HAMMING_HPP

#include <cstdint>
#include <vector>

#include "qsa/seqdb.hpp"

namespace qsa {

enum class HammingMode { BitLevel, ResidueLevel };

/// Per-position distances T[0..N-m] between each database window and
/// the query. BitLevel counts differing bits of the residue codes
/// (popcount of XOR); ResidueLevel counts differing residues.
struct HammingTable {
    std::vector<std::uint32_t> values;
    HammingMode mode = HammingMode::BitLevel;
    std::size_t window_length = 0; // m
    int bits_per_residue = 0;

    std::size_t n_prime() const noexcept { return values.size(); }

    /// Qubits of the sub-sequence register: bits_per_residue * m.
    std::size_t qubits_first_register() const noexcept {
        return static_cast<std::size_t>(bits_per_residue) * window_length;
    }
    /// Qubits of the position register: smallest Q with 2^Q > n_prime - 1.
    std::size_t qubits_second_register() const noexcept;

    std::uint32_t max_distance() const noexcept {
        return static_cast<std::uint32_t>(
            mode == HammingMode::BitLevel ? qubits_first_register()
                                          : window_length);
    }

    /// Direct construction for synthetic tables in tests and tools.
    static HammingTable from_values(std::vector<std::uint32_t> values,
                                    HammingMode mode, std::size_t m,
                                    int bits_per_residue);
};

HammingTable hamming_table(const SequenceDatabase& db, const QuerySequence& q,
                           HammingMode mode);

} // namespace qsa

#endif
