#ifndef QSA_SEQDB_HPP
#define QSA_SEQDB_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsa/alphabet.hpp"

namespace qsa {

/// Concatenated residue list; domains (FASTA records) are placed
/// end-to-end and windows may cross the boundaries between them.
struct SequenceDatabase {
    std::vector<std::uint8_t> residues;
    std::vector<std::size_t> domain_offsets;
    std::vector<std::string> headers;
    const Alphabet* alphabet = nullptr;

    std::size_t size() const noexcept { return residues.size(); }
};

struct QuerySequence {
    std::vector<std::uint8_t> residues;
    const Alphabet* alphabet = nullptr;

    std::size_t size() const noexcept { return residues.size(); }
};

SequenceDatabase database_from_string(const std::string& residues,
                                      const Alphabet& alphabet);

/// FASTA ingestion: '>' lines start a record (header kept), sequence
/// lines are concatenated, whitespace stripped, CRLF and LF accepted.
SequenceDatabase load_fasta(const std::string& path, const Alphabet& alphabet);
SequenceDatabase load_fasta(std::istream& in, const Alphabet& alphabet,
                            const std::string& source_name = "<stream>");

QuerySequence query_from_string(const std::string& residues,
                                const Alphabet& alphabet);

/// residues[i .. i+m-1]; domain crossing is allowed.
std::vector<std::uint8_t> window(const SequenceDatabase& db, std::size_t i,
                                 std::size_t m);

/// Window start positions whose span crosses a domain boundary.
std::vector<std::size_t> crossing_windows(const SequenceDatabase& db,
                                          std::size_t m);

std::string decode_sequence(const std::vector<std::uint8_t>& codes,
                            const Alphabet& alphabet);

} // namespace qsa

#endif
