#include "qsa/alphabet.hpp"

#include <cctype>

#include "qsa/error.hpp"

namespace qsa {

Alphabet::Alphabet(AlphabetKind kind, int bits, std::string letters)
    : kind_(kind), bits_(bits), letters_(std::move(letters)) {
    for (int& v : lookup_) v = -1;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        lookup_[letters_[i] - 'A'] = static_cast<int>(i);
}

const Alphabet& Alphabet::protein() {
    // The 20 standard one-letter amino-acid codes, alphabetical.
    static const Alphabet a(AlphabetKind::Protein, 5, "ACDEFGHIKLMNPQRSTVWY");
    return a;
}

const Alphabet& Alphabet::dna() {
    static const Alphabet a(AlphabetKind::Dna, 2, "ACGT");
    return a;
}

const Alphabet& Alphabet::get(AlphabetKind kind) {
    return kind == AlphabetKind::Protein ? protein() : dna();
}

bool Alphabet::contains(char letter) const noexcept {
    unsigned char up = static_cast<unsigned char>(
        std::toupper(static_cast<unsigned char>(letter)));
    return up >= 'A' && up <= 'Z' && lookup_[up - 'A'] >= 0;
}

std::uint8_t Alphabet::encode(char letter) const {
    unsigned char up = static_cast<unsigned char>(
        std::toupper(static_cast<unsigned char>(letter)));
    if (up < 'A' || up > 'Z' || lookup_[up - 'A'] < 0)
        throw Error(ErrorCode::UnknownLetter,
                    std::string("unknown residue letter '") + letter + "'");
    return static_cast<std::uint8_t>(lookup_[up - 'A']);
}

char Alphabet::decode(std::uint8_t code) const {
    if (code >= letters_.size())
        throw Error(ErrorCode::OutOfRange,
                    "residue code " + std::to_string(code) +
                        " outside alphabet of size " +
                        std::to_string(letters_.size()));
    return letters_[code];
}

} // namespace qsa
