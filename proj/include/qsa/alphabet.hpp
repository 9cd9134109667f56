#ifndef QSA_ALPHABET_HPP
#define QSA_ALPHABET_HPP

#include <cstdint>
#include <string>

namespace qsa {

enum class AlphabetKind { Protein, Dna };

/// A residue alphabet with its canonical letter -> code bijection.
/// Protein uses the 20 standard one-letter amino-acid codes in
/// alphabetical order (A..Y -> 0..19, 5 bits per residue); DNA uses
/// A,C,G,T -> 0..3 (2 bits per residue).
class Alphabet {
public:
    static const Alphabet& protein();
    static const Alphabet& dna();
    static const Alphabet& get(AlphabetKind kind);

    AlphabetKind kind() const noexcept { return kind_; }
    int bits_per_residue() const noexcept { return bits_; }
    const std::string& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }

    /// Lowercase input is normalized; anything outside the alphabet
    /// (including ambiguity codes like 'X' or 'B') throws UnknownLetter.
    std::uint8_t encode(char letter) const;
    char decode(std::uint8_t code) const;
    bool contains(char letter) const noexcept;

private:
    Alphabet(AlphabetKind kind, int bits, std::string letters);

    AlphabetKind kind_;
    int bits_;
    std::string letters_;
    int lookup_[26];
};

} // namespace qsa

#endif
