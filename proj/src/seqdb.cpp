#include "qsa/seqdb.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qsa/error.hpp"

namespace qsa {

namespace {

void append_sequence_line(SequenceDatabase& db, const std::string& line,
                          const Alphabet& alphabet,
                          const std::string& source, std::size_t line_no) {
    for (std::size_t col = 0; col < line.size(); ++col) {
        char c = line[col];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (!alphabet.contains(c))
            throw Error(ErrorCode::UnknownLetter,
                        source + ":" + std::to_string(line_no) + ":" +
                            std::to_string(col + 1) +
                            ": unknown residue letter '" + c + "'");
        db.residues.push_back(alphabet.encode(c));
    }
}

} // namespace

SequenceDatabase database_from_string(const std::string& residues,
                                      const Alphabet& alphabet) {
    SequenceDatabase db;
    db.alphabet = &alphabet;
    db.domain_offsets.push_back(0);
    db.headers.emplace_back();
    for (char c : residues) db.residues.push_back(alphabet.encode(c));
    if (db.residues.empty())
        throw Error(ErrorCode::EmptyDatabase, "database has no residues");
    return db;
}

SequenceDatabase load_fasta(std::istream& in, const Alphabet& alphabet,
                            const std::string& source_name) {
    SequenceDatabase db;
    db.alphabet = &alphabet;

    std::string line;
    std::size_t line_no = 0;
    bool in_record = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            db.domain_offsets.push_back(db.residues.size());
            db.headers.push_back(line.substr(1));
            in_record = true;
        } else {
            if (!in_record)
                throw Error(ErrorCode::ParseError,
                            source_name + ":" + std::to_string(line_no) +
                                ": sequence data before first '>' header");
            append_sequence_line(db, line, alphabet, source_name, line_no);
        }
    }
    if (db.residues.empty())
        throw Error(ErrorCode::EmptyDatabase,
                    source_name + ": no residues in FASTA input");
    // A trailing empty record would leave an offset == N.
    while (!db.domain_offsets.empty() &&
           db.domain_offsets.back() >= db.residues.size()) {
        db.domain_offsets.pop_back();
        db.headers.pop_back();
    }
    return db;
}

SequenceDatabase load_fasta(const std::string& path, const Alphabet& alphabet) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open FASTA file: " + path);
    return load_fasta(in, alphabet, path);
}

QuerySequence query_from_string(const std::string& residues,
                                const Alphabet& alphabet) {
    if (residues.empty())
        throw Error(ErrorCode::InvalidArgument, "query must not be empty");
    QuerySequence q;
    q.alphabet = &alphabet;
    for (char c : residues) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        q.residues.push_back(alphabet.encode(c));
    }
    if (q.residues.empty())
        throw Error(ErrorCode::InvalidArgument, "query must not be empty");
    return q;
}

std::vector<std::uint8_t> window(const SequenceDatabase& db, std::size_t i,
                                 std::size_t m) {
    if (m == 0 || m > db.size() || i > db.size() - m)
        throw Error(ErrorCode::OutOfRange,
                    "window start " + std::to_string(i) + " length " +
                        std::to_string(m) + " outside database of " +
                        std::to_string(db.size()) + " residues");
    return {db.residues.begin() + static_cast<std::ptrdiff_t>(i),
            db.residues.begin() + static_cast<std::ptrdiff_t>(i + m)};
}

std::vector<std::size_t> crossing_windows(const SequenceDatabase& db,
                                          std::size_t m) {
    std::vector<std::size_t> out;
    if (m == 0 || m > db.size()) return out;
    for (std::size_t i = 0; i + m <= db.size(); ++i) {
        for (std::size_t off : db.domain_offsets) {
            if (off > i && off < i + m) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

std::string decode_sequence(const std::vector<std::uint8_t>& codes,
                            const Alphabet& alphabet) {
    std::string s;
    s.reserve(codes.size());
    for (auto c : codes) s.push_back(alphabet.decode(c));
    return s;
}

} // namespace qsa
