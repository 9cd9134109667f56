#ifndef QSA_ERROR_HPP
#define QSA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qsa {

enum class ErrorCode {
    InvalidArgument,
    UnknownLetter,
    ParseError,
    IoError,
    OutOfRange,
    AlphabetMismatch,
    QueryLongerThanDatabase,
    EmptyDatabase,
    EmptyTable,
    DomainError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace qsa

#endif
