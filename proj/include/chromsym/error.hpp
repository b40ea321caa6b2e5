#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromsym {

enum class ErrorKind {
    SizeMismatch,
    InvalidSpec,
    ParseError,
    UnknownElement,
    PreconditionViolated,
    FastPathInapplicable,
    TooLarge,
    InvalidParams,
    InternalInvariantBroken,
    BudgetExceeded,
};

const char* to_string(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type; the CLI
// maps the kind onto its exit-code contract.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::ParseError, what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Guards for facts that a correct implementation can never violate.
#define CHROMSYM_ENSURE(cond, msg)                                                      \
    do {                                                                                \
        if (!(cond))                                                                    \
            throw ::chromsym::Error(::chromsym::ErrorKind::InternalInvariantBroken, msg); \
    } while (0)

}  // namespace chromsym
