#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcox {

enum class ErrorKind {
    SyntaxError,
    ValidationError,
    NotUnimodular,
    NotAcyclic,
    LoopAtVertex,
    DegreeCapExceeded,
    InvalidVertex,
    DimensionMismatch,
    RelationsPresent,
    InexactDivision,
    InvalidArgument,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to a stable diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Syntax errors additionally know where they happened (1-based).
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, int line, int column)
        : Error(ErrorKind::SyntaxError, message), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace qcox
