#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace realchern {

/// Stable error categories. The numeric values are printed by the CLI and
/// must not be renumbered.
enum class ErrorCode {
    RingMismatch = 101,
    OutOfRange = 102,
    InvalidPresentation = 103,
    DegreeMismatch = 104,
    MissingImage = 105,
    SyntaxError = 201,
    UnknownGenerator = 202,
    DegreeOverflow = 203,
    UnknownName = 204,
    DuplicateName = 205,
    InvalidModel = 301,
    NotUnital = 302,
    OddDegree = 303,
    IncompatiblePair = 304,
    InternalMismatch = 305,
    OracleFailure = 306,
    SpaceMismatch = 307,
    NotTrivialInvolution = 308,
    DimensionMismatch = 309,
    MissingSqRule = 310,
    MissingHopf = 311,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the expression and definition-file parsers. `line` and `column`
/// are 1-based; `line` is 0 when the source is a single expression.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, const std::string& message, int line, int column)
        : Error(code, format(message, line, column)), message_(message), line_(line), column_(column)
    {
    }
    const std::string& message() const noexcept { return message_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, int line, int column)
    {
        if (line > 0)
            return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
        return "column " + std::to_string(column) + ": " + message;
    }
    std::string message_;
    int line_;
    int column_;
};

}  // namespace realchern
