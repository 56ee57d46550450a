#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wordeq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `column` is 1-based; 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        std::string out;
        if (line != 0) out += "line " + std::to_string(line) + ", ";
        if (column != 0) out += "column " + std::to_string(column) + ": ";
        return out + what;
    }

    std::size_t line_;
    std::size_t column_;
};

class UnboundVariableError : public Error {
public:
    explicit UnboundVariableError(std::vector<unsigned> missing)
        : Error(format(missing)), missing_(std::move(missing)) {}

    const std::vector<unsigned>& missing() const noexcept { return missing_; }

private:
    static std::string format(const std::vector<unsigned>& missing) {
        std::string out = "unbound variable(s):";
        for (auto v : missing) out += " X" + std::to_string(v);
        return out;
    }

    std::vector<unsigned> missing_;
};

/// A precondition on the structure of an input was violated
/// (not quadratic, not class D, not a solution, bad instance, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A self-check failed. Always indicates a bug in this library.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace wordeq
