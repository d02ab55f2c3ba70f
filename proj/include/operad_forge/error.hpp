#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace operad_forge {

// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class UnsupportedSymmetry : public Error {
public:
    using Error::Error;
};

class NotInvariant : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column), bare_(msg) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& bare_message() const { return bare_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string bare_;
};

} // namespace operad_forge
