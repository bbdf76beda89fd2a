#ifndef MONORES_ERRORS_HPP
#define MONORES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monores {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two monomials (or a monomial and a complex) live over different variable sets.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// An input exceeds the brute-force guards (facet counts, face enumeration, ...).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Exponent arithmetic would overflow a 64-bit integer.
class OverflowError : public Error {
public:
    using Error::Error;
};

class EmptyIdealError : public Error {
public:
    using Error::Error;
};

/// A check method was requested on inputs it is not valid for
/// (e.g. connectivity on a non-forest).
class MethodError : public Error {
public:
    using Error::Error;
};

/// Precondition "the complex supports a resolution" failed; message carries the witness.
class SupportError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace monores

#endif
