#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (bad argument, bad range).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation (e.g. r0 <= 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Jet arithmetic hit a pole or branch cut (division by zero, ln of non-positive, ...).
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Lexical, syntax or unknown-identifier error in a potential expression.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// V'(r) <= 0 where the expansion needs an attractive slope.
class NoBoundStateError : public Error {
public:
    using Error::Error;
};

/// 3 + r V''/V' <= 0, so the oscillator frequency is undefined.
class InvalidExpansionPointError : public Error {
public:
    using Error::Error;
};

/// No sign change of the expansion-point equation on the scan grid.
class NoRootError : public Error {
public:
    using Error::Error;
};

/// Every root of the expansion-point equation fails the minimum test.
class NoMinimumError : public Error {
public:
    using Error::Error;
};

/// Generic numerical failure (bracket lost, non-finite intermediate).
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace slet
