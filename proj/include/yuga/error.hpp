#pragma once

#include <stdexcept>
#include <string>

namespace yuga {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A fraction was built with denominator 0.
class ZeroDenominator : public Error {
public:
    ZeroDenominator() : Error("zero denominator") {}
};

/// Division by the zero rational.
class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// An argument lies outside its documented domain.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// Text could not be parsed as the requested value.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Yuga parameters violate one of the cycle invariants.
class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// Nakshatra name table has the wrong length or duplicated names.
class InvalidNameTable : public Error {
public:
    using Error::Error;
};

/// An explicit intercalary schedule is malformed.
class InvalidSchedule : public Error {
public:
    using Error::Error;
};

} // namespace yuga
