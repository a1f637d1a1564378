#pragma once

#include <stdexcept>
#include <string>

namespace z4cent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class GroupTooLarge : public Error {
public:
    using Error::Error;
};

class InvalidWord : public Error {
public:
    using Error::Error;
};

/// A computed value does not have the algebraic shape the caller relied on
/// (non-integral multiplicity, failed relation check, ...).
class VerificationFailure : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

}  // namespace z4cent
