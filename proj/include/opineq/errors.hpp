#pragma once

#include <stdexcept>

namespace opineq {

// Base class for every error thrown by the library.  code() returns a stable
// identifier that the campaign runner embeds in failure records, so renaming
// one of these classes is a report-format change.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* code() const noexcept { return "Error"; }
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "DimensionMismatch"; }
};

// An eigenvalue (or scalar argument) sits outside a function's domain, or too
// close to an open endpoint to evaluate safely.
class SpectrumOutOfDomain : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "SpectrumOutOfDomain"; }
};

class NotDifferentiable : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "NotDifferentiable"; }
};

class NegativeWeight : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "NegativeWeight"; }
};

// Weight fails symmetry about 1/2 or is not monotone on [0, 1/2].
class InvalidWeight : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "InvalidWeight"; }
};

class AsymmetricInput : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "AsymmetricInput"; }
};

class NotPositiveDefinite : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "NotPositiveDefinite"; }
};

class EighNotConverged : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "EighNotConverged"; }
};

class NonFiniteValue : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "NonFiniteValue"; }
};

// Checker asked to handle a function that is neither operator convex nor
// operator concave, or a weight whose monotone class the statement excludes.
class UnsupportedFunctionClass : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "UnsupportedFunctionClass"; }
};

class OutOfRange : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "OutOfRange"; }
};

class ParseError : public Error {
public:
    using Error::Error;
    const char* code() const noexcept override { return "ParseError"; }
};

}  // namespace opineq
