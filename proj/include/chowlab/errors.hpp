#pragma once

#include <stdexcept>
#include <string>

namespace chowlab {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad call arguments (not a flat, r > n, index out of range, ...).
struct ArgumentError : Error {
    using Error::Error;
};

// A documented desk-scale limit was exceeded.
struct CapacityError : Error {
    using Error::Error;
};

// An axiom of the input data fails; the message names the axiom and a witness.
struct ValidationError : Error {
    using Error::Error;
};

// A value lies outside its required domain (e.g. degree bound of J_rk).
struct DomainError : Error {
    using Error::Error;
};

// Triangular inversion hit a non-unit diagonal entry.
struct InversionError : Error {
    using Error::Error;
};

// Kernel structure violated: offdiagonal entry not divisible by x-1, bad diagonal.
struct KernelError : Error {
    using Error::Error;
};

// A provable identity failed to hold; signals a bug or an invalid kernel.
struct TheoryError : Error {
    using Error::Error;
};

// Graded ring model inconsistency (top degree not one-dimensional, ...).
struct ModelError : Error {
    using Error::Error;
};

} // namespace chowlab
