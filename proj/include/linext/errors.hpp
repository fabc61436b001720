#pragma once

#include <stdexcept>
#include <string>

namespace linext {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input relation contains a directed cycle (including self-loops).
struct CycleError : Error {
    using Error::Error;
};

// Element index outside the ground set.
struct IndexError : Error {
    using Error::Error;
};

// Instance too large for a guarded operation (brute-force oracles, bitset capacity).
struct SizeError : Error {
    using Error::Error;
};

// A structural precondition that the algorithms rely on was violated.
struct InvariantError : Error {
    using Error::Error;
};

// Memoization exceeded the configured state cap.
struct ResourceError : Error {
    using Error::Error;
};

// Malformed instance file.
struct FormatError : Error {
    using Error::Error;
};

// Point outside a bound expression's constraint set.
struct DomainError : Error {
    using Error::Error;
};

// Box splitting hit the depth cap with the bound still above threshold.
struct DepthExceededError : Error {
    using Error::Error;
};

// Bad command-line or generator argument.
struct ArgumentError : Error {
    using Error::Error;
};

// Algorithm requested on an instance kind it does not accept.
struct AlgorithmMismatchError : Error {
    using Error::Error;
};

} // namespace linext
