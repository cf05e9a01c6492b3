#pragma once

#include <stdexcept>
#include <string>

namespace gli {

// Base class for all errors raised by this library. The CLI maps subclasses
// onto process exit codes, so keep the taxonomy flat and stable.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (Gauss code, matrix, or surface file).
struct SyntaxError : Error {
    using Error::Error;
};

// Input parsed but violates a structural rule (e.g. a crossing id that does
// not appear exactly once as O and once as U, or mismatched signs).
struct StructureError : Error {
    using Error::Error;
};

// Operation requires a connected diagram.
struct NotConnected : Error {
    using Error::Error;
};

// Matrix operation preconditions.
struct NotSymmetric : Error {
    using Error::Error;
};
struct NotUnimodular : Error {
    using Error::Error;
};
struct IndexError : Error {
    using Error::Error;
};

// realize() requires an allowable matrix (even order or an odd diagonal entry).
struct NotAllowable : Error {
    using Error::Error;
};

// Internal sanity check: boundary/push-off bookkeeping must yield an even
// euler number; an odd value signals a bug, never a valid input.
struct OddEuler : Error {
    using Error::Error;
};

// Crossing-change check requires a positive crossing to start from.
struct NotPositive : Error {
    using Error::Error;
};

}  // namespace gli
