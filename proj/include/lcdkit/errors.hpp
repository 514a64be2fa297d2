#pragma once

#include <stdexcept>
#include <string>

namespace lcdkit {

// Every error raised by the library derives from Error so callers can map
// categories onto exit codes without string matching.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dimension or field mismatch between operands.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Unsupported (q, k) pair, field order, or dimension.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Input outside the mathematical domain of an operation (zero vector,
// rank-deficient multiplicity vector, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A stated precondition does not hold (non-LCD input where LCD is required).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A residue-form bookkeeping identity failed to hold exactly.
class AssumptionError : public Error {
public:
    using Error::Error;
};

// Requested data is not present in the fixture store.
class DataUnavailable : public Error {
public:
    using Error::Error;
};

}  // namespace lcdkit
