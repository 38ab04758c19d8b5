#pragma once

#include <stdexcept>
#include <string>

namespace latpack {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An argument violates a documented precondition (wrong dimension,
// non-positive-definite Gram, malformed input, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A requested value cannot be represented in the working field
// (for example a layer height whose square has no square root in Q(sqrt2)).
class RepresentationError : public Error {
public:
    using Error::Error;
};

// Inputs are individually valid but cannot be combined as requested
// (incompatible code pair, glue vector outside the dual, ...).
class ConstructionError : public Error {
public:
    using Error::Error;
};

// A computation exceeded its node or memory budget.  Deliberately carries
// no partial results.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Floating-point error bounds could not be made tight enough to decide
// a comparison at the requested tolerance.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// File or stream input could not be parsed.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace latpack
