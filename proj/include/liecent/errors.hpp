#pragma once

#include <stdexcept>
#include <string>

namespace liecent {

/// Malformed arguments: size mismatches, out-of-range indices, bad strings.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structure table that does not define the claimed algebra (Jacobi, antisymmetry, associativity).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside the hypotheses it is defined for.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation could not complete, e.g. an exhausted search.
class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace liecent
