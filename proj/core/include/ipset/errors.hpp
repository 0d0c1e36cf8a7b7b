#pragma once

#include <stdexcept>
#include <string>

namespace ipset {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A residual cofactor survived trial division and could not be certified
/// square or squarefree; the input is beyond the configured factoring budget.
class FactorizationLimitExceeded : public Error {
public:
    using Error::Error;
};

/// Coincident points were passed to a predicate that requires distinct ones.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

/// An operation was invoked outside its stated precondition.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Side lengths violate the strict triangle inequality.
class DegenerateTriangle : public Error {
public:
    using Error::Error;
};

/// No pair of points at distance one exists in the set.
class NoUnitDistance : public Error {
public:
    using Error::Error;
};

/// A numeric parameter is outside its admissible range.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// The generator pool was exhausted before the requested cardinality.
class ConstructionBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A file or string could not be parsed as the expected format.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace ipset
