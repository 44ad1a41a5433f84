#pragma once

#include <stdexcept>
#include <string>

namespace uopt {

/// An operation that needs at least one element was given an empty set.
class EmptySetError : public std::invalid_argument {
public:
    explicit EmptySetError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two vectors of different dimension were compared or zipped.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An uncertain value violates its structural invariant (probabilities,
/// interval ordering, histogram weights).
class ValidityError : public std::invalid_argument {
public:
    explicit ValidityError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two uncertain values of different shape were zipped.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace uopt
