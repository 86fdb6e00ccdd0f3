#pragma once

#include <stdexcept>
#include <string>

namespace cspace {

/// Structural mismatch: points, weights or cuboids that do not fit the
/// domain structure they are used with.
class structural_error : public std::invalid_argument {
public:
    explicit structural_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Out-of-range scalar parameter (c <= 0, alpha outside (0,1], ...).
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Invariant violation detected while building a value (empty central
/// region, weight sums off, malformed space file).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cspace
