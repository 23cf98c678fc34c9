#pragma once

#include <stdexcept>
#include <string>

namespace pvtilt {

/// Input outside the domain of a solar-geometry or schedule operation
/// (latitude beyond ±90, day outside 1..365, non-positive time step, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Tilt schedules are defined for the northern hemisphere only.
class UnsupportedHemisphere : public std::invalid_argument {
public:
    explicit UnsupportedHemisphere(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace pvtilt
