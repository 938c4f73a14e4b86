#pragma once

#include <stdexcept>
#include <string>

namespace kgt {

// Non-physical or out-of-domain input (negative mass, t < 0, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the range where the accuracy contract holds.
class accuracy_error : public std::runtime_error {
public:
    explicit accuracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical integration failed to reach the requested tolerance.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_tolerance(achieved) {}
    double achieved_tolerance;
};

// Invalid run configuration (CFL violation, bad grid, malformed input file).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace kgt
