#pragma once

#include <stdexcept>
#include <string>

namespace softedge {

enum class Errc {
    domain,               // argument outside the mathematical domain
    invalid,              // malformed parameter set (bad beta, p out of range, ...)
    unsupported_order,    // expansion/reconstruction order beyond the built-in tables
    capability,           // parameters outside the supported accuracy range
    no_convergence,       // quadrature failed to meet its tolerance
    inconsistent_system,  // overdetermined polynomial system has no exact solution
    internal
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Thrown by the quadrature driver when max_depth is reached; carries the best estimate.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double best_estimate)
        : Error(Errc::no_convergence, what), best_(best_estimate) {}
    double best_estimate() const { return best_; }

private:
    double best_;
};

}  // namespace softedge
