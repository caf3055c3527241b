#ifndef TRIPLEINT_ERRORS_HPP
#define TRIPLEINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tripleint {

// Exact-division failed with a nonzero remainder. If this fires inside an
// identity evaluation it falsifies the identity (or the implementation).
struct NonDivisible : std::runtime_error {
    explicit NonDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct PoleEncountered : std::runtime_error {
    explicit PoleEncountered(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceViolation : std::runtime_error {
    explicit ConvergenceViolation(const std::string& what) : std::runtime_error(what) {}
};

struct DepthTooSmall : std::runtime_error {
    explicit DepthTooSmall(const std::string& what) : std::runtime_error(what) {}
};

// Two independent evaluation routes of the same quantity disagreed.
struct RouteMismatch : std::logic_error {
    explicit RouteMismatch(const std::string& what) : std::logic_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tripleint

#endif
