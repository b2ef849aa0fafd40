#pragma once

#include <stdexcept>
#include <string>

namespace schwarz {

// Bad numeric input: point outside the domain, malformed coefficients, etc.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// The query is well-formed but no bound/solution exists at this parameter
// (e.g. a derivative level above 1/2, where the function class is empty).
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative scheme (Newton solve, shooting, root refinement) failed to
// converge to its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace schwarz
