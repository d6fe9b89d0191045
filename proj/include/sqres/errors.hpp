#pragma once

#include <stdexcept>
#include <string>

namespace sqres {

// Invalid physical or numerical input (CLI maps this to exit code 2).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A quadrature or series failed its internal convergence gate (exit code 3).
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sqres
