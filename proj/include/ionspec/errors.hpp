// errors.hpp — Exception types shared across the library

#pragma once

#include <stdexcept>

namespace ionspec {

// Bad input: a parameter or configuration violates a documented invariant.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numerical failure: tripped guard, singular system, non-finite state.
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ionspec
