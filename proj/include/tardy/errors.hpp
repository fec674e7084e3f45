#pragma once

#include <stdexcept>

namespace tardy {

// Problems the caller can act on: bad input, exceeded budget, wrong solver.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error { using Error::Error; };
struct EmptyInstanceError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct BudgetExceededError : Error { using Error::Error; };
struct NonUniformWeightsError : Error { using Error::Error; };
struct ModelError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Internal soundness check failed. Any throw of this type is a bug in this
// library, never a property of the input.
struct FormulationBugError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace tardy
