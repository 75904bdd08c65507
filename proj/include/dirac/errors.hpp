#pragma once

#include <stdexcept>

namespace dirac {

/// Thrown when a caller breaks an API precondition (shape mismatch,
/// non-hermitian input, misaligned grid, ...).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Thrown when a measured quantity exceeds one of the guaranteed
/// inequalities. For a correct build this never fires; it indicates a bug,
/// not bad user input.
struct BoundViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dirac
