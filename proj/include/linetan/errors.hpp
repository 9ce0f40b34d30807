#pragma once

#include <stdexcept>
#include <string>

namespace linetan {

/// Input violates a geometric precondition (lines not skew, sphere degenerate, ...).
struct GeometryError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A case analysis that should be exhaustive was not; indicates a bug.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace linetan
