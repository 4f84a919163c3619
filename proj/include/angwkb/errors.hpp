#pragma once

#include <stdexcept>
#include <string>

namespace angwkb {

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Series parameters outside the convergence domain (requires 4U > 1).
struct ConvergenceDomainError : DomainError {
    using DomainError::DomainError;
};

/// A phase expression does not have the certified canonical shape.
/// This would falsify the closed-form structure the engine relies on,
/// so it always aborts the computation loudly.
struct StructureViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Branch continuity certificate failed even after resampling.
struct BranchDiscontinuity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A cycle integral expected to be real has a large spurious component.
struct NonRealResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Doubling the quadrature resolution did not stabilize the result.
struct QuadratureNonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root bracketing failed within the expanding search window.
struct BracketFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A converged eigenstate has the wrong number of nodes.
struct NodeCountMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integration produced a non-finite value despite rescaling.
struct NumericalOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numerical acceptance gate was not met.
struct GateFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace angwkb
