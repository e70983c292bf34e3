"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input is outside the physically meaningful domain."""


class InvalidStateError(ValueError):
    """A density matrix violates positivity beyond tolerance."""


class ConvergenceError(RuntimeError):
    """Step doubling failed to reach the requested tolerance."""


class ConsistencyError(RuntimeError):
    """An internal thermodynamic identity was violated beyond tolerance."""
