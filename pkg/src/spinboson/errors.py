"""Exception types shared across the package."""


class SpinBosonError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SpinBosonError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ContractError(SpinBosonError, ValueError):
    """An input violates a structural precondition (shape, symmetry, form)."""


class DegenerateCouplingError(DomainError):
    """A quantity is requested at a degenerate parameter point where it is undefined."""


class InvalidStateError(SpinBosonError, ValueError):
    """A matrix passed as a density matrix is not a valid quantum state."""


class SearchFailureError(SpinBosonError, RuntimeError):
    """A numeric search exhausted its budget without reaching its goal."""


class NoCrossingError(SearchFailureError):
    """No level crossing exists (or was found) on the searched coupling axis."""


class CertificationError(SpinBosonError, RuntimeError):
    """A structural property that the library guarantees failed a numeric check."""
