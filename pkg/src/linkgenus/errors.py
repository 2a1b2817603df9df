"""Exception hierarchy shared by every module of the package."""


class LinkgenusError(Exception):
    """Base class; the CLI maps any subclass to exit code 1."""


class DomainError(LinkgenusError, ValueError):
    """Arguments fall outside the range where an operation is defined."""


class DegenerateDivisionError(DomainError):
    pass


class ProfileConsistencyError(LinkgenusError):
    """The Δh profile does not sum to the degree it was built from."""


class ScrollShapeError(DomainError):
    """A scroll or divisor has the wrong shape for the requested operation."""


class VariantMismatchError(DomainError):
    pass


class InvariantViolationError(LinkgenusError, ValueError):
    pass


class InfeasibleConstructionError(LinkgenusError):
    pass


class NongenericError(LinkgenusError):
    """Random sampling kept producing special configurations."""
