"""Exception types shared across the package.

Everything raised on purpose derives from CircoverError so callers (and the
CLI) can tell library errors from genuine bugs. AssertionError is reserved
for internal invariant cross-checks that must never fire on valid inputs.
"""


class CircoverError(Exception):
    """Base class for all library errors."""


class BoundViolation(CircoverError):
    """A structural parameter is outside its allowed range."""


class DuplicateRow(CircoverError):
    """Two rows of a circular matrix coincide."""


class EmptyColumnSet(CircoverError):
    """A column deletion would remove every column."""


class NotInterval(CircoverError):
    """A node set is not a circular interval (or misses its own node)."""


class NotClosedPath(CircoverError):
    """An arc sequence does not chain into a closed path."""


class LimitExceeded(CircoverError):
    """An enumeration cap was hit where completeness is required."""


class InfeasiblePoint(CircoverError):
    """The queried point violates the fractional covering constraints."""


class NonpositiveWinding(CircoverError):
    """A closed path winds zero or negative times, no inequality exists."""


class RedundantInequality(CircoverError):
    """The requested inequality is degenerate (never facet-inducing)."""


class BadParameters(CircoverError):
    """Parameters are structurally invalid for the requested operation."""


class NotCirculantMinor(CircoverError):
    """The claimed column set does not leave a circulant minor."""


class ReverseRowArcPresent(CircoverError):
    """Node classification is defined only without reverse row arcs."""


class NoEssentialBullets(CircoverError):
    """Block decomposition needs at least one essential plain node."""


class NegativeWeight(CircoverError):
    """Optimization over an up-closed region needs non-negative weights."""


class BudgetExceeded(CircoverError):
    """The instance is beyond the configured enumeration budget."""


class NegativeCoefficient(CircoverError):
    """Validity checking is restricted to non-negative coefficients."""


class IterationLimit(CircoverError):
    """The cutting-plane loop hit its iteration cap."""
