"""Exception hierarchy shared by the engine, the service and the CLI.

The CLI maps each class to a process exit code: parse failures exit 2,
precondition violations exit 3, internal contradictions exit 4.
"""


class EngineError(Exception):
    """Base class for all errors raised by the engine."""


class InputParseError(EngineError):
    """A problem description could not be parsed into engine values."""

    exit_code = 2


class PreconditionError(EngineError):
    """An operation was invoked on data violating its stated preconditions."""

    exit_code = 3


class InternalContradictionError(EngineError):
    """A runtime check that should be impossible for valid inputs failed."""

    exit_code = 4


class DimensionMismatchError(PreconditionError):
    """Vector or matrix dimensions do not line up."""


class JacobiViolationError(PreconditionError):
    """Structure constants fail antisymmetry or the Jacobi identity."""

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class MorphismViolationError(PreconditionError):
    """A candidate action fails the morphism law on a basis pair."""

    def __init__(self, i, j, lhs, rhs):
        super().__init__(
            f"action is not a morphism on basis pair ({i}, {j}): "
            f"theta([Xi, Xj]) = {lhs} but [theta_i, theta_j] = {rhs}"
        )
        self.pair = (i, j)
        self.lhs = lhs
        self.rhs = rhs


class KillingSingularError(PreconditionError):
    """The Killing form is singular where an invertible one is required."""


class ContextMismatchError(PreconditionError):
    """Multivectors from incompatible contexts were combined."""


class Type2SpanNotRecognizedError(PreconditionError):
    """A rank-2 image span is not of the shape span{(t+b)^m, t+b}."""


class Type3TripleNotFoundError(PreconditionError):
    """No standard triple with the required brackets was found."""


class NotACocycleError(PreconditionError):
    """A basis map fails the 1-cocycle law."""


class ResidualNotProportionalToDError(PreconditionError):
    """A degree-1 operator residual does not match the canonical pattern."""
