"""
Exception hierarchy for the cubic surface analyzer.

Every error carries the pipeline stage it was raised in so the command line
can report ``error [stage]: message`` and exit with a non-zero status.
Library code never swallows these; only the CLI converts them.
"""


class CubicBrauerError(Exception):
    """Base class for every analysis failure."""

    stage = "core"

    def __init__(self, message: str, *, stage: str | None = None) -> None:
        super().__init__(message)
        if stage is not None:
            self.stage = stage


class TheoremInapplicableError(CubicBrauerError):
    """The input lies outside the hypotheses of the cone-reduction theorem."""

    stage = "model"


class InvariantViolationError(CubicBrauerError):
    """An internal consistency check failed on otherwise valid input."""


# arith

class InvalidPrimeError(CubicBrauerError):
    stage = "arith"

    def __init__(self, p: object) -> None:
        super().__init__(f"expected a prime p >= 5, got {p!r}")
        self.p = p


class ZeroPolynomialError(CubicBrauerError):
    stage = "arith"


class NotAUnitError(CubicBrauerError):
    """Raised when inverting an element of positive valuation."""

    stage = "arith"

    def __init__(self, valuation: int) -> None:
        super().__init__(f"element has valuation {valuation} and is not a unit")
        self.valuation = valuation


class PrecisionExhaustedError(CubicBrauerError):
    stage = "arith"


class NotIntegralError(CubicBrauerError):
    stage = "arith"


# lattice

class PairingNotPreservedError(CubicBrauerError):
    stage = "lattice"

    def __init__(self, pair: tuple[int, int], expected: int, found: int) -> None:
        super().__init__(
            f"permutation changes the intersection of lines {pair}: {expected} -> {found}"
        )
        self.pair = pair


class NoConsistentMatrixError(CubicBrauerError):
    stage = "lattice"


class SublatticeNotStableError(CubicBrauerError):
    stage = "lattice"


# curve

class CurveSingularError(CubicBrauerError):
    stage = "curve"


class PositiveDimensionalError(CubicBrauerError):
    stage = "curve"


class FlexesNotRationalError(CubicBrauerError):
    stage = "curve"

    def __init__(self, missing_degrees: list[int], k: int) -> None:
        super().__init__(
            f"flexes of residue degree {missing_degrees} are not rational over degree {k}"
        )
        self.missing_degrees = missing_degrees


class EnumerationTooLargeError(CubicBrauerError):
    stage = "curve"


class FlexCountError(CubicBrauerError):
    stage = "curve"


# model

class NotAConeError(CubicBrauerError):
    stage = "model"


class UnitConditionError(TheoremInapplicableError):
    """The coefficient of X3^3 in the residual cubic is divisible by p."""


class SDivisibilityError(TheoremInapplicableError):
    """3 divides the cone exponent s; the theorem does not cover this case."""


class PreconditionError(CubicBrauerError):
    stage = "model"


# lines

class JacobianSingularError(CubicBrauerError):
    stage = "lines"


class GroupingFailureError(CubicBrauerError):
    stage = "lines"


class ActionMismatchError(CubicBrauerError):
    stage = "lines"


class NoIsomorphismError(CubicBrauerError):
    stage = "lines"


# brauer

class InconsistentRelationsError(CubicBrauerError):
    stage = "brauer"


class KernelNotStableError(SublatticeNotStableError):
    stage = "brauer"


class DependentFunctionalsError(CubicBrauerError):
    stage = "brauer"


# cli

class InputError(CubicBrauerError):
    stage = "cli"


class ParseError(InputError):
    """Malformed form text; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column
