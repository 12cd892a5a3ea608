"""
Surjectivity of independent functionals on an F_3-vector space.

Independent functionals a_1..a_n extend to a basis of the dual space; the
dual basis v_1..v_m then gives a preimage x_1 v_1 + ... + x_n v_n of any
target (x_1, ..., x_n).
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from ..arith.modular import inverse_mod, rank_mod
from ..errors import DependentFunctionalsError

FIELD_ORDER = 3


@dataclass(frozen=True)
class PreimageOracle:
    functionals: tuple[tuple[int, ...], ...]
    dual_basis: tuple[tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.dual_basis)

    def evaluate(self, vector: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * x for a, x in zip(f, vector)) % FIELD_ORDER
                     for f in self.functionals)

    def preimage(self, target: Sequence[int]) -> tuple[int, ...]:
        if len(target) != len(self.functionals):
            raise ValueError(f"expected {len(self.functionals)} target values")
        out = [0] * self.dimension
        for x, v in zip(target, self.dual_basis):
            out = [(o + x * c) % FIELD_ORDER for o, c in zip(out, v)]
        return tuple(out)

    def verify_exhaustive(self) -> bool:
        """Every target is hit, checked through the evaluation of its preimage."""
        return all(
            self.evaluate(self.preimage(target)) == target
            for target in itertools.product(range(FIELD_ORDER), repeat=len(self.functionals))
        )


def dual_surjectivity(functionals: Sequence[Sequence[int]], dimension: int) -> PreimageOracle:
    """
    Preimage oracle for independent functionals on F_3^dimension.

    Raises DependentFunctionalsError when the functionals are dependent.
    """
    rows = [[int(x) % FIELD_ORDER for x in f] for f in functionals]
    if any(len(r) != dimension for r in rows):
        raise ValueError(f"functionals must have {dimension} coordinates")
    if rank_mod(rows, FIELD_ORDER) < len(rows):
        raise DependentFunctionalsError(
            f"{len(rows)} functionals span a space of dimension {rank_mod(rows, FIELD_ORDER)}"
        )
    basis = [r[:] for r in rows]
    for j in range(dimension):
        if len(basis) == dimension:
            break
        unit = [int(i == j) for i in range(dimension)]
        if rank_mod(basis + [unit], FIELD_ORDER) > len(basis):
            basis.append(unit)
    inverse = inverse_mod(basis, FIELD_ORDER)
    dual = tuple(tuple(inverse[r][c] for r in range(dimension)) for c in range(dimension))
    return PreimageOracle(tuple(tuple(r) for r in rows), dual)


@dataclass(frozen=True)
class SurjectivitySweep:
    dimension: int
    independent: int
    dependent: int
    failures: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def holds(self) -> bool:
        return self.independent > 0 and not self.failures


def _projective_points(dimension: int) -> list[tuple[int, ...]]:
    """Nonzero vectors of F_3^dimension whose first nonzero entry is 1."""
    return [v for v in itertools.product(range(FIELD_ORDER), repeat=dimension)
            if any(v) and next(x for x in v if x) == 1]


def verify_surjectivity(dimension: int, max_functionals: int = 3) -> SurjectivitySweep:
    """
    Run dual_surjectivity on every family of at most ``max_functionals``
    functionals on F_3^dimension, up to scaling each functional.

    Independent families must hit every target and dependent families must
    be rejected; any family doing otherwise is listed in ``failures``.
    """
    points = _projective_points(dimension)
    independent = dependent = 0
    failures = []
    for n in range(1, max_functionals + 1):
        for family in itertools.combinations(points, n):
            rows = [list(f) for f in family]
            expected = rank_mod(rows, FIELD_ORDER) == n
            try:
                ok = dual_surjectivity(rows, dimension).verify_exhaustive() and expected
            except DependentFunctionalsError:
                dependent += 1
                ok = not expected
            else:
                independent += 1
            if not ok:
                failures.append(family)
    return SurjectivitySweep(dimension, independent, dependent, tuple(failures))
