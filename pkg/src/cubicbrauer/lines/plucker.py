"""
Lines in P^3 by Pluecker coordinates, over F_q or over W[Pi].

Coordinates are ordered p01, p02, p03, p12, p13, p23 with
p_ij = u_i v_j - u_j v_i for spanning vectors u, v. A normalized vector
has minimal valuation 0 and its first unit coordinate equal to 1.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from ..arith.eisenstein import EisensteinElement
from ..arith.finite_field import FieldElement
from ..errors import PrecisionExhaustedError

PLUCKER_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

Row = tuple[Any, ...]


def plucker(u: Sequence[Any], v: Sequence[Any]) -> tuple[Any, ...]:
    return tuple(u[i] * v[j] - u[j] * v[i] for i, j in PLUCKER_PAIRS)


def plucker_pairing(a: Sequence[Any], b: Sequence[Any]) -> Any:
    """The bilinear form whose vanishing means the two lines meet."""
    return (a[0] * b[5] - a[1] * b[4] + a[2] * b[3]
            + a[3] * b[2] - a[4] * b[1] + a[5] * b[0])


def _valuation(x: Any) -> int:
    if isinstance(x, FieldElement):
        return 0 if not x.is_zero() else math.inf  # type: ignore[return-value]
    if x.is_zero():
        return math.inf  # type: ignore[return-value]
    return x.valuation()


def normalize(coords: Sequence[Any]) -> tuple[Any, ...]:
    """Scale to minimal valuation 0 with the first unit coordinate equal to 1."""
    if all(c.is_zero() for c in coords):
        raise PrecisionExhaustedError("all Pluecker coordinates vanish to the working precision")
    v = min(_valuation(c) for c in coords)
    if v and not isinstance(coords[0], FieldElement):
        coords = [c.shift(-v) for c in coords]
    pivot = next(c for c in coords if _valuation(c) == 0)
    inv = pivot.inverse()
    return tuple(c * inv for c in coords)


def saturate_rows(u: Sequence[EisensteinElement], v: Sequence[EisensteinElement]
                  ) -> tuple[Row, Row]:
    """
    Rows spanning the saturation of the module spanned by u and v.

    The first row gets a unit entry c, the second loses its c-entry and is
    divided by its content, so the minor on c and the second row's unit
    column is a unit.
    """
    rows = [list(u), list(v)]
    best = min(((_valuation(x), r, c) for r in range(2) for c, x in enumerate(rows[r])),
               key=lambda t: (t[0], t[1], t[2]))
    val, r, c = best
    if val is math.inf:
        raise PrecisionExhaustedError("spanning rows vanish to the working precision")
    first = [x.shift(-val) for x in rows[r]] if val else rows[r]
    other = rows[1 - r]
    factor = other[c] * first[c].inverse()
    second = [y - factor * x for x, y in zip(first, other)]
    w = min(_valuation(y) for y in second)
    if w is math.inf:
        raise PrecisionExhaustedError("spanning rows are dependent to the working precision")
    if w:
        second = [y.shift(-w) for y in second]
    return tuple(first), tuple(second)


@dataclass(frozen=True, eq=False)
class ProjectiveLine:
    """
    A line with a saturated spanning pair and its normalized Pluecker vector.
    """

    rows: tuple[Row, Row]
    coords: tuple[Any, ...]

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def from_rows(cls, u: Sequence[Any], v: Sequence[Any]) -> ProjectiveLine:
        if isinstance(u[0], FieldElement):
            rows: tuple[Row, Row] = (tuple(u), tuple(v))
        else:
            rows = saturate_rows(u, v)
        return cls(rows, normalize(plucker(*rows)))

    @property
    def over_field(self) -> bool:
        return isinstance(self.coords[0], FieldElement)

    def chart(self) -> tuple[int, int]:
        """The pair (i, j) of the first unit Pluecker coordinate."""
        for (i, j), c in zip(PLUCKER_PAIRS, self.coords):
            if _valuation(c) == 0:
                return i, j
        raise PrecisionExhaustedError("no unit Pluecker coordinate")

    def reduce(self) -> ProjectiveLine:
        if self.over_field:
            return self
        u, v = ([x.reduce() for x in row] for row in self.rows)
        return ProjectiveLine.from_rows(u, v)

    def key(self) -> tuple[int, ...]:
        """Hashable key of a line over a finite field."""
        if not self.over_field:
            raise ValueError("keys exist for lines over finite fields only")
        return tuple(c.to_int() for c in self.coords)

    def degree(self) -> int:
        """Degree over F_p of the field of definition of a line over F_q."""
        d = 1
        for c in self.coords:
            d = math.lcm(d, c.degree())
        return d

    def frobenius(self) -> ProjectiveLine:
        u, v = ([x.frobenius() for x in row] for row in self.rows)
        return ProjectiveLine.from_rows(u, v)

    def scale_coordinates(self, factors: Sequence[Any]) -> ProjectiveLine:
        """Image under the diagonal map x_i -> factors[i] * x_i."""
        u, v = ([x * f for x, f in zip(row, factors)] for row in self.rows)
        return ProjectiveLine.from_rows(u, v)

    def agrees(self, other: ProjectiveLine, threshold: int) -> bool:
        if self.over_field:
            return self.key() == other.key()
        return all(a.agrees_to(b, threshold) for a, b in zip(self.coords, other.coords))

    def relation(self) -> Any:
        """The Pluecker quadric p01 p23 - p02 p13 + p03 p12, zero on lines."""
        c = self.coords
        return c[0] * c[5] - c[1] * c[4] + c[2] * c[3]

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) if self.over_field else repr(c) for c in self.coords) + "]"


def lines_meet(a: ProjectiveLine, b: ProjectiveLine, threshold: int | None = None) -> bool:
    """
    True when the lines meet: over a field exactly, over W[Pi] when the
    pairing has valuation at least ``threshold``.
    """
    value = plucker_pairing(a.coords, b.coords)
    if isinstance(value, FieldElement):
        return value.is_zero()
    if threshold is None:
        raise ValueError("a valuation threshold is needed over W[Pi]")
    return value.is_zero() or value.valuation() >= threshold


def plane_through(line: ProjectiveLine, point: Sequence[Any]) -> tuple[Any, ...]:
    """Coefficients of the plane spanned by a line and a point off it."""
    rows = [line.rows[0], line.rows[1], tuple(point)]
    cofactors = []
    for omit in range(4):
        cols = [c for c in range(4) if c != omit]
        m = [[row[c] for c in cols] for row in rows]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        cofactors.append(det if omit % 2 == 0 else -det)
    return normalize(cofactors)


def on_plane(plane: Sequence[Any], point: Sequence[Any], threshold: int | None = None) -> bool:
    value = plane[0] * point[0]
    for a, x in zip(plane[1:], point[1:]):
        value = value + a * x
    if isinstance(value, FieldElement):
        return value.is_zero()
    return value.is_zero() or value.valuation() >= (threshold or 0)
