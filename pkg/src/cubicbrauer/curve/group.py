"""
The chord-tangent group law on a smooth plane cubic with a flex as origin.

P + Q is the third intersection of the line through O and the third
intersection of the line through P and Q. Finite groups are small here
(bounded by the enumeration cap), so structure and discrete logarithms
come from enumeration.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from sympy import divisors

from ..arith.finite_field import FieldElement, FiniteField
from ..errors import CurveSingularError, FlexesNotRationalError, InvariantViolationError
from .plane_cubic import CurvePoint, PlaneCubic, flexes, rational_points

logger = logging.getLogger(__name__)


def _cross(a: Sequence[FieldElement], b: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _combine(lam: FieldElement, u: Sequence[FieldElement], mu: FieldElement,
             v: Sequence[FieldElement]) -> CurvePoint:
    return CurvePoint.normalized([lam * a + mu * b for a, b in zip(u, v)])


def third_point(curve: PlaneCubic, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """The residual intersection of the line PQ (the tangent when P = Q)."""
    form = curve.over(p.field)
    if p != q:
        _, b, c, _ = form.restrict_to_line(p.coords, q.coords)
        if b.is_zero() and c.is_zero():
            raise CurveSingularError(f"the line through {p} and {q} lies on the curve")
        return _combine(c, p.coords, -b, q.coords)
    gradient = curve.gradient_at(p)
    if all(g.is_zero() for g in gradient):
        raise CurveSingularError(f"{p} is a singular point")
    field_ = p.field
    for i in range(3):
        unit = [field_.zero] * 3
        unit[i] = field_.one
        t = _cross(gradient, unit)
        if any(not x.is_zero() for x in _cross(t, p.coords)):
            break
    else:
        raise InvariantViolationError("no second point on the tangent line", stage="curve")
    _, _, c, d = form.restrict_to_line(p.coords, t)
    if c.is_zero() and d.is_zero():
        raise CurveSingularError(f"the tangent at {p} lies on the curve")
    return _combine(d, p.coords, -c, t)


@dataclass(frozen=True)
class Subgroup:
    elements: frozenset[CurvePoint]
    exponent: int

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def invariants(self) -> tuple[int, ...]:
        """Invariant factors (each > 1) of a group of rank at most two."""
        if self.order == 1:
            return ()
        a = self.order // self.exponent
        return (self.exponent,) if a == 1 else (a, self.exponent)

    def __contains__(self, point: object) -> bool:
        return point in self.elements


@dataclass(eq=False)
class CurveGroup:
    """
    The group of points over ``field`` with origin a rational flex.

    ``a`` divides ``b``, the order is a*b and ``generators`` are points of
    order b and (when a > 1) a, spanning a direct sum.
    """

    curve: PlaneCubic
    field: FiniteField
    origin: CurvePoint
    points: tuple[CurvePoint, ...]
    a: int
    b: int
    generators: tuple[CurvePoint, ...]
    _logs: dict[CurvePoint, tuple[int, ...]] = field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return len(self.points)

    @property
    def invariants(self) -> tuple[int, ...]:
        return tuple(d for d in (self.a, self.b) if d > 1)

    @property
    def generator_orders(self) -> tuple[int, ...]:
        return (self.b,) if len(self.generators) == 1 else (self.b, self.a)

    def add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        return third_point(self.curve, third_point(self.curve, p, q), self.origin)

    def neg(self, p: CurvePoint) -> CurvePoint:
        return third_point(self.curve, p, third_point(self.curve, self.origin, self.origin))

    def mul(self, n: int, p: CurvePoint) -> CurvePoint:
        if n < 0:
            return self.mul(-n, self.neg(p))
        result = self.origin
        base = p
        while n:
            if n & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            n >>= 1
        return result

    def sum(self, terms: Iterable[tuple[int, CurvePoint]]) -> CurvePoint:
        total = self.origin
        for n, p in terms:
            total = self.add(total, self.mul(n, p))
        return total

    def order_of(self, p: CurvePoint) -> int:
        for d in divisors(self.order):
            if self.mul(int(d), p) == self.origin:
                return int(d)
        raise InvariantViolationError(
            f"order of {p} does not divide the group order", stage="curve"
        )

    def discrete_log(self, p: CurvePoint) -> tuple[int, ...]:
        """Coordinates of p on ``generators`` (reduced modulo their orders)."""
        if not self._logs:
            g = self.generators
            row = self.origin
            for i in range(self.b):
                if len(g) == 1:
                    self._logs[row] = (i,)
                else:
                    col = row
                    for j in range(self.a):
                        self._logs[col] = (i, j)
                        col = self.add(col, g[1])
                row = self.add(row, g[0])
            if len(self._logs) != self.order:
                raise InvariantViolationError(
                    "generators do not span the group", stage="curve"
                )
        return self._logs[p]

    @cached_property
    def three_torsion(self) -> Subgroup:
        return three_torsion(self)


def origin_degree(curve: PlaneCubic) -> int:
    """Smallest k such that some flex is rational over F_{p^k}."""
    return min(d for _, d in flexes(curve))


def group_structure(curve: PlaneCubic, k: int | None = None) -> CurveGroup:
    """
    The group of F_{p^k}-points with a rational flex as origin.

    Without ``k`` the field is extended to origin_degree(curve). Raises
    FlexesNotRationalError when a given k carries no rational flex and
    EnumerationTooLargeError beyond the enumeration cap.
    """
    if k is None:
        k = origin_degree(curve)
        logger.debug("no k given; using F_%d^%d, the field of the first flex", curve.p, k)
    target = FiniteField.of(curve.p, k)
    rational = flexes(curve, target)
    if not rational:
        degrees = sorted({d for _, d in flexes(curve)})
        raise FlexesNotRationalError(degrees, k)
    origin = rational[0][0]
    points = tuple(rational_points(curve, target))
    n = len(points)
    q = target.order
    if (n - q - 1) ** 2 > 4 * q:
        raise InvariantViolationError(
            f"{n} points over {target} violates the Weil bound", stage="curve"
        )

    group = CurveGroup(curve, target, origin, points, 1, n, ())
    orders = {pt: group.order_of(pt) for pt in points}
    b = max(orders.values())
    a = n // b
    if b % a:
        raise InvariantViolationError(
            f"group of order {n} and exponent {b} is not of rank two", stage="curve"
        )
    first = next(pt for pt in points if orders[pt] == b)
    if a == 1:
        generators: tuple[CurvePoint, ...] = (first,)
    else:
        span = set()
        acc = origin
        for _ in range(b):
            span.add(acc)
            acc = group.add(acc, first)
        second = None
        for pt in points:
            if orders[pt] != a:
                continue
            multiples = [group.mul(j, pt) for j in range(1, a)]
            if not any(m in span for m in multiples):
                second = pt
                break
        if second is None:
            raise InvariantViolationError(
                "no complement to a cyclic subgroup of maximal order", stage="curve"
            )
        generators = (first, second)
    logger.debug("E(%s) has order %d with invariants (%d, %d)", target, n, a, b)
    return CurveGroup(curve, target, origin, points, a, b, generators)


def span_with_witnesses(
    group: CurveGroup, generators: Sequence[CurvePoint]
) -> dict[CurvePoint, tuple[int, ...]]:
    """Each element of the generated subgroup with a combination producing it."""
    found: dict[CurvePoint, tuple[int, ...]] = {group.origin: (0,) * len(generators)}
    queue = deque([group.origin])
    while queue:
        current = queue.popleft()
        for i, g in enumerate(generators):
            nxt = group.add(current, g)
            if nxt not in found:
                coeffs = list(found[current])
                coeffs[i] += 1
                found[nxt] = tuple(coeffs)
                queue.append(nxt)
    return found


def subgroup_of(group: CurveGroup, elements: Iterable[CurvePoint]) -> Subgroup:
    elems = frozenset(elements)
    exponent = 1
    for pt in elems:
        exponent = math.lcm(exponent, group.order_of(pt))
    return Subgroup(elems, exponent)


def three_torsion(group: CurveGroup) -> Subgroup:
    """Points P with 3P = O."""
    return subgroup_of(group, (pt for pt in group.points
                               if group.mul(3, pt) == group.origin))


def flex_difference_subgroup(
    group: CurveGroup,
) -> tuple[Subgroup, dict[CurvePoint, tuple[int, ...]]]:
    """
    Subgroup generated by the classes P_i - O of the nine flexes.

    All flexes must be rational over the group's field. The witnesses
    express every element through the flexes in their sorted order.
    """
    all_flexes = flexes(group.curve)
    missing = sorted({d for _, d in all_flexes if group.field.k % d})
    if missing:
        raise FlexesNotRationalError(missing, group.field.k)
    rational = [pt for pt, _ in flexes(group.curve, group.field)]
    witnesses = span_with_witnesses(group, rational)
    return subgroup_of(group, witnesses), witnesses
