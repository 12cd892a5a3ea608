"""
Plane cubic curves over F_p and their points over extensions.

Exact zero loci come from lex Groebner bases over GF(p) (one affine chart
plus the line at infinity), followed by univariate factorization over
F_{p^k}. In closure mode the extension degree grows until every coordinate
splits, so the returned field is a splitting field of the locus.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import sympy

from ..arith.finite_field import FieldElement, FiniteField
from ..arith.forms import HomogeneousForm
from ..arith.polynomials import FqPoly, ff_factor
from ..config import CubicBrauerConfig
from ..errors import (
    CurveSingularError,
    EnumerationTooLargeError,
    FlexCountError,
    PositiveDimensionalError,
)

logger = logging.getLogger(__name__)

GENS = sympy.symbols("x y z")


def embed(value: FieldElement, target: FiniteField) -> FieldElement:
    """Image of an element of F_p (or of ``target`` itself) in ``target``."""
    if value.field == target:
        return value
    if value.field.k == 1 and value.field.p == target.p:
        return target(value.coeffs[0])
    raise ValueError(f"no embedding of {value.field} into {target} is used here")


@dataclass(frozen=True)
class CurvePoint:
    """A projective point, normalized so its first nonzero coordinate is 1."""

    coords: tuple[FieldElement, ...]

    @classmethod
    def normalized(cls, coords: Sequence[FieldElement]) -> CurvePoint:
        for c in coords:
            if not c.is_zero():
                inv = c.inverse()
                return cls(tuple(x * inv for x in coords))
        raise ValueError("the zero vector is not a projective point")

    @property
    def field(self) -> FiniteField:
        return self.coords[0].field

    def degree(self) -> int:
        d = 1
        for c in self.coords:
            d = math.lcm(d, c.degree())
        return d

    def frobenius(self) -> CurvePoint:
        return CurvePoint(tuple(c.frobenius() for c in self.coords))

    def sort_key(self) -> tuple[int, ...]:
        return tuple(c.to_int() for c in self.coords)

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class CommonZeros:
    points: tuple[CurvePoint, ...]
    field: FiniteField


@dataclass(frozen=True)
class SmoothnessCertificate:
    smooth: bool
    singular_points: tuple[CurvePoint, ...]
    field_degree: int
    positive_dimensional: bool = False

    def __bool__(self) -> bool:
        return self.smooth

    def describe(self) -> str:
        if self.smooth:
            return ("no common zero of f and its partials over the algebraic closure "
                    f"(split over degree {self.field_degree})")
        if self.positive_dimensional:
            return "singular along a curve"
        return "singular at " + ", ".join(str(pt) for pt in self.singular_points)


@dataclass(eq=False)
class PlaneCubic:
    """A nonzero ternary cubic over F_p (the Hessian may be the zero form)."""

    form: HomogeneousForm
    _extended: dict[FiniteField, HomogeneousForm] = field(
        default_factory=dict, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.form.nvars != 3 or self.form.degree != 3:
            raise ValueError("a plane cubic needs a degree-3 form in 3 variables")
        if not isinstance(self.form.ring, FiniteField) or self.form.ring.k != 1:
            raise ValueError("plane cubics are defined over a prime field")

    @property
    def p(self) -> int:
        return self.form.ring.p

    @property
    def prime_field(self) -> FiniteField:
        return self.form.ring

    def over(self, target: FiniteField) -> HomogeneousForm:
        """The same form with coefficients in ``target``."""
        if target not in self._extended:
            self._extended[target] = self.form.map_coefficients(
                lambda c: embed(c, target), target
            )
        return self._extended[target]

    def evaluate(self, point: CurvePoint) -> FieldElement:
        return self.over(point.field).evaluate(point.coords)

    def gradient_at(self, point: CurvePoint) -> tuple[FieldElement, ...]:
        form = self.over(point.field)
        return tuple(form.partial(i).evaluate(point.coords) for i in range(3))

    def __str__(self) -> str:
        return str(self.form)


def _as_int(c: FieldElement) -> int:
    return c.coeffs[0]


def specialize(form: HomogeneousForm, target: FiniteField,
               values: Sequence[FieldElement | None]) -> FqPoly:
    """The univariate polynomial left after fixing every variable but one."""
    free = [i for i, v in enumerate(values) if v is None]
    if len(free) != 1:
        raise ValueError("exactly one variable must stay free")
    t = free[0]
    coeffs = [target.zero] * (form.degree + 1)
    for exps, c in form.terms:
        term = embed(c, target)
        for i, e in enumerate(exps):
            if i != t and e:
                value = values[i]
                assert value is not None
                term = term * value**e
        coeffs[exps[t]] = coeffs[exps[t]] + term
    return FqPoly(target, tuple(coeffs))


def _roots_and_needs(poly: FqPoly) -> tuple[list[FieldElement], int]:
    """Roots of poly in its field and the lcm of the degrees of nonlinear factors."""
    roots: list[FieldElement] = []
    need = 1
    for factor, _ in ff_factor(poly):
        if factor.degree == 1:
            roots.append(-factor.coeffs[0])
        else:
            need = math.lcm(need, factor.degree)
    return roots, need


def _poly_at(g: sympy.Poly, y0: FieldElement, target: FiniteField) -> FqPoly:
    coeffs: dict[int, FieldElement] = {}
    for (ex, ey), c in g.terms():
        term = target(int(c)) * y0**ey
        coeffs[ex] = coeffs.get(ex, target.zero) + term
    size = max(coeffs, default=-1) + 1
    return FqPoly(target, tuple(coeffs.get(i, target.zero) for i in range(size)))


class _ZeroSolver:
    """Exact common zeros of ternary forms over F_p, specialised per field."""

    def __init__(self, forms: Sequence[HomogeneousForm]) -> None:
        nonzero = [f for f in forms if not f.is_zero()]
        if not nonzero:
            raise PositiveDimensionalError("every form vanishes identically")
        self.forms = nonzero
        self.p = nonzero[0].ring.p
        x, y, z = GENS
        affine = [sympy.expand(f.to_sympy(GENS, _as_int).subs(z, 1)) for f in nonzero]
        affine = [e for e in affine if e != 0]
        if not affine:
            raise PositiveDimensionalError("the chart z = 1 lies in the zero locus")
        self.basis = sympy.groebner(affine, x, y, modulus=self.p, order="lex")
        self.unit = any(g.is_ground and not g.is_zero for g in self.basis.polys)
        self.univariate: sympy.Poly | None = None
        if not self.unit:
            candidates = [g for g in self.basis.polys if g.degree(x) <= 0]
            if not candidates:
                raise PositiveDimensionalError("zero locus contains an affine curve")
            self.univariate = candidates[0]

    def solve(self, target: FiniteField) -> tuple[list[CurvePoint], int]:
        need = 1
        points: list[CurvePoint] = []
        one, zero = target.one, target.zero
        if self.univariate is not None:
            ypoly = self._y_polynomial(target)
            y_roots, n = _roots_and_needs(ypoly)
            need = math.lcm(need, n)
            for y0 in y_roots:
                acc = FqPoly(target, ())
                for g in self.basis.polys:
                    acc = acc.gcd(_poly_at(g, y0, target))
                if acc.is_zero():
                    raise PositiveDimensionalError("zero locus contains a horizontal line")
                x_roots, n = _roots_and_needs(acc)
                need = math.lcm(need, n)
                points.extend(CurvePoint.normalized((x0, y0, one)) for x0 in x_roots)
        line = FqPoly(target, ())
        for f in self.forms:
            line = line.gcd(specialize(f, target, [None, one, zero]))
        if line.is_zero():
            raise PositiveDimensionalError("the line z = 0 lies in the zero locus")
        x_roots, n = _roots_and_needs(line)
        need = math.lcm(need, n)
        points.extend(CurvePoint.normalized((x0, one, zero)) for x0 in x_roots)
        base = self.forms[0].ring
        if all(f.evaluate([base.one, base.zero, base.zero]).is_zero() for f in self.forms):
            points.append(CurvePoint((one, zero, zero)))
        points.sort(key=CurvePoint.sort_key)
        return points, need

    def _y_polynomial(self, target: FiniteField) -> FqPoly:
        assert self.univariate is not None
        coeffs: dict[int, FieldElement] = {}
        for (_, ey), c in self.univariate.terms():
            coeffs[ey] = coeffs.get(ey, target.zero) + target(int(c))
        size = max(coeffs, default=-1) + 1
        return FqPoly(target, tuple(coeffs.get(i, target.zero) for i in range(size)))


def projective_common_zeros(
    forms: Sequence[HomogeneousForm], target: FiniteField | None = None
) -> CommonZeros:
    """
    Common zeros in P^2 of ternary forms over F_p.

    With ``target`` the zeros rational over it are returned; otherwise the
    field grows until all zeros are rational and that field is returned.
    Raises PositiveDimensionalError when the locus contains a curve.
    """
    solver = _ZeroSolver(forms)
    if target is not None:
        points, _ = solver.solve(target)
        return CommonZeros(tuple(points), target)
    cap = CubicBrauerConfig.max_extension_degree()
    k = 1
    while True:
        current = FiniteField.of(solver.p, k)
        points, need = solver.solve(current)
        if need == 1:
            return CommonZeros(tuple(points), current)
        k *= need
        logger.debug("common zeros need degree %d over F_%d", k, solver.p)
        if k > cap:
            raise EnumerationTooLargeError(
                f"zero locus needs F_{solver.p}^{k}, beyond the degree cap {cap}"
            )


def is_smooth(curve: PlaneCubic) -> SmoothnessCertificate:
    """Exact smoothness test: no common zero of f and its partials over F_p-bar."""
    if curve.form.is_zero():
        raise CurveSingularError("the zero form does not define a curve")
    forms = [curve.form, *curve.form.gradient()]
    try:
        zeros = projective_common_zeros(forms)
    except PositiveDimensionalError:
        return SmoothnessCertificate(False, (), 1, positive_dimensional=True)
    return SmoothnessCertificate(not zeros.points, zeros.points, zeros.field.k)


def hessian(curve: PlaneCubic) -> PlaneCubic:
    """det of the matrix of second partials (the zero form when degenerate)."""
    h = [[curve.form.partial(i).partial(j) for j in range(3)] for i in range(3)]
    det = (
        h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
        - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
        + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
    )
    return PlaneCubic(det)


def flexes(curve: PlaneCubic, target: FiniteField | None = None
           ) -> list[tuple[CurvePoint, int]]:
    """
    Flexes with their residue degrees.

    Without ``target`` all nine are returned over their splitting field;
    with it, only those rational over ``target``.
    """
    if not is_smooth(curve):
        raise CurveSingularError(f"{curve} is singular")
    h = hessian(curve)
    zeros = projective_common_zeros([curve.form, h.form], target)
    if target is None and len(zeros.points) != 9:
        raise FlexCountError(f"found {len(zeros.points)} flexes instead of 9")
    return [(pt, pt.degree()) for pt in zeros.points]


def flex_splitting_field(curve: PlaneCubic) -> FiniteField:
    """Smallest F_{p^k} over which every flex is rational."""
    degree = 1
    for _, d in flexes(curve):
        degree = math.lcm(degree, d)
    return FiniteField.of(curve.p, degree)


def rational_points(curve: PlaneCubic, target: FiniteField) -> list[CurvePoint]:
    """All points over ``target`` by enumeration of one coordinate."""
    cap = CubicBrauerConfig.enumeration_cap()
    if target.order > cap:
        raise EnumerationTooLargeError(f"|{target}| exceeds the enumeration cap {cap}")
    form = curve.over(target)
    one, zero = target.one, target.zero
    points: list[CurvePoint] = []
    for x in target.elements():
        poly = specialize(form, target, [x, None, one])
        if poly.is_zero():
            raise PositiveDimensionalError(f"{curve} contains the line x = {x} z")
        points.extend(CurvePoint.normalized((x, y, one)) for y in poly.roots())
    at_infinity = specialize(form, target, [None, one, zero])
    if at_infinity.is_zero():
        raise PositiveDimensionalError(f"{curve} contains the line z = 0")
    points.extend(CurvePoint.normalized((x, one, zero)) for x in at_infinity.roots())
    if form.evaluate([one, zero, zero]).is_zero():
        points.append(CurvePoint((one, zero, zero)))
    points.sort(key=CurvePoint.sort_key)
    return points


def point_count(curve: PlaneCubic, k: int = 1) -> int:
    return len(rational_points(curve, FiniteField.of(curve.p, k)))
