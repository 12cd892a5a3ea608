"""
The smooth triple cover f(Y0, Y1, Y2) + a Y3^3 and its 27 lines.

Through every flex P of the plane cubic f = 0 the plane spanned by the
inflectional tangent and (0:0:0:1) meets the surface in three lines: on
lambda P + mu Q + nu E3 the form is c mu^3 + a nu^3 with c = f(Q), so the
lines are span(P, rho Q + E3) for the three cube roots rho of -a/c.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from ..arith.eisenstein import EisensteinRing
from ..arith.finite_field import FieldElement, FiniteField, cube_roots_of_unity, sort_key
from ..arith.forms import HomogeneousForm
from ..arith.polynomials import cube_roots
from ..config import CubicBrauerConfig
from ..curve.plane_cubic import CurvePoint, PlaneCubic, flex_splitting_field, flexes
from ..errors import (
    EnumerationTooLargeError,
    FlexCountError,
    InvariantViolationError,
    PreconditionError,
    SDivisibilityError,
    UnitConditionError,
)
from ..model.cone import ConeNormalForm
from .plucker import ProjectiveLine

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverLine:
    """A line on the special fibre of the smooth model, with its flex."""

    line: ProjectiveLine
    flex_index: int
    flex: CurvePoint
    rho: FieldElement

    @property
    def degree(self) -> int:
        return self.line.degree()


def _tangent_data(curve: PlaneCubic, target: FiniteField
                  ) -> list[tuple[CurvePoint, tuple[FieldElement, ...], FieldElement]]:
    """(flex P, second point Q on its tangent, f(Q)) for each rational flex."""
    form = curve.over(target)
    out = []
    for point, _ in flexes(curve, target):
        gradient = curve.gradient_at(point)
        q = None
        for i in range(3):
            unit = [target.zero] * 3
            unit[i] = target.one
            t = (gradient[1] * unit[2] - gradient[2] * unit[1],
                 gradient[2] * unit[0] - gradient[0] * unit[2],
                 gradient[0] * unit[1] - gradient[1] * unit[0])
            cross = (t[1] * point.coords[2] - t[2] * point.coords[1],
                     t[2] * point.coords[0] - t[0] * point.coords[2],
                     t[0] * point.coords[1] - t[1] * point.coords[0])
            if any(not x.is_zero() for x in cross):
                q = t
                break
        if q is None:
            raise InvariantViolationError(
                f"no second point on the tangent at {point}", stage="lines"
            )
        c = form.evaluate(q)
        if c.is_zero():
            raise InvariantViolationError(
                f"the tangent at {point} lies on the curve", stage="lines"
            )
        out.append((point, q, c))
    return out


def working_field(curve: PlaneCubic, a_residue: int) -> FiniteField:
    """
    Smallest field carrying every flex, the cube roots of unity and a cube
    root of each -a/f(Q); all 27 lines are rational over it.
    """
    p = curve.p
    if a_residue % p == 0:
        raise UnitConditionError(f"a = {a_residue} vanishes modulo {p}")
    base = flex_splitting_field(curve).k
    cap = CubicBrauerConfig.max_extension_degree()
    for m in (1, 2, 3, 6):
        k = base * m
        if k > cap:
            break
        if (p**k - 1) % 3:
            continue
        target = FiniteField.of(p, k)
        a = target(a_residue)
        if all((-a / c).is_cube() for _, _, c in _tangent_data(curve, target)):
            logger.debug("lines are rational over %s", target)
            return target
    raise EnumerationTooLargeError(
        f"the 27 lines need an extension of F_{p} beyond degree {cap}", stage="lines"
    )


def lines_on_triple_cover(curve: PlaneCubic, a_residue: int,
                          target: FiniteField | None = None) -> list[CoverLine]:
    """The 27 lines of f + a Y3^3 = 0, three per flex, in a fixed order."""
    target = target or working_field(curve, a_residue)
    if a_residue % curve.p == 0:
        raise UnitConditionError(f"a = {a_residue} vanishes modulo {curve.p}")
    a = target(a_residue)
    zero, one = target.zero, target.one
    data = _tangent_data(curve, target)
    if len(data) != 9:
        raise FlexCountError(f"{len(data)} flexes are rational over {target}, expected 9")
    cover = triple_cover_form(curve.over(target), a)
    out: list[CoverLine] = []
    for index, (point, q, c) in enumerate(data):
        rhos = sorted(cube_roots(-a / c), key=sort_key)
        if len(rhos) != 3:
            raise FlexCountError(f"-a/c = {-a / c} has {len(rhos)} cube roots in {target}")
        for rho in rhos:
            u = (*point.coords, zero)
            v = (rho * q[0], rho * q[1], rho * q[2], one)
            line = ProjectiveLine.from_rows(u, v)
            if any(not x.is_zero() for x in cover.restrict_to_line(u, v)):
                raise InvariantViolationError(
                    f"line {line} is not on the triple cover", stage="lines"
                )
            out.append(CoverLine(line, index, point, rho))
    return out


def triple_cover_form(base: HomogeneousForm, a: FieldElement) -> HomogeneousForm:
    terms = {e + (0,): c for e, c in base.terms}
    terms[(0, 0, 0, 3)] = a
    return HomogeneousForm.from_dict(base.ring, 4, 3, terms)


def construct_smooth_cover_model(nf: ConeNormalForm, ring: EisensteinRing) -> HomogeneousForm:
    """
    F(Pi^s Y0, Pi^s Y1, Pi^s Y2, Y3) / Pi^(3s) over W[Pi].

    A monomial of g with Y3-degree e keeps the coefficient g_c Pi^(s(3-e));
    f is unchanged, so the reduction is f + a Y3^3.
    """
    if not nf.a_is_unit:
        raise UnitConditionError(f"a = {nf.a} is divisible by {nf.p}")
    if nf.s % 3 == 0:
        raise SDivisibilityError(f"3 divides s = {nf.s}")
    if nf.s not in (1, 2):
        raise PreconditionError(f"reduce s below 3 first (s = {nf.s})")
    coeffs = {e + (0,): ring.coerce(Fraction(c)) for e, c in nf.f.terms}
    for e, c in nf.g.terms:
        coeffs[e] = ring.coerce(Fraction(c)).shift(nf.s * (3 - e[3]))
    return HomogeneousForm.from_dict(ring, 4, 3, coeffs)


def omega_residue(target: FiniteField) -> FieldElement:
    """The chosen primitive cube root of unity of the working field."""
    return cube_roots_of_unity(target)[0]
