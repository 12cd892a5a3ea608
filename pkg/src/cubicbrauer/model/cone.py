"""
Normal forms for surfaces whose reduction is a cone over a smooth cubic.

After a unimodular change of coordinates putting the vertex at (0:0:0:1)
the form reads F = f(X0, X1, X2) + p^s g(X0, X1, X2, X3) where g collects
the monomials involving X3 and s is as large as possible.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from sympy import multiplicity

from ..arith.finite_field import FiniteField
from ..arith.forms import QQ, HomogeneousForm
from ..arith.padic import rational_mod, rational_valuation
from ..config import CubicBrauerConfig
from ..curve.plane_cubic import PlaneCubic
from ..errors import (
    EnumerationTooLargeError,
    InvariantViolationError,
    NotAConeError,
    PreconditionError,
    UnitConditionError,
)
from ..lattice.snf import integer_inverse
from .surface import (
    CubicSurfaceModel,
    ReductionType,
    SurfaceSmoothness,
    classify_reduction,
    cone_coordinate_change,
    drop_last_variable,
    is_smooth_surface,
)

logger = logging.getLogger(__name__)

CUBE = (0, 0, 0, 3)


def _split_by_last_variable(form: HomogeneousForm) -> tuple[HomogeneousForm, HomogeneousForm]:
    free = {e: c for e, c in form.terms if not e[3]}
    rest = {e: c for e, c in form.terms if e[3]}
    return (HomogeneousForm.from_dict(form.ring, 4, 3, free),
            HomogeneousForm.from_dict(form.ring, 4, 3, rest))


def _embed_ternary(f: HomogeneousForm) -> HomogeneousForm:
    return HomogeneousForm.from_dict(f.ring, 4, 3, {e + (0,): c for e, c in f.terms})


@dataclass(frozen=True)
class ConeNormalForm:
    """
    F = f + p^s g in the coordinates given by ``transform``.

    ``transform`` is the unimodular integer matrix T with F_nf(x) =
    F_in(T x); ``scalings`` counts the applications of X_i -> p X_i
    (i <= 2) followed by division by p^3 made since.
    """

    f: HomogeneousForm
    g: HomogeneousForm
    s: int
    a: Fraction
    transform: tuple[tuple[int, ...], ...]
    p: int
    scalings: int = 0

    @property
    def form(self) -> HomogeneousForm:
        return _embed_ternary(self.f) + self.g.scale(Fraction(self.p) ** self.s)

    @property
    def a_is_unit(self) -> bool:
        return self.a != 0 and rational_valuation(self.a, self.p) == 0

    @property
    def a_residue(self) -> int:
        return rational_mod(self.a, self.p, self.p)

    def reduced_base(self) -> HomogeneousForm:
        fp = FiniteField.of(self.p)
        return self.f.map_coefficients(fp.coerce, fp)

    def original_form(self) -> HomogeneousForm:
        """Undo the coordinate change (only meaningful before any scaling)."""
        if self.scalings:
            raise PreconditionError("the coordinate change is not invertible after scaling")
        inverse = integer_inverse([list(row) for row in self.transform])
        return self.form.substitute([[int(x) for x in row] for row in inverse])

    def model(self) -> CubicSurfaceModel:
        return CubicSurfaceModel(self.form, self.p)


@dataclass(frozen=True)
class GoodReductionCertificate:
    """A model in the same geometric class whose special fibre is smooth."""

    model: CubicSurfaceModel
    smoothness: SurfaceSmoothness
    scalings: int

    def describe(self) -> str:
        return (f"after {self.scalings} scaling step(s) the model {self.model} has smooth "
                f"special fibre ({self.smoothness.describe()})")


def cone_normal_form(model: CubicSurfaceModel,
                     reduction: ReductionType | None = None) -> ConeNormalForm:
    """Move the vertex to (0:0:0:1) and read off f, g, s and a."""
    reduction = reduction or classify_reduction(model)
    if not reduction.is_cone or reduction.vertex is None:
        raise NotAConeError(f"the reduction is {reduction.kind.value}, not a cone")
    p = model.p
    change = cone_coordinate_change(list(reduction.vertex))
    moved = model.form.substitute(change)
    free, rest = _split_by_last_variable(moved)
    if rest.is_zero():
        raise NotAConeError("the surface is a cone over Q; it involves no X3 after the change")
    s = min(rational_valuation(c, p) or 0 for _, c in rest.terms)
    if s < 1:
        raise NotAConeError("an X3 monomial has a unit coefficient; the reduction is not a cone")
    g = rest.scale(Fraction(p) ** (-s))
    f = drop_last_variable(free)
    nf = ConeNormalForm(f, g, s, g.coefficient(CUBE), tuple(map(tuple, change)), p)
    logger.debug("cone normal form s=%d a=%s with f = %s", s, nf.a, f)
    return nf


def reduce_s(nf: ConeNormalForm) -> ConeNormalForm | GoodReductionCertificate:
    """
    One step of X_i -> p X_i (i <= 2) and division by p^3.

    The monomial of g with X3-degree e picks up p^(3-e), so s drops by 3
    and a is unchanged. At s = 0 the smooth special fibre is certified.
    """
    if not nf.a_is_unit:
        raise UnitConditionError(f"a = {nf.a} is divisible by {nf.p}")
    if nf.s < 3:
        raise PreconditionError(f"reduce_s needs s >= 3, got s = {nf.s}")
    p = nf.p
    g = HomogeneousForm.from_dict(
        QQ, 4, 3, {e: c * p ** (3 - e[3]) for e, c in nf.g.terms}
    )
    reduced = ConeNormalForm(nf.f, g, nf.s - 3, nf.a, nf.transform, p, nf.scalings + 1)
    logger.info("reduced s from %d to %d", nf.s, reduced.s)
    if reduced.s:
        return reduced
    model = reduced.model()
    fp = FiniteField.of(p)
    smoothness = is_smooth_surface(model.form.map_coefficients(fp.coerce, fp))
    if not smoothness.smooth:
        raise InvariantViolationError(
            f"triple cover {model} is unexpectedly singular mod {p}", stage="model"
        )
    return GoodReductionCertificate(model, smoothness, reduced.scalings)


def reduce_fully(nf: ConeNormalForm) -> ConeNormalForm | GoodReductionCertificate:
    """Apply ``reduce_s`` until s < 3 or the reduction is smooth."""
    current: ConeNormalForm | GoodReductionCertificate = nf
    while isinstance(current, ConeNormalForm) and current.s >= 3:
        current = reduce_s(current)
    return current


def is_good_plane(plane: Sequence[int | Fraction], nf: ConeNormalForm) -> bool:
    """A plane is good when its reduction misses the vertex (0:0:0:1)."""
    if len(plane) != 4:
        raise ValueError("a plane in P^3 has four coefficients")
    p = nf.p
    residues = [rational_mod(c, p, p) for c in plane]
    if not any(residues):
        raise PreconditionError("the plane vanishes modulo p")
    return residues[3] != 0


def good_plane_section(nf: ConeNormalForm) -> PlaneCubic:
    """The X3 = 0 section of the special fibre, the smooth cubic f mod p."""
    return PlaneCubic(nf.reduced_base())


@dataclass(frozen=True)
class VertexCheckResult:
    verified: bool
    searched: int
    counterexample: tuple[int, int, int, int] | None = None
    depth: int = 2

    def describe(self) -> str:
        if self.verified:
            return (f"no solution of F = 0 mod p^3 with x_i = p*y_i (i <= 2), x3 = 1 and "
                    f"y_i modulo p^{self.depth}, among {self.searched} residues")
        return f"F vanishes mod p^3 at {self.counterexample}"


def vertex_no_lift_check(nf: ConeNormalForm) -> VertexCheckResult:
    """
    Verify that no point reducing to the vertex solves F modulo p^3.

    Points with x3 a unit are scaled to x3 = 1 and x_i = p y_i. A monomial
    of F(p y, 1) whose coefficient has valuation v only sees y modulo
    p^(3 - v), so y runs over residues modulo the largest such power. For a
    cone normal form every monomial involving y carries p^(s+1), which
    leaves p^3 candidates at most.
    """
    if nf.s not in (1, 2):
        raise PreconditionError(f"the vertex check needs s in {{1, 2}}, got s = {nf.s}")
    if not nf.a_is_unit:
        raise UnitConditionError(f"a = {nf.a} is divisible by {nf.p}")
    p = nf.p
    modulus = p**3
    terms = []
    for exps, c in nf.form.terms:
        weight = exps[0] + exps[1] + exps[2]
        if weight >= 3:
            continue
        coeff = rational_mod(c, modulus, p) * p**weight % modulus
        if coeff:
            terms.append((coeff, exps[:3]))
    depth = max((3 - multiplicity(p, coeff) for coeff, exps in terms if any(exps)), default=0)
    space = p ** (3 * depth)
    cap = CubicBrauerConfig.vertex_search_cap()
    if space > cap:
        raise EnumerationTooLargeError(
            f"vertex search over {space} residues exceeds the cap {cap}", stage="model"
        )
    searched = 0
    for y in itertools.product(range(p**depth), repeat=3):
        searched += 1
        total = 0
        for coeff, exps in terms:
            term = coeff
            for yi, e in zip(y, exps):
                if e:
                    term = term * yi**e
            total += term
        if total % modulus == 0:
            point = (p * y[0], p * y[1], p * y[2], 1)
            logger.warning("vertex lift found at %s", point)
            return VertexCheckResult(False, searched, point, depth)
    return VertexCheckResult(True, searched, depth=depth)
