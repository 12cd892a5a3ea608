"""
Flat models of cubic surfaces over Z_(p) and the type of their special fibre.

The special fibre is classified through its vertex space
{V : sum V_i dF/dX_i = 0}: a cubic form in characteristic p >= 5 is
invariant under translation by V exactly when V lies there, so the
dimension of that space tells how many variables the reduction really
depends on.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import sympy

from ..arith.finite_field import FiniteField, validate_prime
from ..arith.forms import HomogeneousForm, monomials
from ..arith.modular import nullspace_mod
from ..arith.padic import rational_valuation
from ..arith.polynomials import FqPoly, ff_factor
from ..curve.plane_cubic import PlaneCubic, SmoothnessCertificate, is_smooth
from ..errors import InputError, InvariantViolationError

logger = logging.getLogger(__name__)

SURFACE_GENS = sympy.symbols("x y z w")


class ReductionKind(str, Enum):
    SMOOTH = "smooth"
    CONE = "cone-over-smooth-cubic"
    THREE_PLANES = "three-planes"
    TRIPLE_PLANE = "triple-plane"
    OTHER_SINGULAR = "other-singular"


@dataclass(frozen=True)
class CubicSurfaceModel:
    """A p-integral cubic form in four variables with some p-unit coefficient."""

    form: HomogeneousForm
    p: int

    @property
    def residue_field(self) -> FiniteField:
        return FiniteField.of(self.p)

    def reduced_form(self) -> HomogeneousForm:
        fp = self.residue_field
        return self.form.map_coefficients(fp.coerce, fp)

    def __str__(self) -> str:
        return str(self.form)


def normalize_flat(form: HomogeneousForm, p: int) -> CubicSurfaceModel:
    """Scale by the power of p making every coefficient p-integral, one a unit."""
    validate_prime(p)
    if form.nvars != 4 or form.degree != 3:
        raise InputError("expected a cubic form in four variables")
    if form.is_zero():
        raise InputError("the zero form does not define a surface")
    v = min(rational_valuation(c, p) or 0 for _, c in form.terms)
    scaled = form.scale(Fraction(p) ** (-v)) if v else form
    return CubicSurfaceModel(scaled, p)


@dataclass(frozen=True)
class SurfaceSmoothness:
    """
    Chart-by-chart certificate: for each X_i = 1 the ideal of the form and
    its partials is the unit ideal.
    """

    smooth: bool
    unit_charts: tuple[int, ...]
    rational_singular_points: tuple[tuple[int, ...], ...] = ()

    def __bool__(self) -> bool:
        return self.smooth

    def describe(self) -> str:
        if self.smooth:
            return "unit ideal of the form and its partials on all four affine charts"
        if self.rational_singular_points:
            pts = ", ".join(str(pt) for pt in self.rational_singular_points)
            return f"singular; F_p-rational singular points {pts}"
        return "singular; no F_p-rational singular point"


def is_smooth_surface(form: HomogeneousForm) -> SurfaceSmoothness:
    """Exact smoothness of a quaternary cubic over F_p."""
    fp = form.ring
    p = fp.p
    exprs = [
        f.to_sympy(SURFACE_GENS, lambda c: c.coeffs[0])
        for f in [form, *form.gradient()]
        if not f.is_zero()
    ]
    unit_charts = []
    for i, gen in enumerate(SURFACE_GENS):
        others = [g for j, g in enumerate(SURFACE_GENS) if j != i]
        chart = [sympy.expand(e.subs(gen, 1)) for e in exprs]
        chart = [e for e in chart if e != 0]
        if not chart:
            continue
        basis = sympy.groebner(chart, *others, modulus=p, order="grevlex")
        if any(g.is_ground and not g.is_zero for g in basis.polys):
            unit_charts.append(i)
    if len(unit_charts) == 4:
        return SurfaceSmoothness(True, tuple(unit_charts))
    return SurfaceSmoothness(False, tuple(unit_charts), tuple(singular_points_mod_p(form)))


def _projective_points(p: int, n: int) -> itertools.chain[tuple[int, ...]]:
    """Normalized representatives of P^(n-1)(F_p)."""
    return itertools.chain.from_iterable(
        ((0,) * lead + (1,) + rest for rest in itertools.product(range(p), repeat=n - lead - 1))
        for lead in range(n)
    )


def singular_points_mod_p(form: HomogeneousForm) -> list[tuple[int, ...]]:
    fp = form.ring
    forms = [form, *form.gradient()]
    found = []
    for pt in _projective_points(fp.p, form.nvars):
        values = [fp(x) for x in pt]
        if all(f.evaluate(values).is_zero() for f in forms):
            found.append(pt)
    return found


def vertex_space(form: HomogeneousForm) -> list[list[int]]:
    """Basis of {V : sum V_i dF/dX_i = 0} over F_p, as integer vectors."""
    p = form.ring.p
    quadrics = monomials(form.nvars, form.degree - 1)
    partials = form.gradient()
    rows = [[partials[i].coefficient(m).coeffs[0] for i in range(form.nvars)] for m in quadrics]
    basis = nullspace_mod(rows, form.nvars, p)
    out = []
    for v in basis:
        lead = next(x for x in v if x)
        inv = pow(lead, -1, p)
        out.append([(x * inv) % p for x in v])
    return out


def cone_coordinate_change(vertex: list[int]) -> list[list[int]]:
    """
    Unimodular integer matrix whose last column is the vertex.

    The other columns are the unit vectors e_j for j different from the
    first index i with V_i = 1, which makes the determinant +-1.
    """
    i = vertex.index(1)
    columns = [[int(r == j) for r in range(4)] for j in range(4) if j != i]
    columns.append(list(vertex))
    return [[columns[c][r] for c in range(4)] for r in range(4)]


def _complement_change(kernel: list[list[int]], p: int) -> list[list[int]]:
    """Integer matrix with unit-vector columns first and the kernel vectors last."""
    n = len(kernel[0])
    for chosen in itertools.combinations(range(n), n - len(kernel)):
        columns = [[int(r == j) for r in range(n)] for j in chosen] + [list(v) for v in kernel]
        matrix = [[columns[c][r] for c in range(n)] for r in range(n)]
        if sympy.Matrix(matrix).det() % p:
            return matrix
    raise InvariantViolationError("kernel vectors are dependent", stage="model")


def drop_last_variable(form: HomogeneousForm) -> HomogeneousForm:
    """The form in the first n-1 variables; it must not involve the last one."""
    if any(exps[-1] for exps, _ in form.terms):
        raise ValueError("form involves its last variable")
    return HomogeneousForm.from_dict(
        form.ring, form.nvars - 1, form.degree, {exps[:-1]: c for exps, c in form.terms}
    )


@dataclass(frozen=True)
class ReductionType:
    kind: ReductionKind
    certificate: str
    vertex: tuple[int, ...] | None = None
    base_curve: PlaneCubic | None = field(default=None, compare=False)
    vertex_space_dimension: int = 0
    singular_points: tuple[tuple[int, ...], ...] = ()
    factor_degrees: tuple[int, ...] = ()

    @property
    def is_cone(self) -> bool:
        return self.kind is ReductionKind.CONE


def classify_reduction(model: CubicSurfaceModel) -> ReductionType:
    """Classify the special fibre; OtherSingular is the catch-all."""
    fbar = model.reduced_form()
    fp = fbar.ring
    kernel = vertex_space(fbar)
    dim = len(kernel)
    logger.debug("vertex space of %s has dimension %d", fbar, dim)

    if dim == 0:
        cert = is_smooth_surface(fbar)
        kind = ReductionKind.SMOOTH if cert.smooth else ReductionKind.OTHER_SINGULAR
        return ReductionType(kind, cert.describe(), vertex_space_dimension=0,
                             singular_points=cert.rational_singular_points)

    if dim == 1:
        vertex = kernel[0]
        change = cone_coordinate_change(vertex)
        base_form = drop_last_variable(fbar.substitute(change))
        base = PlaneCubic(base_form)
        curve_cert: SmoothnessCertificate = is_smooth(base)
        if curve_cert.smooth:
            return ReductionType(
                ReductionKind.CONE,
                f"cone with vertex {tuple(vertex)} over the smooth cubic {base}",
                vertex=tuple(vertex), base_curve=base, vertex_space_dimension=1,
            )
        return ReductionType(
            ReductionKind.OTHER_SINGULAR,
            f"cone with vertex {tuple(vertex)} over the singular cubic {base} "
            f"({curve_cert.describe()})",
            vertex=tuple(vertex), base_curve=base, vertex_space_dimension=1,
        )

    if dim == 2:
        change = _complement_change(kernel, fp.p)
        binary = fbar.substitute(change)
        coeffs = [binary.coefficient((i, 3 - i, 0, 0)) for i in range(4)]
        poly = FqPoly(fp, tuple(coeffs))
        factors = ff_factor(poly) if poly.degree >= 1 else []
        squarefree = poly.degree >= 2 and all(m == 1 for _, m in factors)
        degrees = tuple(f.degree for f, _ in factors)
        if squarefree:
            return ReductionType(
                ReductionKind.THREE_PLANES,
                f"binary cubic {poly} (in t = X0/X1 after the coordinate change) is "
                f"square-free with factor degrees {list(degrees)}",
                vertex_space_dimension=2, factor_degrees=degrees,
            )
        return ReductionType(
            ReductionKind.OTHER_SINGULAR,
            f"binary cubic {poly} has a repeated factor",
            vertex_space_dimension=2, factor_degrees=degrees,
        )

    return ReductionType(
        ReductionKind.TRIPLE_PLANE,
        "the reduction is a constant times the cube of a linear form",
        vertex_space_dimension=dim,
    )


def candidate_primes(form: HomogeneousForm) -> list[int]:
    """Primes >= 5 dividing a coefficient's numerator or denominator."""
    primes: set[int] = set()
    for _, c in form.terms:
        c = Fraction(c)
        for n in (c.numerator, c.denominator):
            primes.update(q for q in sympy.primefactors(abs(n)) if q >= 5)
    return sorted(primes)
