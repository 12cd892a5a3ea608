"""
Hensel lifting of lines from the smooth special fibre to W[Pi], and their
transport back to the original surface.

A line is parametrized in the Grassmannian chart of its first unit
Pluecker coordinate p_ij: rows e_i + a e_k + b e_l and e_j + c e_k + d e_l.
Containment in the surface is four equations (the coefficients of the
restricted binary cubic) in a, b, c, d; Newton's method converges
quadratically because the Fano scheme of a smooth cubic surface is
reduced.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

from ..arith.eisenstein import EisensteinElement, EisensteinRing
from ..arith.forms import HomogeneousForm
from ..errors import JacobianSingularError, PrecisionExhaustedError
from .plucker import ProjectiveLine
from .triple_cover import CoverLine

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LiftedLine:
    line: ProjectiveLine
    residue_line: ProjectiveLine
    flex_index: int
    chart: tuple[int, int]
    iterations: int

    @property
    def degree(self) -> int:
        return self.residue_line.degree()


def _solve_unit_system(matrix: list[list[EisensteinElement]],
                       rhs: list[EisensteinElement]) -> list[EisensteinElement]:
    """Gaussian elimination with unit pivots; the reduction must be invertible."""
    n = len(rhs)
    a = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col].is_unit()), None)
        if pivot is None:
            raise JacobianSingularError(
                "the Newton Jacobian is singular modulo Pi; the special fibre is not smooth"
            )
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _chart_rows(ring: EisensteinRing, chart: tuple[int, int], others: tuple[int, int],
                params: Sequence[EisensteinElement]
                ) -> tuple[list[EisensteinElement], list[EisensteinElement]]:
    i, j = chart
    k, l = others
    u = [ring.zero] * 4
    v = [ring.zero] * 4
    u[i], u[k], u[l] = ring.one, params[0], params[1]
    v[j], v[k], v[l] = ring.one, params[2], params[3]
    return u, v


def _chart_parameters(line: ProjectiveLine, chart: tuple[int, int],
                      others: tuple[int, int]) -> list:
    """a, b, c, d of a line over F_q in the given chart."""
    (u, v) = line.rows
    i, j = chart
    det = u[i] * v[j] - u[j] * v[i]
    inv = det.inverse()
    # rows of A^-1 M where A is the (i, j) minor
    r1 = [(v[j] * x - u[j] * y) * inv for x, y in zip(u, v)]
    r2 = [(u[i] * y - v[i] * x) * inv for x, y in zip(u, v)]
    k, l = others
    return [r1[k], r1[l], r2[k], r2[l]]


def hensel_lift_line(cover_line: CoverLine, form: HomogeneousForm,
                     precision: int | None = None) -> LiftedLine:
    """
    Lift a special-fibre line to a line on ``form`` modulo Pi^precision.

    Raises JacobianSingularError when the linearized system degenerates and
    PrecisionExhaustedError when Newton's method fails to converge.
    """
    ring: EisensteinRing = form.ring
    m = precision or ring.precision
    line = cover_line.line
    if line.coords[0].field != ring.residue:
        raise ValueError(f"line over {line.coords[0].field} lifted over {ring.residue}")
    chart = line.chart()
    others = tuple(x for x in range(4) if x not in chart)
    assert len(others) == 2
    params = [ring.lift_residue(x) for x in _chart_parameters(line, chart, others)]
    partials = (form.partial(others[0]), form.partial(others[1]))
    cap = 2 * math.ceil(math.log2(max(m, 2))) + 4
    for iteration in range(cap + 1):
        u, v = _chart_rows(ring, chart, others, params)
        residual = form.restrict_to_line(u, v)
        worst = min(r.valuation() for r in residual)
        logger.debug("line over flex %d: residual valuation %d at step %d",
                     cover_line.flex_index, worst, iteration)
        if worst >= m:
            lifted = ProjectiveLine.from_rows(u, v)
            return LiftedLine(lifted, line, cover_line.flex_index, chart, iteration)
        qk = partials[0].restrict_to_line(u, v)
        ql = partials[1].restrict_to_line(u, v)
        zero = ring.zero
        columns = [
            [qk[0], qk[1], qk[2], zero],
            [ql[0], ql[1], ql[2], zero],
            [zero, qk[0], qk[1], qk[2]],
            [zero, ql[0], ql[1], ql[2]],
        ]
        jacobian = [[columns[c][r] for c in range(4)] for r in range(4)]
        delta = _solve_unit_system(jacobian, list(residual))
        params = [x - d for x, d in zip(params, delta)]
    raise PrecisionExhaustedError(
        f"Newton lifting did not reach Pi^{m} after {cap} steps", stage="lines"
    )


def pull_back_lines(lifted: Sequence[LiftedLine], s: int) -> list[ProjectiveLine]:
    """
    Lines of the cone model: apply X_i = Pi^s Y_i (i <= 2) to the spanning
    rows and saturate again.
    """
    out = []
    for item in lifted:
        ring = item.line.coords[0].ring
        factor = ring.pi_power(s)
        out.append(item.line.scale_coordinates([factor, factor, factor, ring.one]))
    return out


def line_residual(form: HomogeneousForm, line: ProjectiveLine) -> int:
    """Valuation of the coefficients of the form restricted to the line."""
    values = form.restrict_to_line(*line.rows)
    return min(v.precision if v.is_zero() else v.valuation() for v in values)
