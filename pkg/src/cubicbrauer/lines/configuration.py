"""
The combinatorics of the 27 lines: the triples over the flexes, the
action of sigma (Pi -> omega Pi) and of Frobenius, and an identification
with the abstract configuration of the Picard lattice.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from ..arith.finite_field import FieldElement
from ..arith.padic import UnramifiedInteger
from ..curve.plane_cubic import CurvePoint, PlaneCubic
from ..errors import ActionMismatchError, GroupingFailureError, NoIsomorphismError
from ..lattice.picard import PicLattice, build_pic_lattice, compose, invert, permutation_order
from .lifting import LiftedLine
from .plucker import ProjectiveLine, lines_meet, on_plane, plane_through

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LineTriple:
    """Three lines of the cone model with a common reduction through the vertex."""

    indices: tuple[int, int, int]
    reduced_line: ProjectiveLine
    flex: CurvePoint
    plane: tuple[Any, ...]


def permutation_cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    out = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        out.append(tuple(cycle))
    return out


def group_into_triples(x_lines: Sequence[ProjectiveLine], curve: PlaneCubic | None = None,
                       threshold: int | None = None) -> list[LineTriple]:
    """
    Partition the lines by their reduction; each class must have three
    members, and its reduced line must join (0:0:0:1) to a flex.
    """
    groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
    reductions: dict[tuple[int, ...], ProjectiveLine] = {}
    for index, line in enumerate(x_lines):
        red = line.reduce()
        groups[red.key()].append(index)
        reductions.setdefault(red.key(), red)
    sizes = sorted(len(g) for g in groups.values())
    if len(groups) != 9 or any(size != 3 for size in sizes):
        raise GroupingFailureError(f"reductions fall into classes of sizes {sizes}")
    threshold = threshold if threshold is not None else _default_threshold(x_lines)
    triples = []
    for key in sorted(groups, key=lambda k: groups[k][0]):
        red = reductions[key]
        c = red.coords
        if not (c[0].is_zero() and c[1].is_zero() and c[3].is_zero()):
            raise GroupingFailureError(f"reduced line {red} misses the vertex")
        flex = CurvePoint.normalized((c[2], c[4], c[5]))
        if curve is not None and not curve.evaluate(flex).is_zero():
            raise GroupingFailureError(f"reduced line {red} does not meet the curve at {flex}")
        indices = tuple(groups[key])
        plane = common_plane([x_lines[i] for i in indices], threshold)
        if plane is None:
            raise GroupingFailureError(f"lines {indices} are not coplanar")
        triples.append(LineTriple((indices[0], indices[1], indices[2]), red, flex, plane))
    return triples


def common_plane(lines: Sequence[ProjectiveLine], threshold: int | None = None
                 ) -> tuple[Any, ...] | None:
    """
    The plane containing all the lines, or None when there is none.

    Over W[Pi] membership is tested to valuation ``threshold``; over a field
    it is exact. Lines that all coincide span no plane.
    """
    first = lines[0]
    rows = [row for line in lines[1:] for row in line.rows]
    point = max(rows, key=lambda row: _offset(first, row))
    if _offset(first, point) <= -10**9:
        return None
    plane = plane_through(first, point)
    if all(on_plane(plane, row, threshold) for row in rows):
        return plane
    return None


def normalizes_sigma(frobenius: Sequence[int], sigma: Sequence[int], p: int) -> bool:
    """Whether Frob^-1 sigma Frob equals sigma^p, read through p mod 3."""
    conjugated = compose(compose(invert(frobenius), sigma), frobenius)
    power = tuple(range(len(sigma)))
    for _ in range(p % 3):
        power = compose(power, sigma)
    return tuple(conjugated) == tuple(power)


def _offset(line: ProjectiveLine, point: Sequence[Any]) -> int:
    """How far a point is from a line: minus the valuation of the plane it spans."""
    rows = [line.rows[0], line.rows[1], tuple(point)]
    best = None
    for omit in range(4):
        cols = [c for c in range(4) if c != omit]
        m = [[row[c] for c in cols] for row in rows]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        if det.is_zero():
            continue
        v = 0 if isinstance(det, FieldElement) else det.valuation()
        best = v if best is None else min(best, v)
    return -(best if best is not None else 10**9)


def _default_threshold(lines: Sequence[ProjectiveLine]) -> int:
    first = lines[0].coords[0]
    if isinstance(first, FieldElement):
        return 0
    return max(1, first.ring.precision // 2)


def _match(target: ProjectiveLine, keys: dict[tuple[int, ...], int], what: str) -> int:
    index = keys.get(target.key())
    if index is None:
        raise ActionMismatchError(f"the {what} image {target} of a line is not a computed line")
    return index


def sigma_action(y_lines: Sequence[LiftedLine], x_lines: Sequence[ProjectiveLine],
                 omega: UnramifiedInteger, s: int, threshold: int | None = None
                 ) -> tuple[int, ...]:
    """
    Permutation of the lines induced by sigma: Pi -> omega Pi.

    Through X = diag(Pi^s, Pi^s, Pi^s, 1) Y, sigma of a line of X is the
    line of X over the Y-line diag(1, 1, 1, omega^-s) sigma(y); sigma is the
    identity modulo Pi, so the image is read off the reductions on the
    smooth side. The result is then checked against the literal conjugate
    of each X-line's Pluecker vector.
    """
    if not (omega**3 == 1) or omega.reduce().is_one():
        raise ActionMismatchError("omega is not a primitive cube root of unity")
    threshold = threshold if threshold is not None else _default_threshold(x_lines)
    keys = {item.residue_line.key(): index for index, item in enumerate(y_lines)}
    if len(keys) != len(y_lines):
        raise ActionMismatchError("two lines of the smooth model share a reduction")
    scale = omega.reduce() ** (-s)
    one = scale.field.one
    perm = []
    for item in y_lines:
        image = item.residue_line.scale_coordinates([one, one, one, scale])
        perm.append(_match(image, keys, "sigma"))
    for index, line in enumerate(x_lines):
        conjugate = tuple(c.conjugate(omega) for c in line.coords)
        if not all(a.agrees_to(b, threshold)
                   for a, b in zip(conjugate, x_lines[perm[index]].coords)):
            raise ActionMismatchError(
                f"conjugating line {index} does not give line {perm[index]}"
            )
    cycles = permutation_cycles(perm)
    if sorted(len(c) for c in cycles) != [3] * 9:
        raise ActionMismatchError(f"sigma has cycle type {sorted(len(c) for c in cycles)}")
    logger.debug("sigma cycles %s", cycles)
    return tuple(perm)


def frobenius_permutation(y_lines: Sequence[LiftedLine], sigma: Sequence[int] | None = None,
                          ) -> tuple[int, ...]:
    """
    Permutation induced by the arithmetic Frobenius fixing Pi. The smooth
    model has coefficients in Z[Pi], so Frobenius of a line reduces to the
    Frobenius of its reduction.
    """
    keys = {item.residue_line.key(): index for index, item in enumerate(y_lines)}
    perm = tuple(_match(item.residue_line.frobenius(), keys, "Frobenius") for item in y_lines)
    if sigma is not None:
        p = y_lines[0].residue_line.coords[0].field.p
        if not normalizes_sigma(perm, sigma, p):
            raise ActionMismatchError("Frobenius does not normalize sigma as sigma -> sigma^p")
    return perm


def incidence_matrix(lines: Sequence[ProjectiveLine], threshold: int | None = None
                     ) -> list[list[bool]]:
    n = len(lines)
    threshold = threshold if threshold is not None else _default_threshold(lines)
    out = [[False] * n for _ in range(n)]
    for a, b in itertools.combinations(range(n), 2):
        meet = lines_meet(lines[a], lines[b], threshold)
        out[a][b] = out[b][a] = meet
    return out


def _complete_from_sixer(sixer: Sequence[int], incidence: list[list[bool]],
                         lattice: PicLattice) -> list[int] | None:
    """Assign E, F and G labels from six skew lines; None when inconsistent."""
    n = len(incidence)
    assignment = [-1] * n
    for label, line in enumerate(sixer):
        assignment[line] = label
    rest = [x for x in range(n) if x not in sixer]
    for line in rest:
        meets = tuple(i for i, e in enumerate(sixer) if incidence[line][e])
        if len(meets) == 2:
            assignment[line] = lattice.index_of(f"F{meets[0] + 1}{meets[1] + 1}")
        elif len(meets) == 5:
            missing = next(i for i in range(6) if i not in meets)
            assignment[line] = lattice.index_of(f"G{missing + 1}")
        else:
            return None
    if sorted(assignment) != list(range(n)):
        return None
    for a, b in itertools.combinations(range(n), 2):
        abstract = lattice.pair(lattice.lines[assignment[a]], lattice.lines[assignment[b]])
        if (abstract == 1) != incidence[a][b]:
            return None
    return assignment


def identify_configuration(incidence: list[list[bool]], lattice: PicLattice | None = None
                           ) -> tuple[int, ...]:
    """
    Bijection (geometric index -> abstract index) preserving incidence.

    Sets of six pairwise skew lines are searched in index order; the first
    one that extends to the whole configuration fixes E1..E6.
    """
    lattice = lattice or build_pic_lattice()
    n = len(incidence)
    if n != 27:
        raise NoIsomorphismError(f"expected 27 lines, got {n}")
    degrees = [sum(row) for row in incidence]
    if any(d != 10 for d in degrees):
        raise NoIsomorphismError(f"incidence degrees {sorted(set(degrees))} instead of 10")
    triangles = sum(
        1 for a, b, c in itertools.combinations(range(n), 3)
        if incidence[a][b] and incidence[a][c] and incidence[b][c]
    )
    if triangles != 45:
        raise NoIsomorphismError(f"{triangles} coplanar triples instead of 45")

    def search(chosen: list[int], start: int) -> list[int] | None:
        if len(chosen) == 6:
            return _complete_from_sixer(chosen, incidence, lattice)
        for line in range(start, n):
            if all(not incidence[line][c] for c in chosen):
                found = search(chosen + [line], line + 1)
                if found is not None:
                    return found
        return None

    assignment = search([], 0)
    if assignment is None:
        raise NoIsomorphismError("no six skew lines extend to the abstract configuration")
    return tuple(assignment)


def transport_permutation(perm: Sequence[int], bijection: Sequence[int]) -> tuple[int, ...]:
    """The permutation of abstract line indices induced by a geometric one."""
    out = [0] * len(perm)
    for geometric, image in enumerate(perm):
        out[bijection[geometric]] = bijection[image]
    if permutation_order(out) != permutation_order(perm):
        raise NoIsomorphismError("transport changed the order of the permutation")
    return tuple(out)
