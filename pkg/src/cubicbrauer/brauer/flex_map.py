"""
The map from Pic of the surface to Pic of the reduced plane section.

Each line of the cone model meets the plane X3 = 0 in a point reducing to
the flex it lies over, so its class goes to (1, [P - O]) in
Pic C_s = Z + C_s(F_q) with a flex O as origin. The map is defined on the
seven basis lines and checked on all 27.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..curve.group import CurveGroup, span_with_witnesses
from ..curve.plane_cubic import CurvePoint
from ..errors import InconsistentRelationsError, KernelNotStableError, SublatticeNotStableError
from ..lattice.cohomology import h0, tate_h0_cyclic
from ..lattice.picard import LatticeAction, PicLattice, build_pic_lattice
from ..lattice.snf import column_span_basis, integer_inverse, integer_kernel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FlexMap:
    """
    ``matrix`` has a degree row followed by one row per generator of the
    curve group; Jacobian rows are read modulo ``moduli``.
    """

    matrix: np.ndarray
    moduli: tuple[int, ...]
    group: CurveGroup
    line_flexes: tuple[CurvePoint, ...]

    def image(self, vector: Sequence[int]) -> tuple[int, ...]:
        raw = self.matrix @ np.array(vector, dtype=object)
        return (int(raw[0]),) + tuple(int(x) % n for x, n in zip(raw[1:], self.moduli))

    def point_of(self, vector: Sequence[int]) -> CurvePoint:
        """The Jacobian component of an image as a point of the curve."""
        _, *coords = self.image(vector)
        return self.group.sum(zip(coords, self.group.generators))

    def kernel(self) -> np.ndarray:
        """Basis (columns) of the kernel lattice M."""
        rank = self.matrix.shape[1]
        extra = len(self.moduli)
        stacked = np.zeros((1 + extra, rank + extra), dtype=object)
        stacked[:, :rank] = self.matrix
        for i, n in enumerate(self.moduli):
            stacked[1 + i, rank + i] = n
        kernel = integer_kernel(stacked)
        return column_span_basis(kernel[:rank, :])


def flex_map(line_flexes: Sequence[CurvePoint], group: CurveGroup,
             lattice: PicLattice | None = None) -> FlexMap:
    """
    Build the map from the flexes of the 27 abstract lines.

    ``line_flexes[j]`` is the flex (a point of ``group``) under abstract line j.
    Raises InconsistentRelationsError when the linear extension disagrees
    with some line.
    """
    lattice = lattice or build_pic_lattice()
    if len(line_flexes) != 27:
        raise ValueError("one flex per line is needed")
    moduli = group.generator_orders
    columns = []
    for index in lattice.basis_line_indices:
        columns.append([1, *group.discrete_log(line_flexes[index])])
    on_basis = np.array(columns, dtype=object).T
    basis = np.array([lattice.lines[i] for i in lattice.basis_line_indices], dtype=object).T
    matrix = on_basis @ integer_inverse(basis)
    fm = FlexMap(matrix, moduli, group, tuple(line_flexes))
    for j in range(27):
        expected = (1,) + tuple(
            c % n for c, n in zip(group.discrete_log(line_flexes[j]), moduli)
        )
        if fm.image(lattice.lines[j]) != expected:
            raise InconsistentRelationsError(
                f"line {lattice.labels[j]} maps to {fm.image(lattice.lines[j])}, "
                f"its flex gives {expected}"
            )
    return fm


@dataclass(frozen=True)
class TorsionImageCheck:
    holds: bool
    image_order: int
    torsion_order: int
    witnesses: dict[str, tuple[int, ...]]


def check_image_contains_three_torsion(fm: FlexMap) -> TorsionImageCheck:
    """
    Does the Jacobian part of the image contain every 3-torsion point?

    Witnesses express each 3-torsion point through the flexes in sorted
    order and are re-evaluated with the group law.
    """
    group = fm.group
    torsion = group.three_torsion
    distinct = sorted(set(fm.line_flexes), key=CurvePoint.sort_key)
    witnesses = span_with_witnesses(group, distinct)
    holds = all(pt in witnesses for pt in torsion.elements)
    found: dict[str, tuple[int, ...]] = {}
    if holds:
        for pt in sorted(torsion.elements, key=CurvePoint.sort_key):
            combo = witnesses[pt]
            if group.sum(zip(combo, distinct)) != pt:
                raise InconsistentRelationsError(f"witness for {pt} does not evaluate to it")
            found[str(pt)] = combo
    image_order = len(witnesses)
    logger.debug("flex image of order %d, 3-torsion of order %d", image_order, torsion.order)
    return TorsionImageCheck(holds, image_order, torsion.order, found)


@dataclass(frozen=True)
class KernelCheck:
    holds: bool
    kernel_rank: int
    h0_rank: int
    tate_h0: tuple[int, ...]


def check_kernel_tate_vanishes(fm: FlexMap, action: LatticeAction) -> KernelCheck:
    """H0 and the Tate H0 of the kernel M under the inertia action both vanish."""
    kernel = fm.kernel()
    try:
        rank0, _ = h0(action, kernel)
        tate = tate_h0_cyclic(action, kernel)
    except SublatticeNotStableError as exc:
        raise KernelNotStableError(str(exc)) from exc
    return KernelCheck(rank0 == 0 and not tate, int(kernel.shape[1]), rank0, tate)
