"""
Cohomology of cyclic groups acting on lattices.

For a generator g of order n with norm N = 1 + g + ... + g^(n-1):
H^0 = ker(g - 1), H^1 = ker N / im(g - 1), and the Tate group
H^0-hat = ker(g - 1) / im N. Sublattices are handled by restricting the
action to them, which fails loudly when they are not stable.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from ..errors import InvariantViolationError, SublatticeNotStableError
from .picard import LatticeAction
from .snf import (
    identity,
    integer_kernel,
    normalize_sign,
    smith_normal_form,
    solve_columns,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CohomologyResult:
    """
    H^0 rank with a basis (ambient coordinates) and the invariants of H^1.

    ``h1_invariants`` lists the elementary divisors d > 1 of H^1; a 0 entry
    would denote a free summand Z.
    """

    h0_rank: int
    h0_basis: tuple[tuple[int, ...], ...]
    h1_invariants: tuple[int, ...] = field(default_factory=tuple)

    @property
    def h1_order(self) -> int:
        order = 1
        for d in self.h1_invariants:
            order *= d
        return order

    def to_dict(self) -> dict[str, object]:
        return {
            "h0_rank": self.h0_rank,
            "h0_basis": [list(v) for v in self.h0_basis],
            "h1_invariants": list(self.h1_invariants),
        }


def restrict_action(action: LatticeAction, sublattice: np.ndarray | None) -> np.ndarray:
    """Matrix of the action in the coordinates of a sublattice basis (columns)."""
    if sublattice is None:
        return action.matrix
    image = action.matrix @ sublattice
    restricted = solve_columns(sublattice, image)
    if restricted is None:
        raise SublatticeNotStableError("the sublattice is not stable under the group")
    return restricted


def _restricted(action: LatticeAction, sublattice: np.ndarray | None) -> LatticeAction:
    return LatticeAction(restrict_action(action, sublattice), action.order)


def _invariants(generators_in_basis: np.ndarray, rank: int) -> tuple[int, ...]:
    """Nontrivial invariants of Z^rank modulo the column span of the generators."""
    if rank == 0:
        return ()
    if generators_in_basis.size == 0:
        return (0,) * rank
    diag = smith_normal_form(generators_in_basis).diagonal
    diag = diag + [0] * (rank - len(diag))
    torsion = sorted(d for d in diag if d > 1)
    free = [0] * sum(1 for d in diag if d == 0)
    return tuple(torsion + free)


def h0(action: LatticeAction, sublattice: np.ndarray | None = None
       ) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Rank and saturated basis of the invariants, in ambient coordinates."""
    restricted = _restricted(action, sublattice)
    kernel = integer_kernel(restricted.matrix - identity(restricted.rank))
    basis = kernel if sublattice is None else sublattice @ kernel
    vectors = tuple(
        tuple(int(x) for x in normalize_sign(basis[:, j])) for j in range(basis.shape[1])
    )
    return len(vectors), vectors


def joint_h0(actions: Sequence[LatticeAction]) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Invariants of the group generated by several actions on the same lattice."""
    if not actions:
        raise ValueError("need at least one action")
    rank = actions[0].rank
    stacked = np.vstack([a.matrix - identity(rank) for a in actions])
    kernel = integer_kernel(stacked)
    vectors = tuple(
        tuple(int(x) for x in normalize_sign(kernel[:, j])) for j in range(kernel.shape[1])
    )
    return len(vectors), vectors


def h1_cyclic(action: LatticeAction, sublattice: np.ndarray | None = None) -> CohomologyResult:
    """H^0 and H^1 of the cyclic group generated by ``action``."""
    rank0, basis0 = h0(action, sublattice)
    restricted = _restricted(action, sublattice)
    norm_kernel = integer_kernel(restricted.norm())
    t = norm_kernel.shape[1]
    coboundaries = restricted.matrix - identity(restricted.rank)
    coords = solve_columns(norm_kernel, coboundaries) if t else np.zeros((0, 0), dtype=object)
    if coords is None:
        raise InvariantViolationError(
            "image of g - 1 is not inside the kernel of the norm", stage="lattice"
        )
    invariants = _invariants(coords, t)
    logger.debug("H^1 invariants %s, H^0 rank %d", invariants, rank0)
    return CohomologyResult(rank0, basis0, invariants)


def tate_h0_cyclic(action: LatticeAction, sublattice: np.ndarray | None = None
                   ) -> tuple[int, ...]:
    """Invariants of the fixed lattice modulo norms."""
    restricted = _restricted(action, sublattice)
    fixed = integer_kernel(restricted.matrix - identity(restricted.rank))
    f = fixed.shape[1]
    if f == 0:
        return ()
    coords = solve_columns(fixed, restricted.norm())
    if coords is None:
        raise InvariantViolationError("norms are not invariant", stage="lattice")
    return _invariants(coords, f)
