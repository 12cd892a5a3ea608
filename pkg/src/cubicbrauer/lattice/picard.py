"""
The geometric Picard lattice of a smooth cubic surface and Galois actions on it.

Pic is Z^7 with basis L, E1..E6 and intersection form diag(1, -1, ..., -1).
The 27 lines are the classes E_i, F_ij = L - E_i - E_j and
G_i = 2L - sum(E) + E_i; the hyperplane class is H = 3L - sum(E).
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache

import numpy as np

from ..errors import (
    InvariantViolationError,
    NoConsistentMatrixError,
    PairingNotPreservedError,
)
from .snf import identity, integer_inverse

logger = logging.getLogger(__name__)

RANK = 7


@dataclass(frozen=True)
class PicLattice:
    """
    Attributes:
        gram: 7x7 intersection matrix
        lines: the 27 line classes in basis coordinates
        labels: E1..E6, F12..F56, G1..G6 (same order as ``lines``)
        triples: the 45 tritangent triples as sorted index triples
        hyperplane: the class H
    """

    gram: np.ndarray
    lines: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    triples: tuple[tuple[int, int, int], ...]
    hyperplane: tuple[int, ...]

    def pair(self, a: Sequence[int], b: Sequence[int]) -> int:
        return int(np.array(a, dtype=object) @ self.gram @ np.array(b, dtype=object))

    def line_vector(self, i: int) -> np.ndarray:
        return np.array(self.lines[i], dtype=object)

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def intersection_matrix(self) -> list[list[int]]:
        return [[self.pair(a, b) for b in self.lines] for a in self.lines]

    @property
    def basis_line_indices(self) -> tuple[int, ...]:
        """Seven lines whose classes form a Z-basis: E1..E6 and F12."""
        return (0, 1, 2, 3, 4, 5, self.index_of("F12"))


@cache
def build_pic_lattice() -> PicLattice:
    """The abstract lattice with the deterministic line ordering E, F, G."""
    gram = np.diag(np.array([1] + [-1] * 6, dtype=object))
    lines: list[tuple[int, ...]] = []
    labels: list[str] = []

    def e(i: int) -> list[int]:
        v = [0] * RANK
        v[i] = 1
        return v

    for i in range(1, 7):
        lines.append(tuple(e(i)))
        labels.append(f"E{i}")
    for i, j in itertools.combinations(range(1, 7), 2):
        v = [1] + [0] * 6
        v[i] = v[j] = -1
        lines.append(tuple(v))
        labels.append(f"F{i}{j}")
    for i in range(1, 7):
        v = [2] + [-1] * 6
        v[i] = 0
        lines.append(tuple(v))
        labels.append(f"G{i}")

    hyperplane = (3, -1, -1, -1, -1, -1, -1)
    lattice = PicLattice(gram, tuple(lines), tuple(labels), (), hyperplane)
    triples = tuple(
        (a, b, c)
        for a, b, c in itertools.combinations(range(27), 3)
        if lattice.pair(lines[a], lines[b]) == 1
        and lattice.pair(lines[a], lines[c]) == 1
        and lattice.pair(lines[b], lines[c]) == 1
        and tuple(x + y + z for x, y, z in zip(lines[a], lines[b], lines[c])) == hyperplane
    )
    if len(triples) != 45:
        raise InvariantViolationError(
            f"found {len(triples)} tritangent triples instead of 45", stage="lattice"
        )
    for v in lines:
        if lattice.pair(v, v) != -1 or lattice.pair(v, hyperplane) != 1:
            raise InvariantViolationError(f"{v} is not a line class", stage="lattice")
    return PicLattice(gram, tuple(lines), tuple(labels), triples, hyperplane)


def permutation_order(perm: Sequence[int]) -> int:
    seen = set()
    order = 1
    for start in range(len(perm)):
        if start in seen:
            continue
        length = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = perm[i]
            length += 1
        order = math.lcm(order, length)
    return order


def compose(first: Sequence[int], second: Sequence[int]) -> tuple[int, ...]:
    """The permutation ``second`` after ``first``."""
    return tuple(second[first[i]] for i in range(len(first)))


def invert(perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for i, j in enumerate(perm):
        out[j] = i
    return tuple(out)


@dataclass(frozen=True)
class LatticeAction:
    """
    A cyclic group acting on a lattice through the matrix of its generator.

    ``permutation`` records the induced action on the 27 lines when the
    action comes from one.
    """

    matrix: np.ndarray
    order: int
    permutation: tuple[int, ...] | None = None

    @classmethod
    def trivial(cls, rank: int, order: int) -> LatticeAction:
        return cls(identity(rank), order)

    @property
    def rank(self) -> int:
        return int(self.matrix.shape[0])

    def power(self, n: int) -> np.ndarray:
        result = identity(self.rank)
        for _ in range(n % self.order if self.order else n):
            result = result @ self.matrix
        return result

    def norm(self) -> np.ndarray:
        total = np.zeros((self.rank, self.rank), dtype=object)
        acc = identity(self.rank)
        for _ in range(self.order):
            total = total + acc
            acc = acc @ self.matrix
        return total


def action_from_line_permutation(
    perm: Sequence[int], lattice: PicLattice | None = None
) -> LatticeAction:
    """
    The isometry of Pic inducing a given permutation of the 27 lines.

    Raises PairingNotPreservedError when the permutation changes an
    intersection number, NoConsistentMatrixError when no lattice map fits.
    """
    lattice = lattice or build_pic_lattice()
    perm = tuple(int(i) for i in perm)
    if sorted(perm) != list(range(27)):
        raise ValueError("expected a permutation of the 27 lines")
    for a, b in itertools.combinations(range(27), 2):
        before = lattice.pair(lattice.lines[a], lattice.lines[b])
        after = lattice.pair(lattice.lines[perm[a]], lattice.lines[perm[b]])
        if before != after:
            raise PairingNotPreservedError((a, b), before, after)

    basis = lattice.basis_line_indices
    source = np.array([lattice.lines[i] for i in basis], dtype=object).T
    target = np.array([lattice.lines[perm[i]] for i in basis], dtype=object).T
    matrix = target @ integer_inverse(source)

    for i in range(27):
        if list(matrix @ lattice.line_vector(i)) != list(lattice.lines[perm[i]]):
            raise NoConsistentMatrixError(
                f"the lattice map sends {lattice.labels[i]} off {lattice.labels[perm[i]]}"
            )
    if not (matrix.T @ lattice.gram @ matrix == lattice.gram).all():
        raise NoConsistentMatrixError("the lattice map is not an isometry")
    order = permutation_order(perm)
    if not (_matrix_power(matrix, order) == identity(RANK)).all():
        raise NoConsistentMatrixError("matrix order differs from permutation order")
    logger.debug("lattice action of order %d", order)
    return LatticeAction(matrix, order, perm)


def _matrix_power(m: np.ndarray, n: int) -> np.ndarray:
    result = identity(m.shape[0])
    for _ in range(n):
        result = result @ m
    return result
