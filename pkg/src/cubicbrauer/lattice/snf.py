"""
Integer linear algebra on object-dtype numpy arrays.

Smith normal form with unimodular witnesses, saturated kernels, integer
solving and column-span bases. Entries stay Python ints throughout, so
there is no overflow and no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def as_int_matrix(rows: object) -> np.ndarray:
    m = np.array(rows, dtype=object)
    if m.ndim == 1:
        m = m.reshape(-1, 1)
    return m


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=object)


def exgcd(a: int, b: int) -> np.ndarray:
    """
    A 2x2 integer matrix M of determinant 1 with M @ [a, b] = [gcd(a, b), 0].

    If a divides b, M[0, 1] is 0.
    """
    a_sign = -1 if a < 0 else 1
    a *= a_sign
    b_sign = -1 if b < 0 else 1
    b *= b_sign
    m = np.array([[b, 0, 1], [a, 1, 0]], dtype=object)
    while m[1, 0] != 0:
        q = m[0, 0] // m[1, 0]
        m[0] -= q * m[1]
        m = m[::-1].copy()
    g = m[0, 0]
    m = m[:, 1:]
    m *= [a_sign, b_sign]
    if g != 0:
        m[1] = [-b_sign * b // g, a_sign * a // g]
    return m


def _inv_2x2_det1(m: np.ndarray) -> np.ndarray:
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=object)


SWAP = np.array([[0, 1], [1, 0]], dtype=object)


@dataclass
class SmithForm:
    """U @ A @ V == D with U, V unimodular; ``u_inv``/``v_inv`` are their inverses."""

    u: np.ndarray
    d: np.ndarray
    v: np.ndarray
    u_inv: np.ndarray
    v_inv: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        return [int(self.d[i, i]) for i in range(min(self.d.shape))]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


class _Reducer:
    def __init__(self, a: np.ndarray) -> None:
        self.d = a.copy().astype(object)
        rows, cols = self.d.shape
        self.u, self.u_inv = identity(rows), identity(rows)
        self.v, self.v_inv = identity(cols), identity(cols)

    def rows(self, i: int, j: int, m: np.ndarray, m_inv: np.ndarray) -> None:
        self.d[[i, j]] = m @ self.d[[i, j]]
        self.u[[i, j]] = m @ self.u[[i, j]]
        self.u_inv[:, [i, j]] = self.u_inv[:, [i, j]] @ m_inv

    def cols(self, i: int, j: int, m: np.ndarray, m_inv: np.ndarray) -> None:
        self.d[:, [i, j]] = self.d[:, [i, j]] @ m
        self.v[:, [i, j]] = self.v[:, [i, j]] @ m
        self.v_inv[[i, j]] = m_inv @ self.v_inv[[i, j]]

    def negate_row(self, i: int) -> None:
        self.d[i] = -self.d[i]
        self.u[i] = -self.u[i]
        self.u_inv[:, i] = -self.u_inv[:, i]

    def clear_col(self, i: int) -> bool:
        if all(x == 0 for x in self.d[i + 1:, i]):
            return False
        for j in range(i + 1, self.d.shape[0]):
            if self.d[j, i] == 0:
                continue
            m = exgcd(self.d[i, i], self.d[j, i])
            self.rows(i, j, m, _inv_2x2_det1(m))
        return True

    def clear_row(self, i: int) -> bool:
        if all(x == 0 for x in self.d[i, i + 1:]):
            return False
        for j in range(i + 1, self.d.shape[1]):
            if self.d[i, j] == 0:
                continue
            m = exgcd(self.d[i, i], self.d[i, j]).T
            self.cols(i, j, m, _inv_2x2_det1(m.T).T)
        return True

    def bad_entry(self, i: int) -> int | None:
        """Row index below i holding an entry not divisible by d[i, i]."""
        pivot = self.d[i, i]
        for j in range(i + 1, self.d.shape[0]):
            for k in range(i + 1, self.d.shape[1]):
                if self.d[j, k] % pivot:
                    return j
        return None

    def pivot(self, i: int) -> tuple[int, int] | None:
        """Position of a nonzero entry of least absolute value in the trailing block."""
        rows, cols = self.d.shape
        nonzero = [(r, c) for r in range(i, rows) for c in range(i, cols) if self.d[r, c] != 0]
        if not nonzero:
            return None
        return min(nonzero, key=lambda rc: abs(self.d[rc]))

    def run(self) -> SmithForm:
        rows, cols = self.d.shape
        for i in range(min(rows, cols)):
            position = self.pivot(i)
            if position is None:
                break
            r, c = position
            if r != i:
                self.rows(i, r, SWAP, SWAP)
            if c != i:
                self.cols(i, c, SWAP, SWAP)
            while True:
                self.clear_col(i)
                while self.clear_row(i) and self.clear_col(i):
                    pass
                j = self.bad_entry(i)
                if j is None:
                    break
                add = np.array([[1, 1], [0, 1]], dtype=object)
                self.rows(i, j, add, np.array([[1, -1], [0, 1]], dtype=object))
            if self.d[i, i] < 0:
                self.negate_row(i)
        return SmithForm(self.u, self.d, self.v, self.u_inv, self.v_inv)


def smith_normal_form(a: object) -> SmithForm:
    """
    Smith normal form of an integer matrix.

    The diagonal is non-negative with d_i | d_(i+1), nonzero entries first.
    """
    form = _Reducer(as_int_matrix(a)).run()
    return form


def integer_kernel(a: object) -> np.ndarray:
    """Columns form a basis of the (saturated) integer kernel."""
    m = as_int_matrix(a)
    form = smith_normal_form(m)
    return form.v[:, form.rank:]


def solve_integer(a: object, y: object) -> np.ndarray | None:
    """An integer x with a @ x == y, or None when none exists."""
    m = as_int_matrix(a)
    target = np.array(y, dtype=object).reshape(-1)
    form = smith_normal_form(m)
    uy = form.u @ target
    z = np.zeros(m.shape[1], dtype=object)
    diag = form.diagonal
    for i, di in enumerate(diag):
        if di == 0:
            if uy[i] != 0:
                return None
        else:
            if uy[i] % di:
                return None
            z[i] = uy[i] // di
    if any(uy[i] != 0 for i in range(len(diag), m.shape[0])):
        return None
    return form.v @ z


def solve_columns(a: object, b: object) -> np.ndarray | None:
    """Integer X with a @ X == b column by column, or None."""
    bm = as_int_matrix(b)
    cols = []
    for j in range(bm.shape[1]):
        x = solve_integer(a, bm[:, j])
        if x is None:
            return None
        cols.append(x)
    am = as_int_matrix(a)
    if not cols:
        return np.zeros((am.shape[1], 0), dtype=object)
    return np.stack(cols, axis=1)


def column_span_basis(a: object) -> np.ndarray:
    """A basis (as columns) of the lattice spanned by the columns of a."""
    m = as_int_matrix(a)
    form = smith_normal_form(m)
    r = form.rank
    return form.u_inv[:, :r] * np.array(form.diagonal[:r], dtype=object)


def integer_inverse(a: object) -> np.ndarray:
    m = as_int_matrix(a)
    inv = solve_columns(m, identity(m.shape[0]))
    if inv is None or m.shape[0] != m.shape[1]:
        raise ValueError("matrix is not unimodular")
    return inv


def elementary_divisors(a: object) -> list[int]:
    """Diagonal of the Smith form padded with zeros up to the row count (free part as 0)."""
    m = as_int_matrix(a)
    form = smith_normal_form(m) if m.size else None
    diag = form.diagonal if form else []
    return diag + [0] * (m.shape[0] - len(diag))


def normalize_sign(vector: np.ndarray) -> np.ndarray:
    """Flip a vector so its first nonzero entry is positive."""
    for x in vector:
        if x != 0:
            return vector if x > 0 else -vector
    return vector
