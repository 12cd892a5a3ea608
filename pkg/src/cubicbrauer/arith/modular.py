"""
Dense linear algebra over a prime field F_l, entries as plain ints.

Used with l = p by the reduction classifier and with l = 3 by the
surjectivity lemma.
"""

from collections.abc import Sequence


def row_echelon_mod(
    rows: Sequence[Sequence[int]], modulus: int
) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod a prime and the pivot columns."""
    m = [[x % modulus for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][col], -1, modulus)
        m[r] = [(x * inv) % modulus for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col]
                m[i] = [(a - factor * b) % modulus for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_mod(rows: Sequence[Sequence[int]], modulus: int) -> int:
    return len(row_echelon_mod(rows, modulus)[1])


def nullspace_mod(rows: Sequence[Sequence[int]], ncols: int, modulus: int) -> list[list[int]]:
    """Basis of {v : rows . v = 0} mod a prime, one vector per free column."""
    reduced, pivots = row_echelon_mod(rows, modulus) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(reduced, pivots):
            v[pc] = (-row[f]) % modulus
        basis.append(v)
    return basis


def inverse_mod(matrix: Sequence[Sequence[int]], modulus: int) -> list[list[int]]:
    """Inverse of a square matrix mod a prime; ValueError when singular."""
    n = len(matrix)
    augmented = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    reduced, pivots = row_echelon_mod(augmented, modulus)
    if pivots[:n] != list(range(n)) or len(reduced) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced[:n]]
