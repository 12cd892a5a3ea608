"""
Univariate polynomials over F_q and their factorization.

Factorization is the classical three-step pipeline: square-free
decomposition (with p-th roots in characteristic p), distinct-degree
splitting, then Cantor-Zassenhaus equal-degree splitting driven by a seeded
``random.Random`` so repeated runs agree.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from ..config import CubicBrauerConfig
from ..errors import ZeroPolynomialError
from .finite_field import FieldElement, FiniteField

logger = logging.getLogger(__name__)


def _strip(coeffs: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class FqPoly:
    """Polynomial over ``field`` with coefficients low-degree first."""

    field: FiniteField
    coeffs: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1].is_zero():
            object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def from_ints(cls, field: FiniteField, coeffs: Sequence[int]) -> FqPoly:
        return cls(field, tuple(field(c) for c in coeffs))

    @classmethod
    def from_elements(cls, field: FiniteField, coeffs: Sequence[FieldElement]) -> FqPoly:
        return cls(field, tuple(coeffs))

    @classmethod
    def x(cls, field: FiniteField) -> FqPoly:
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, field: FiniteField, c: FieldElement | int) -> FqPoly:
        return cls(field, (field.coerce(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    @property
    def lc(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> FqPoly:
        if self.is_zero():
            return self
        return self.scale(self.lc.inverse())

    def scale(self, c: FieldElement) -> FqPoly:
        return FqPoly(self.field, tuple(a * c for a in self.coeffs))

    def __add__(self, other: FqPoly) -> FqPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        zero = self.field.zero
        a = self.coeffs + (zero,) * (n - len(self.coeffs))
        b = other.coeffs + (zero,) * (n - len(other.coeffs))
        return FqPoly(self.field, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> FqPoly:
        return FqPoly(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other: FqPoly) -> FqPoly:
        return self + (-other)

    def __mul__(self, other: FqPoly) -> FqPoly:
        if self.is_zero() or other.is_zero():
            return FqPoly(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return FqPoly(self.field, tuple(out))

    def __divmod__(self, other: FqPoly) -> tuple[FqPoly, FqPoly]:
        if other.is_zero():
            raise ZeroPolynomialError("division by the zero polynomial")
        rem = list(self.coeffs)
        inv = other.lc.inverse()
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return FqPoly(self.field, ()), self
        quot = [self.field.zero] * (dq + 1)
        for shift in range(dq, -1, -1):
            c = rem[shift + other.degree] * inv
            quot[shift] = c
            if c.is_zero():
                continue
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
        return FqPoly(self.field, tuple(quot)), FqPoly(self.field, tuple(rem[: other.degree]))

    def __floordiv__(self, other: FqPoly) -> FqPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: FqPoly) -> FqPoly:
        return divmod(self, other)[1]

    def derivative(self) -> FqPoly:
        return FqPoly(self.field, tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def evaluate(self, x: FieldElement) -> FieldElement:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def powmod(self, exponent: int, modulus: FqPoly) -> FqPoly:
        result = FqPoly.constant(self.field, 1) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            exponent >>= 1
        return result

    def gcd(self, other: FqPoly) -> FqPoly:
        """Monic greatest common divisor (zero only when both inputs are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def roots(self, seed: int | None = None) -> list[FieldElement]:
        """Distinct roots in ``field``, sorted by integer encoding."""
        if self.is_zero():
            raise ZeroPolynomialError("the zero polynomial vanishes everywhere")
        if self.degree < 1:
            return []
        f = self.monic()
        x = FqPoly.x(self.field)
        split = f.gcd(x.powmod(self.field.order, f) - x)
        if split.degree < 1:
            return []
        rng = random.Random(CubicBrauerConfig.seed() if seed is None else seed)
        linear = _equal_degree_split(split, 1, rng)
        return sorted((-g.coeffs[0] for g in linear), key=lambda r: r.to_int())

    def sort_key(self) -> tuple[int, ...]:
        return (self.degree, *reversed([c.to_int() for c in self.coeffs]))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = str(c)
            if self.field.k > 1 and len(coef) > 1 and mono:
                coef = f"({coef})"
            if mono and c.is_one():
                terms.append(mono)
            elif mono:
                terms.append(f"{coef}*{mono}")
            else:
                terms.append(coef)
        return " + ".join(terms)


def _pth_root(f: FqPoly) -> FqPoly:
    """Given f(x) = g(x^p), return g (coefficients take their p-th roots)."""
    field = f.field
    p = field.p
    root_exp = p ** (field.k - 1)
    coeffs = [f.coeffs[i] ** root_exp for i in range(0, len(f.coeffs), p)]
    return FqPoly(field, tuple(coeffs))


def squarefree_decomposition(f: FqPoly) -> list[tuple[FqPoly, int]]:
    """Square-free parts of a monic polynomial with their multiplicities."""
    p = f.field.p
    result: list[tuple[FqPoly, int]] = []
    if f.degree < 1:
        return result
    g = f.derivative()
    if g.is_zero():
        return [(h, m * p) for h, m in squarefree_decomposition(_pth_root(f))]
    c = f.gcd(g)
    w = f // c
    i = 1
    while not w.is_one():
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            result.append((z.monic(), i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        result.extend((h, m * p) for h, m in squarefree_decomposition(_pth_root(c.monic())))
    return result


def distinct_degree_factorization(f: FqPoly) -> list[tuple[FqPoly, int]]:
    """Split a monic square-free f into products of irreducibles of equal degree."""
    q = f.field.order
    x = FqPoly.x(f.field)
    out: list[tuple[FqPoly, int]] = []
    rest = f
    h = x
    d = 1
    while 2 * d <= rest.degree:
        h = h.powmod(q, rest)
        g = rest.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
        d += 1
    if rest.degree > 0:
        out.append((rest.monic(), rest.degree))
    return out


def _random_poly(field: FiniteField, below: int, rng: random.Random) -> FqPoly:
    while True:
        poly = FqPoly(field, tuple(field.random_element(rng) for _ in range(below)))
        if poly.degree >= 1:
            return poly


def _equal_degree_split(f: FqPoly, d: int, rng: random.Random) -> list[FqPoly]:
    """Cantor-Zassenhaus: all irreducible factors of degree d of a monic f."""
    n = f.degree
    if n == d:
        return [f]
    exponent = (f.field.order**d - 1) // 2
    one = FqPoly.constant(f.field, 1)
    while True:
        a = _random_poly(f.field, n, rng)
        g = a.gcd(f)
        if not 0 < g.degree < n:
            g = (a.powmod(exponent, f) - one).gcd(f)
        if 0 < g.degree < n:
            logger.debug("equal-degree split %d -> %d + %d", n, g.degree, n - g.degree)
            return _equal_degree_split(g, d, rng) + _equal_degree_split(f // g, d, rng)


def ff_factor(poly: FqPoly, seed: int | None = None) -> list[tuple[FqPoly, int]]:
    """
    Factor ``poly`` into monic irreducibles.

    Returns (factor, multiplicity) pairs sorted by degree and then by
    coefficients; their product times ``poly.lc`` equals ``poly``.
    Raises ZeroPolynomialError for the zero polynomial.
    """
    if poly.is_zero():
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    if poly.degree == 0:
        return []
    rng = random.Random(CubicBrauerConfig.seed() if seed is None else seed)
    factors: list[tuple[FqPoly, int]] = []
    for part, mult in squarefree_decomposition(poly.monic()):
        for block, d in distinct_degree_factorization(part):
            for factor in _equal_degree_split(block, d, rng):
                factors.append((factor, mult))
    merged: dict[tuple[int, ...], tuple[FqPoly, int]] = {}
    for factor, mult in factors:
        key = factor.sort_key()
        if key in merged:
            merged[key] = (factor, merged[key][1] + mult)
        else:
            merged[key] = (factor, mult)
    return [merged[key] for key in sorted(merged)]


def cube_roots(c: FieldElement) -> list[FieldElement]:
    """All cube roots of c in its field."""
    field = c.field
    if c.is_zero():
        return [field.zero]
    t3 = FqPoly(field, (-c, field.zero, field.zero, field.one))
    return t3.roots()


def field_embedding(source: FiniteField, target: FiniteField
                    ) -> Callable[[FieldElement], FieldElement]:
    """
    A fixed embedding F_{p^d} -> F_{p^k} (d | k): t goes to the smallest
    root of the defining polynomial of ``source`` in ``target``.
    """
    if source.p != target.p or target.k % source.k:
        raise ValueError(f"{source} does not embed in {target}")
    if source == target:
        return lambda x: x
    modulus = FqPoly.from_ints(target, source.modulus)
    image = min(modulus.roots(), key=lambda r: r.to_int())
    powers = [target.one]
    for _ in range(source.k - 1):
        powers.append(powers[-1] * image)

    def embed(x: FieldElement) -> FieldElement:
        if x.field != source:
            raise ValueError(f"element of {x.field} passed to the embedding of {source}")
        total = target.zero
        for c, power in zip(x.coeffs, powers):
            if c:
                total = total + power * c
        return total

    return embed
