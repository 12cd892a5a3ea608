"""
Finite fields of characteristic p >= 5.

F_{p^k} is represented as F_p[t]/(m(t)) where m is the lexicographically
smallest monic irreducible polynomial of degree k, so element
representations are reproducible from run to run.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import divisors, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_gcdex, gf_irreducible_p, gf_strip

from ..errors import InvalidPrimeError, InvariantViolationError, NotIntegralError

logger = logging.getLogger(__name__)


def validate_prime(p: object) -> int:
    """Return p if it is a prime >= 5, otherwise raise InvalidPrimeError."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 5 or not isprime(p):
        raise InvalidPrimeError(p)
    return p


def mul_mod_poly(
    a: Sequence[int], b: Sequence[int], tail: Sequence[int], modulus: int
) -> tuple[int, ...]:
    """
    Multiply two residue vectors of Z[t]/(t^k + tail) and reduce mod ``modulus``.

    Vectors are low-degree first and of length k. Shared by the finite
    fields (modulus p) and the unramified rings (modulus p^n).
    """
    k = len(tail)
    if k == 1:
        return ((a[0] * b[0]) % modulus,)
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    for d in range(2 * k - 2, k - 1, -1):
        c = prod[d]
        if c:
            base = d - k
            for i, mi in enumerate(tail):
                if mi:
                    prod[base + i] -= c * mi
    return tuple(x % modulus for x in prod[:k])


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k over F_p, low-degree first."""
    for tail in itertools.product(range(p), repeat=k):
        high_first = [1, *tail]
        if gf_irreducible_p(high_first, p, ZZ):
            return tuple(reversed(high_first))
    raise ValueError(f"no irreducible polynomial of degree {k} over F_{p}")


@lru_cache(maxsize=None)
def _field(p: int, k: int) -> FiniteField:
    validate_prime(p)
    if k < 1:
        raise ValueError(f"extension degree must be positive, got {k}")
    modulus = smallest_irreducible(p, k)
    logger.debug("F_%d^%d uses modulus %s", p, k, modulus)
    return FiniteField(p, k, modulus)


@dataclass(frozen=True)
class FiniteField:
    """The field F_{p^k}; obtain instances through ``FiniteField.of``."""

    p: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError(f"modulus {self.modulus} is not monic of degree {self.k}")

    @classmethod
    def of(cls, p: int, k: int = 1) -> FiniteField:
        return _field(p, k)

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def tail(self) -> tuple[int, ...]:
        return self.modulus[:-1]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.k)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, (value % self.p,) + (0,) * (self.k - 1))

    def __str__(self) -> str:
        return f"F_{self.order}"

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        """Element from coefficients in t, low-degree first."""
        if len(coeffs) > self.k:
            raise ValueError(f"{len(coeffs)} coefficients for a degree-{self.k} field")
        padded = [c % self.p for c in coeffs] + [0] * (self.k - len(coeffs))
        return FieldElement(self, tuple(padded))

    def coerce(self, value: object) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(value, int):
            return self(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise NotIntegralError(f"{value} has a pole at {self.p}")
            return self(value.numerator * pow(value.denominator, -1, self.p))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def is_zero(self, value: FieldElement) -> bool:
        return value.is_zero()

    def generator(self) -> FieldElement:
        """The class of t (for k = 1 this is 0)."""
        if self.k == 1:
            return self.zero
        return self.element([0, 1])

    def elements(self) -> Iterator[FieldElement]:
        """All elements in the order of their integer encoding."""
        for n in range(self.order):
            yield self.from_int(n)

    def from_int(self, n: int) -> FieldElement:
        """Inverse of ``FieldElement.to_int`` (base-p digits are the coefficients)."""
        digits = []
        for _ in range(self.k):
            n, r = divmod(n, self.p)
            digits.append(r)
        return FieldElement(self, tuple(digits))

    def random_element(self, rng: random.Random) -> FieldElement:
        return FieldElement(self, tuple(rng.randrange(self.p) for _ in range(self.k)))


@dataclass(frozen=True, slots=True)
class FieldElement:
    """An element of a FiniteField; ``coeffs`` are the coordinates in 1, t, t^2, ..."""

    field: FiniteField
    coeffs: tuple[int, ...]

    def _coerce(self, other: object) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError(f"mixing elements of {self.field} and {other.field}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field(other)
        if isinstance(other, Fraction):
            return self.field.coerce(other)
        return None

    def __add__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(
            self.field, mul_mod_poly(self.coeffs, o.coeffs, self.field.tail, self.field.p)
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> FieldElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError(f"zero has no inverse in {self.field}")
        p = self.field.p
        if self.field.k == 1:
            return FieldElement(self.field, (pow(self.coeffs[0], -1, p),))
        f = gf_strip([int(c) for c in reversed(self.coeffs)])
        g = [int(c) for c in reversed(self.field.modulus)]
        s, _, h = gf_gcdex(f, g, p, ZZ)
        if [int(c) for c in h] != [1]:
            raise InvariantViolationError(
                f"modulus of {self.field} is not irreducible", stage="arith"
            )
        return self.field.element([int(c) for c in reversed(s)])

    def frobenius(self, times: int = 1) -> FieldElement:
        """Apply x -> x^p ``times`` times."""
        return self ** (self.field.p**times)

    def degree(self) -> int:
        """Degree over F_p of the smallest subfield containing this element."""
        for d in divisors(self.field.k):
            if self.frobenius(d) == self:
                return int(d)
        return self.field.k

    def is_cube(self) -> bool:
        q = self.field.order
        if self.is_zero() or (q - 1) % 3:
            return True
        return (self ** ((q - 1) // 3)).is_one()

    def to_int(self) -> int:
        """Base-p encoding: coefficient i is digit i."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def __str__(self) -> str:
        if self.field.k == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(reversed(terms)) if terms else "0"

    def __repr__(self) -> str:
        return f"FieldElement({self}, {self.field})"


def cube_roots_of_unity(field: FiniteField) -> list[FieldElement]:
    """
    The primitive cube roots of unity in ``field``, sorted by integer encoding.

    Empty when 3 does not divide q - 1.
    """
    q = field.order
    if (q - 1) % 3:
        return []
    e = (q - 1) // 3
    for n in range(2, q):
        omega = field.from_int(n) ** e
        if not omega.is_one():
            return sorted([omega, omega * omega], key=lambda x: x.to_int())
    raise InvariantViolationError(f"{field} has no primitive cube root of unity", stage="arith")


def sort_key(x: FieldElement) -> int:
    return x.to_int()
