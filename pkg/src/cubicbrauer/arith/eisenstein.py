"""
The totally ramified cubic extension W[Pi], Pi^3 = p.

An element is c0 + c1*Pi + c2*Pi^2 with c_i in W_N(F_q). Precision is
absolute and Pi-adic: an element at precision M is known modulo Pi^M,
which pins c_i modulo p^ceil((M - i)/3).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotAUnitError, PrecisionExhaustedError
from .finite_field import FieldElement, FiniteField, mul_mod_poly
from .padic import UnramifiedInteger, UnramifiedRing, vector_valuation

Components = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


def component_precisions(m: int) -> tuple[int, int, int]:
    """p-adic precisions of (c0, c1, c2) for Pi-adic precision m."""
    return (max(0, (m + 2) // 3), max(0, (m + 1) // 3), max(0, m // 3))


@dataclass(frozen=True)
class EisensteinRing:
    """W_N(F_q)[Pi] with Pi^3 = p, truncated at Pi-adic precision ``precision``."""

    base: UnramifiedRing
    precision: int

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise ValueError(f"precision must be positive, got {self.precision}")
        if 3 * self.base.precision < self.precision:
            raise ValueError(
                f"base precision {self.base.precision} cannot carry Pi-adic "
                f"precision {self.precision}"
            )

    @classmethod
    def over(cls, residue: FiniteField, precision: int,
             base_precision: int | None = None) -> EisensteinRing:
        """The ring at Pi-adic ``precision`` over W_N, N = ``base_precision`` or ceil(M/3)."""
        n = -(-precision // 3) if base_precision is None else base_precision
        return cls(UnramifiedRing(residue, n), precision)

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def residue(self) -> FiniteField:
        return self.base.residue

    def make(self, comps: Sequence[Sequence[int]], precision: int | None = None
             ) -> EisensteinElement:
        m = self.precision if precision is None else min(precision, self.precision)
        if m < 1:
            raise PrecisionExhaustedError(f"Pi-adic precision {m} carries no digits")
        k = self.k
        reduced = []
        for c, n in zip(comps, component_precisions(m)):
            mod = self.p**n
            padded = list(c) + [0] * (k - len(c))
            reduced.append(tuple(x % mod for x in padded))
        return EisensteinElement(self, (reduced[0], reduced[1], reduced[2]), m)

    @property
    def zero(self) -> EisensteinElement:
        return self.make(((0,), (0,), (0,)))

    @property
    def one(self) -> EisensteinElement:
        return self.make(((1,), (0,), (0,)))

    def pi(self) -> EisensteinElement:
        return self.make(((0,), (1,), (0,)))

    def pi_power(self, e: int) -> EisensteinElement:
        if e < 0:
            raise ValueError("negative powers of Pi are not integral")
        return self.one.shift(e)

    def element(self, c0: object = 0, c1: object = 0, c2: object = 0) -> EisensteinElement:
        parts = [self.base.coerce(c).coeffs for c in (c0, c1, c2)]
        return self.make(parts)

    def from_unramified(self, u: UnramifiedInteger) -> EisensteinElement:
        return self.make((u.coeffs, (0,), (0,)), 3 * u.precision)

    def lift_residue(self, x: FieldElement) -> EisensteinElement:
        return self.make((self.base.lift(x).coeffs, (0,), (0,)))

    def coerce(self, value: object) -> EisensteinElement:
        if isinstance(value, EisensteinElement):
            return value
        if isinstance(value, UnramifiedInteger):
            return self.from_unramified(value)
        if isinstance(value, FieldElement):
            return self.lift_residue(value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return self.make((self.base.coerce(value).coeffs, (0,), (0,)))
        raise TypeError(f"cannot coerce {type(value).__name__} into the Eisenstein ring")

    def is_zero(self, x: EisensteinElement) -> bool:
        return x.is_zero()


@dataclass(frozen=True, eq=False)
class EisensteinElement:
    ring: EisensteinRing
    comps: Components
    precision: int

    __hash__ = None  # type: ignore[assignment]

    def _coerce(self, other: object) -> EisensteinElement | None:
        if isinstance(other, EisensteinElement):
            return other
        if isinstance(other, (int, Fraction, UnramifiedInteger)) and not isinstance(other, bool):
            return self.ring.coerce(other)
        return None

    @property
    def components(self) -> tuple[UnramifiedInteger, UnramifiedInteger, UnramifiedInteger]:
        base = self.ring.base
        out = []
        for c, n in zip(self.comps, component_precisions(self.precision)):
            out.append(base.element(c, max(n, 1)))
        return out[0], out[1], out[2]

    def valuation(self) -> int:
        """Pi-adic valuation, capped at (and equal to) ``precision`` for zero."""
        p = self.ring.p
        best = self.precision
        for i, c in enumerate(self.comps):
            if any(c):
                best = min(best, 3 * vector_valuation(c, p, self.precision) + i)
        return best

    def is_zero(self) -> bool:
        return not any(any(c) for c in self.comps)

    def is_unit(self) -> bool:
        return any(x % self.ring.p for x in self.comps[0])

    def __add__(self, other: object) -> EisensteinElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = min(self.precision, o.precision)
        return self.ring.make(
            [[a + b for a, b in zip(x, y)] for x, y in zip(self.comps, o.comps)], m
        )

    __radd__ = __add__

    def __neg__(self) -> EisensteinElement:
        return self.ring.make([[-a for a in x] for x in self.comps], self.precision)

    def __sub__(self, other: object) -> EisensteinElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = min(self.precision, o.precision)
        return self.ring.make(
            [[a - b for a, b in zip(x, y)] for x, y in zip(self.comps, o.comps)], m
        )

    def __rsub__(self, other: object) -> EisensteinElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> EisensteinElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = min(self.precision + o.valuation(), o.precision + self.valuation(),
                self.ring.precision)
        p = self.ring.p
        mod = p ** ((m + 2) // 3)
        tail = self.ring.base.tail
        k = self.ring.k
        zero = (0,) * k

        def mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
            if not any(a) or not any(b):
                return zero
            return mul_mod_poly(a, b, tail, mod)

        c0, c1, c2 = self.comps
        d0, d1, d2 = o.comps
        e0 = [x + p * (y + z) for x, y, z in zip(mul(c0, d0), mul(c1, d2), mul(c2, d1))]
        e1 = [x + y + p * z for x, y, z in zip(mul(c0, d1), mul(c1, d0), mul(c2, d2))]
        e2 = [x + y + z for x, y, z in zip(mul(c0, d2), mul(c1, d1), mul(c2, d0))]
        return self.ring.make((e0, e1, e2), m)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> EisensteinElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def agrees_to(self, other: EisensteinElement, m: int) -> bool:
        """True when self and other agree modulo Pi^m."""
        diff = self - other
        if diff.precision < m and not diff.is_zero():
            return False
        if diff.precision < m:
            raise PrecisionExhaustedError(
                f"cannot compare to Pi^{m} with only Pi^{diff.precision} known"
            )
        return diff.valuation() >= m

    def shift(self, e: int) -> EisensteinElement:
        """Multiply by Pi^e; negative e divides and needs valuation >= -e."""
        c0, c1, c2 = self.comps
        p = self.ring.p
        if e >= 0:
            comps: list[Sequence[int]] = [c0, c1, c2]
            for _ in range(e):
                comps = [[p * x for x in comps[2]], comps[0], comps[1]]
            return self.ring.make(comps, self.precision + e)
        if self.valuation() < -e and not self.is_zero():
            raise NotAUnitError(self.valuation())
        if self.precision + e < 1:
            raise PrecisionExhaustedError(
                f"dividing by Pi^{-e} leaves no digits of a Pi^{self.precision} element"
            )
        comps = [c0, c1, c2]
        for _ in range(-e):
            comps = [comps[1], comps[2], [x // p for x in comps[0]]]
        return self.ring.make(comps, self.precision + e)

    def inverse(self) -> EisensteinElement:
        v = self.valuation()
        if v > 0:
            raise NotAUnitError(v)
        residue = self.reduce().inverse()
        y = self.ring.lift_residue(residue)
        for _ in range(2 * self.precision.bit_length() + 2):
            y_next = y * (2 - self * y)
            if y_next == y:
                break
            y = y_next
        y = self.ring.make(y.comps, self.precision)
        if not (self * y - 1).is_zero():
            raise PrecisionExhaustedError("Newton inversion did not converge")
        return y

    def reduce(self) -> FieldElement:
        """Image in the residue field (mod Pi)."""
        return self.ring.residue.element(self.comps[0])

    def conjugate(self, omega: UnramifiedInteger) -> EisensteinElement:
        """Apply sigma: Pi -> omega * Pi, trivial on W."""
        w = omega.coeffs
        w2 = mul_mod_poly(w, w, self.ring.base.tail, self.ring.p**self.ring.base.precision)
        mod = self.ring.p ** ((self.precision + 2) // 3)
        tail = self.ring.base.tail
        c0, c1, c2 = self.comps
        return self.ring.make(
            (c0, mul_mod_poly(c1, w, tail, mod), mul_mod_poly(c2, w2, tail, mod)),
            self.precision,
        )

    def with_precision(self, m: int) -> EisensteinElement:
        return self.ring.make(self.comps, min(m, self.precision))

    def __repr__(self) -> str:
        return f"EisensteinElement({self.comps} + O(Pi^{self.precision}))"


def eisenstein_invert(x: EisensteinElement) -> EisensteinElement:
    """Inverse of a unit; raises NotAUnitError carrying the valuation otherwise."""
    return x.inverse()
