"""
Truncated unramified p-adic integers W_N(F_q) = Z_p[t]/(m~(t)) mod p^N.

m~ is the integer lift of the modulus of the residue field, so reduction
mod p recovers F_q exactly. Every element carries its own absolute
precision; products and sums never claim more than their inputs justify.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotAUnitError, NotIntegralError, PrecisionExhaustedError
from .finite_field import FieldElement, FiniteField, mul_mod_poly


def int_valuation(n: int, p: int, cap: int) -> int:
    """v_p(n), returning ``cap`` for n = 0 or when it is at least cap."""
    if n == 0:
        return cap
    v = 0
    while n % p == 0 and v < cap:
        n //= p
        v += 1
    return v


def vector_valuation(coeffs: Sequence[int], p: int, cap: int) -> int:
    return min((int_valuation(c, p, cap) for c in coeffs), default=cap)


def rational_valuation(x: Fraction | int, p: int) -> int | None:
    """v_p of a rational number; None for zero."""
    x = Fraction(x)
    if x == 0:
        return None
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def rational_mod(x: Fraction | int, modulus: int, p: int) -> int:
    """Image of a p-integral rational in Z/modulus."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotIntegralError(f"{x} is not {p}-integral")
    return (x.numerator * pow(x.denominator, -1, modulus)) % modulus


@dataclass(frozen=True)
class UnramifiedRing:
    """W_N(F_q): ``residue`` is F_q and ``precision`` is N."""

    residue: FiniteField
    precision: int

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise ValueError(f"precision must be positive, got {self.precision}")

    @property
    def p(self) -> int:
        return self.residue.p

    @property
    def k(self) -> int:
        return self.residue.k

    @property
    def tail(self) -> tuple[int, ...]:
        return self.residue.tail

    @property
    def zero(self) -> UnramifiedInteger:
        return self.element((0,))

    @property
    def one(self) -> UnramifiedInteger:
        return self.element((1,))

    def element(self, coeffs: Sequence[int], precision: int | None = None) -> UnramifiedInteger:
        n = self.precision if precision is None else min(precision, self.precision)
        if n < 1:
            raise PrecisionExhaustedError(f"requested precision {n} carries no digits")
        if len(coeffs) > self.k:
            raise ValueError(f"{len(coeffs)} coefficients for degree {self.k}")
        mod = self.p**n
        padded = [c % mod for c in coeffs] + [0] * (self.k - len(coeffs))
        return UnramifiedInteger(self, tuple(padded), n)

    def coerce(self, value: object) -> UnramifiedInteger:
        if isinstance(value, UnramifiedInteger):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not ring elements")
        if isinstance(value, int):
            return self.element((value,))
        if isinstance(value, Fraction):
            return self.element((rational_mod(value, self.p**self.precision, self.p),))
        if isinstance(value, FieldElement):
            return self.lift(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into W_{self.precision}")

    def lift(self, x: FieldElement) -> UnramifiedInteger:
        """Coefficientwise lift of a residue (not the Teichmueller lift)."""
        if x.field != self.residue:
            raise ValueError(f"element of {x.field} lifted into W({self.residue})")
        return self.element(x.coeffs)

    def is_zero(self, x: UnramifiedInteger) -> bool:
        return x.is_zero()


@dataclass(frozen=True, eq=False)
class UnramifiedInteger:
    """An element of W_N known modulo p^precision."""

    ring: UnramifiedRing
    coeffs: tuple[int, ...]
    precision: int

    __hash__ = None  # type: ignore[assignment]

    def _coerce(self, other: object) -> UnramifiedInteger | None:
        if isinstance(other, UnramifiedInteger):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.coerce(other)
        return None

    def valuation(self) -> int:
        """v_p, equal to ``precision`` when the element is zero at its precision."""
        return vector_valuation(self.coeffs, self.ring.p, self.precision)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_unit(self) -> bool:
        return self.valuation() == 0

    def __add__(self, other: object) -> UnramifiedInteger:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.precision, o.precision)
        return self.ring.element([a + b for a, b in zip(self.coeffs, o.coeffs)], n)

    __radd__ = __add__

    def __neg__(self) -> UnramifiedInteger:
        return self.ring.element([-a for a in self.coeffs], self.precision)

    def __sub__(self, other: object) -> UnramifiedInteger:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.precision, o.precision)
        return self.ring.element([a - b for a, b in zip(self.coeffs, o.coeffs)], n)

    def __rsub__(self, other: object) -> UnramifiedInteger:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> UnramifiedInteger:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = min(self.precision + o.valuation(), o.precision + self.valuation(),
                self.ring.precision)
        mod = self.ring.p**n
        return UnramifiedInteger(self.ring, mul_mod_poly(self.coeffs, o.coeffs,
                                                         self.ring.tail, mod), n)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UnramifiedInteger:
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

    def inverse(self) -> UnramifiedInteger:
        v = self.valuation()
        if v > 0:
            raise NotAUnitError(v)
        y = self.ring.lift(self.reduce().inverse())
        two = self.ring.element((2,))
        for _ in range(2 * self.precision.bit_length() + 2):
            y_next = y * (two - self * y)
            if y_next == y:
                break
            y = y_next
        y = self.ring.element(y.coeffs, self.precision)
        if not (self * y - self.ring.one).is_zero():
            raise PrecisionExhaustedError("Newton inversion did not converge")
        return y

    def reduce(self) -> FieldElement:
        return self.ring.residue.element(self.coeffs)

    def with_precision(self, n: int) -> UnramifiedInteger:
        return self.ring.element(self.coeffs, min(n, self.precision))

    def __repr__(self) -> str:
        return f"UnramifiedInteger({self.coeffs} + O({self.ring.p}^{self.precision}))"


def teichmuller_lift(x: FieldElement, ring: UnramifiedRing) -> UnramifiedInteger:
    """
    The unique (q-1)-th root of unity (or zero) in W_N reducing to x.

    Newton iteration on T^(q-1) = 1 starting from the naive lift.
    """
    if x.is_zero():
        return ring.zero
    q = x.field.order
    t = ring.lift(x)
    for _ in range(2 * ring.precision.bit_length() + 4):
        u = t ** (q - 1)
        correction = t * (u - 1) * (u * (q - 1)).inverse()
        t_next = t - correction
        if t_next == t:
            break
        t = t_next
    if not (t**q == t):
        raise PrecisionExhaustedError("Teichmueller lift did not converge")
    return t
