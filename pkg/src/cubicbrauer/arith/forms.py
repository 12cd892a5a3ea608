"""
Homogeneous forms with coefficients in any of the analyzer's rings.

A form stores a sparse map from exponent tuples to nonzero coefficients
together with its ring, variable count and degree (so the zero form keeps
its degree). The ring only has to offer ``zero``, ``one``, ``coerce`` and
``is_zero``; rationals, finite fields, W_N and W_N[Pi] all qualify.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any

import sympy

Exponent = tuple[int, ...]

VARIABLE_NAMES = ("x", "y", "z", "w")


class RationalField:
    """Q with Fraction elements."""

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value: object) -> Fraction:
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot coerce {type(value).__name__} into Q")
        return Fraction(value)

    def is_zero(self, value: Fraction) -> bool:
        return value == 0

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


def monomials(nvars: int, degree: int) -> list[Exponent]:
    """All exponent tuples of the given degree, in descending lexicographic order."""
    out = [
        e for e in itertools.product(range(degree, -1, -1), repeat=nvars) if sum(e) == degree
    ]
    return out


def _binary_mul(a: Sequence[Any], b: Sequence[Any], zero: Any) -> list[Any]:
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


@dataclass(frozen=True, eq=False)
class HomogeneousForm:
    ring: Any
    nvars: int
    degree: int
    terms: tuple[tuple[Exponent, Any], ...]

    def __post_init__(self) -> None:
        for exps, _ in self.terms:
            if len(exps) != self.nvars or sum(exps) != self.degree:
                raise ValueError(
                    f"monomial {exps} does not belong to a degree-{self.degree} form "
                    f"in {self.nvars} variables"
                )

    @classmethod
    def from_dict(
        cls, ring: Any, nvars: int, degree: int, coeffs: Mapping[Exponent, Any]
    ) -> HomogeneousForm:
        terms = []
        for exps, c in coeffs.items():
            c = ring.coerce(c)
            if not ring.is_zero(c):
                terms.append((tuple(exps), c))
        terms.sort(key=lambda t: t[0], reverse=True)
        return cls(ring, nvars, degree, tuple(terms))

    @classmethod
    def zero_form(cls, ring: Any, nvars: int, degree: int) -> HomogeneousForm:
        return cls(ring, nvars, degree, ())

    @classmethod
    def linear(cls, ring: Any, coeffs: Sequence[Any]) -> HomogeneousForm:
        n = len(coeffs)
        return cls.from_dict(
            ring, n, 1, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)}
        )

    @cached_property
    def coefficients(self) -> dict[Exponent, Any]:
        return dict(self.terms)

    def coefficient(self, exps: Exponent) -> Any:
        return self.coefficients.get(tuple(exps), self.ring.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def variables_used(self) -> set[int]:
        return {i for exps, _ in self.terms for i, e in enumerate(exps) if e}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogeneousForm):
            return NotImplemented
        if (self.nvars, self.degree) != (other.nvars, other.degree):
            return False
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def _combine(self, other: HomogeneousForm, sign: int) -> HomogeneousForm:
        if (self.nvars, self.degree) != (other.nvars, other.degree):
            raise ValueError("forms of different shape")
        acc: dict[Exponent, Any] = dict(self.coefficients)
        for exps, c in other.terms:
            prev = acc.get(exps, self.ring.zero)
            acc[exps] = prev + c if sign > 0 else prev - c
        return HomogeneousForm.from_dict(self.ring, self.nvars, self.degree, acc)

    def __add__(self, other: HomogeneousForm) -> HomogeneousForm:
        return self._combine(other, 1)

    def __sub__(self, other: HomogeneousForm) -> HomogeneousForm:
        return self._combine(other, -1)

    def __neg__(self) -> HomogeneousForm:
        return self.scale(-self.ring.one)

    def scale(self, c: Any) -> HomogeneousForm:
        c = self.ring.coerce(c)
        return HomogeneousForm.from_dict(
            self.ring, self.nvars, self.degree, {e: a * c for e, a in self.terms}
        )

    def __mul__(self, other: HomogeneousForm) -> HomogeneousForm:
        if other.nvars != self.nvars:
            raise ValueError("forms in different numbers of variables")
        acc: dict[Exponent, Any] = {}
        for e1, a in self.terms:
            for e2, b in other.terms:
                e = tuple(x + y for x, y in zip(e1, e2))
                acc[e] = acc.get(e, self.ring.zero) + a * b
        return HomogeneousForm.from_dict(self.ring, self.nvars, self.degree + other.degree, acc)

    def map_coefficients(self, fn: Callable[[Any], Any], ring: Any) -> HomogeneousForm:
        """Apply fn to every coefficient, landing in ``ring`` (reduction, lifting)."""
        return HomogeneousForm.from_dict(
            ring, self.nvars, self.degree, {e: fn(c) for e, c in self.terms}
        )

    def evaluate(self, point: Sequence[Any]) -> Any:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, form has {self.nvars}")
        total = self.ring.zero
        for exps, c in self.terms:
            term = c
            for x, e in zip(point, exps):
                if e:
                    term = term * x**e
            total = total + term
        return total

    def partial(self, i: int) -> HomogeneousForm:
        if self.degree == 0:
            raise ValueError("cannot differentiate a constant form")
        acc = {}
        for exps, c in self.terms:
            if exps[i]:
                e = list(exps)
                e[i] -= 1
                acc[tuple(e)] = c * exps[i]
        return HomogeneousForm.from_dict(self.ring, self.nvars, self.degree - 1, acc)

    def gradient(self) -> list[HomogeneousForm]:
        return [self.partial(i) for i in range(self.nvars)]

    def substitute(self, matrix: Sequence[Sequence[Any]]) -> HomogeneousForm:
        """The form x -> F(A x) for a square matrix A (rows indexed by old variables)."""
        n = self.nvars
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError(f"substitution matrix must be {n}x{n}")
        images = [HomogeneousForm.linear(self.ring, list(row)) for row in matrix]
        one = HomogeneousForm.from_dict(self.ring, n, 0, {(0,) * n: self.ring.one})
        powers: dict[tuple[int, int], HomogeneousForm] = {}

        def power(i: int, e: int) -> HomogeneousForm:
            if e == 0:
                return one
            if (i, e) not in powers:
                powers[(i, e)] = power(i, e - 1) * images[i]
            return powers[(i, e)]

        result = HomogeneousForm.zero_form(self.ring, n, self.degree)
        for exps, c in self.terms:
            term = one.scale(c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def restrict_to_line(self, u: Sequence[Any], v: Sequence[Any]) -> list[Any]:
        """
        Coefficients of the binary form F(lambda*u + mu*v).

        Entry k is the coefficient of lambda^(d-k) mu^k.
        """
        zero = self.ring.zero
        cache: dict[tuple[int, int], list[Any]] = {}

        def power(i: int, e: int) -> list[Any]:
            if (i, e) not in cache:
                base = [u[i], v[i]]
                cache[(i, e)] = base if e == 1 else _binary_mul(power(i, e - 1), base, zero)
            return cache[(i, e)]

        result = [zero] * (self.degree + 1)
        for exps, c in self.terms:
            poly = [c]
            for i, e in enumerate(exps):
                if e:
                    poly = _binary_mul(poly, power(i, e), zero)
            for k, x in enumerate(poly):
                result[k] = result[k] + x
        return result

    def to_sympy(self, gens: Sequence[sympy.Symbol], as_int: Callable[[Any], int]) -> sympy.Expr:
        expr = sympy.Integer(0)
        for exps, c in self.terms:
            mono = sympy.Integer(as_int(c))
            for g, e in zip(gens, exps):
                if e:
                    mono = mono * g**e
            expr = expr + mono
        return expr

    def __str__(self) -> str:
        return format_form(self.terms, self.nvars)


HomogeneousCubicForm = HomogeneousForm


def form_substitute(form: HomogeneousForm, matrix: Sequence[Sequence[Any]]) -> HomogeneousForm:
    """F(A x); the form-level name for ``HomogeneousForm.substitute``."""
    return form.substitute(matrix)


def format_form(terms: Iterable[tuple[Exponent, Any]], nvars: int) -> str:
    names = VARIABLE_NAMES if nvars <= 4 else [f"X{i}" for i in range(nvars)]
    pieces = []
    for exps, c in terms:
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        text = str(c)
        negative = text.startswith("-")
        magnitude = text[1:] if negative else text
        if "+" in magnitude or " " in magnitude:
            magnitude = f"({magnitude})"
        if mono and magnitude == "1":
            body = mono
        elif mono:
            body = f"{magnitude}*{mono}"
        else:
            body = magnitude
        pieces.append(("- " if negative else "+ ") + body)
    if not pieces:
        return "0"
    out = " ".join(pieces)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]
