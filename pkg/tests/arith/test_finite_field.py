"""
Tests for finite field arithmetic.
"""

from fractions import Fraction

import pytest

from cubicbrauer.arith.finite_field import (
    FiniteField,
    cube_roots_of_unity,
    smallest_irreducible,
    validate_prime,
)
from cubicbrauer.errors import InvalidPrimeError, NotIntegralError


class TestValidatePrime:
    """Tests for the prime check."""

    @pytest.mark.parametrize("p", [5, 7, 11, 101])
    def test_accepts_primes_from_five(self, p: int) -> None:
        """Test that primes >= 5 pass through unchanged."""
        assert validate_prime(p) == p

    @pytest.mark.parametrize("p", [2, 3, 4, 9, 25, -5, True, "7", 7.0])
    def test_rejects_everything_else(self, p: object) -> None:
        """Test that small primes, composites and non-integers are rejected."""
        with pytest.raises(InvalidPrimeError) as excinfo:
            validate_prime(p)
        assert excinfo.value.stage == "arith"


class TestFiniteField:
    """Tests for FiniteField and FieldElement."""

    def test_modulus_is_reproducible(self) -> None:
        """Test that F_25 is built on t^2 + 2, the smallest irreducible."""
        assert smallest_irreducible(5, 2) == (2, 0, 1)
        field = FiniteField.of(5, 2)
        assert field.modulus == (2, 0, 1)
        assert field.order == 25
        assert FiniteField.of(5, 2) is field

    def test_prime_field_arithmetic(self) -> None:
        """Test the four operations in F_7."""
        f7 = FiniteField.of(7)
        a, b = f7(3), f7(5)
        assert a + b == f7(1)
        assert a - b == f7(5)
        assert a * b == f7(1)
        assert a / b == f7(3) * f7(3)
        assert a.inverse() == f7(5)
        assert a**6 == f7.one

    def test_extension_arithmetic(self) -> None:
        """Test multiplication, inversion and Frobenius in F_25."""
        field = FiniteField.of(5, 2)
        t = field.generator()
        assert t * t == field(3)
        assert t * t.inverse() == field.one
        # t^5 = t * (t^2)^2 = 9t = -t
        assert t.frobenius() == -t
        assert t.frobenius(2) == t
        assert t.degree() == 2
        assert field(3).degree() == 1

    def test_zero_has_no_inverse(self) -> None:
        """Test that inverting zero raises ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            FiniteField.of(5).zero.inverse()

    def test_coerce_rationals(self) -> None:
        """Test that p-integral fractions reduce and poles are rejected."""
        f5 = FiniteField.of(5)
        assert f5.coerce(Fraction(1, 2)) == f5(3)
        assert f5.coerce(-1) == f5(4)
        with pytest.raises(NotIntegralError):
            f5.coerce(Fraction(1, 5))
        with pytest.raises(TypeError):
            f5.coerce(True)

    def test_mixing_fields_is_an_error(self) -> None:
        """Test that elements of different fields do not combine."""
        with pytest.raises(ValueError):
            FiniteField.of(5)(1) + FiniteField.of(7)(1)

    def test_integer_encoding(self) -> None:
        """Test that to_int and from_int are inverse and enumerate the field."""
        field = FiniteField.of(5, 2)
        t = field.generator()
        assert t.to_int() == 5
        assert field.from_int(5) == t
        assert [x.to_int() for x in field.elements()] == list(range(25))

    def test_string_form(self) -> None:
        """Test the polynomial rendering of extension elements."""
        field = FiniteField.of(5, 2)
        assert str(field.element([3, 2])) == "2*t + 3"
        assert str(field.generator()) == "t"
        assert str(field.zero) == "0"
        assert str(FiniteField.of(7)(4)) == "4"

    def test_is_cube(self) -> None:
        """Test cube detection: everything is a cube in F_5, only 0, 1, 6 in F_7."""
        f5 = FiniteField.of(5)
        assert all(x.is_cube() for x in f5.elements())
        f7 = FiniteField.of(7)
        assert [x.to_int() for x in f7.elements() if x.is_cube()] == [0, 1, 6]


class TestCubeRootsOfUnity:
    """Tests for the primitive cube roots of unity."""

    def test_in_f7(self) -> None:
        """Test that F_7 has the cube roots 2 and 4."""
        roots = cube_roots_of_unity(FiniteField.of(7))
        assert [r.to_int() for r in roots] == [2, 4]

    def test_absent_from_f5(self) -> None:
        """Test that F_5 has no primitive cube root of unity."""
        assert cube_roots_of_unity(FiniteField.of(5)) == []

    def test_in_f25(self) -> None:
        """Test that the roots in F_25 are primitive and square to each other."""
        omega, other = cube_roots_of_unity(FiniteField.of(5, 2))
        assert not omega.is_one()
        assert omega**3 == omega.field.one
        assert omega * omega == other
