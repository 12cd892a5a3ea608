"""
Tests for polynomials over finite fields and their factorization.
"""

import pytest

from cubicbrauer.arith.finite_field import FiniteField
from cubicbrauer.arith.polynomials import (
    FqPoly,
    cube_roots,
    distinct_degree_factorization,
    ff_factor,
    field_embedding,
    squarefree_decomposition,
)
from cubicbrauer.errors import ZeroPolynomialError


def _product(factors: list[tuple[FqPoly, int]], field: FiniteField) -> FqPoly:
    out = FqPoly.constant(field, 1)
    for factor, mult in factors:
        for _ in range(mult):
            out = out * factor
    return out


class TestFqPoly:
    """Tests for FqPoly arithmetic."""

    def setup_method(self) -> None:
        """Set up the test environment."""
        self.f7 = FiniteField.of(7)

    def test_division_with_remainder(self) -> None:
        """Test that divmod satisfies a = q*b + r with deg r < deg b."""
        a = FqPoly.from_ints(self.f7, [1, 2, 3, 4, 5])
        b = FqPoly.from_ints(self.f7, [3, 0, 1])
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_trailing_zeros_are_stripped(self) -> None:
        """Test that leading zero coefficients do not count toward the degree."""
        poly = FqPoly.from_ints(self.f7, [1, 1, 0, 7])
        assert poly.degree == 1
        assert FqPoly.from_ints(self.f7, [0, 0]).is_zero()

    def test_gcd_is_monic(self) -> None:
        """Test that the gcd of (x-1)(x-2) and 3(x-1)(x-3) is x - 1."""
        x = FqPoly.x(self.f7)
        one, two, three = (FqPoly.constant(self.f7, c) for c in (1, 2, 3))
        a = (x - one) * (x - two)
        b = ((x - one) * (x - three)).scale(self.f7(3))
        assert a.gcd(b) == x - one

    def test_roots(self) -> None:
        """Test that x^3 - 1 has roots 1, 2 and 4 in F_7 and only 1 in F_5."""
        assert [r.to_int() for r in FqPoly.from_ints(self.f7, [-1, 0, 0, 1]).roots()] == [1, 2, 4]
        f5 = FiniteField.of(5)
        assert [r.to_int() for r in FqPoly.from_ints(f5, [-1, 0, 0, 1]).roots()] == [1]

    def test_zero_polynomial(self) -> None:
        """Test that roots and factorization refuse the zero polynomial."""
        zero = FqPoly(self.f7, ())
        with pytest.raises(ZeroPolynomialError):
            zero.roots()
        with pytest.raises(ZeroPolynomialError):
            ff_factor(zero)


class TestFactorization:
    """Tests for the square-free, distinct-degree and equal-degree steps."""

    def test_squarefree_decomposition(self) -> None:
        """Test that (x-1)^2 (x-2) splits into its square-free parts."""
        f7 = FiniteField.of(7)
        x = FqPoly.x(f7)
        one, two = FqPoly.constant(f7, 1), FqPoly.constant(f7, 2)
        parts = squarefree_decomposition((x - one) * (x - one) * (x - two))
        assert sorted((p.degree, m) for p, m in parts) == [(1, 1), (1, 2)]

    def test_pth_power_input(self) -> None:
        """Test that x^7 - 1 = (x - 1)^7 over F_7 factors with multiplicity 7."""
        f7 = FiniteField.of(7)
        factors = ff_factor(FqPoly.from_ints(f7, [-1, 0, 0, 0, 0, 0, 0, 1]))
        assert len(factors) == 1
        assert factors[0][1] == 7
        assert factors[0][0] == FqPoly.from_ints(f7, [-1, 1])

    def test_distinct_degree(self) -> None:
        """Test that x^4 - 1 over F_7 has two linear and one quadratic factor."""
        f7 = FiniteField.of(7)
        blocks = distinct_degree_factorization(FqPoly.from_ints(f7, [-1, 0, 0, 0, 1]))
        assert sorted((b.degree, d) for b, d in blocks) == [(2, 1), (2, 2)]

    def test_factor_product_and_order(self) -> None:
        """Test that factors multiply back and come sorted by degree."""
        f5 = FiniteField.of(5)
        poly = FqPoly.from_ints(f5, [3, 1, 0, 4, 2, 0, 1, 3])
        factors = ff_factor(poly)
        assert _product(factors, f5).scale(poly.lc) == poly
        degrees = [f.degree for f, _ in factors]
        assert degrees == sorted(degrees)
        assert all(f.coeffs[-1].is_one() for f, _ in factors)

    def test_seed_does_not_change_the_result(self) -> None:
        """Test that the factorization is independent of the random seed."""
        f5 = FiniteField.of(5, 2)
        poly = FqPoly.from_ints(f5, [1, 0, 0, 0, 0, 0, 0, 0, 0, 1])
        assert ff_factor(poly, seed=1) == ff_factor(poly, seed=12345)


class TestCubeRootsAndEmbeddings:
    """Tests for cube roots and embeddings of subfields."""

    def test_cube_roots(self) -> None:
        """Test that 1 has three cube roots in F_7 and one in F_5."""
        assert [r.to_int() for r in cube_roots(FiniteField.of(7).one)] == [1, 2, 4]
        assert cube_roots(FiniteField.of(5)(3)) == [FiniteField.of(5)(2)]
        assert cube_roots(FiniteField.of(7)(3)) == []
        assert cube_roots(FiniteField.of(7).zero) == [FiniteField.of(7).zero]

    def test_embedding_is_a_homomorphism(self) -> None:
        """Test that F_25 -> F_5^4 respects sums and products."""
        source, target = FiniteField.of(5, 2), FiniteField.of(5, 4)
        embed = field_embedding(source, target)
        for a in source.elements():
            for b in (source.generator(), source.from_int(13)):
                assert embed(a * b) == embed(a) * embed(b)
                assert embed(a + b) == embed(a) + embed(b)

    def test_embedding_requires_divisibility(self) -> None:
        """Test that F_25 does not embed in F_125."""
        with pytest.raises(ValueError):
            field_embedding(FiniteField.of(5, 2), FiniteField.of(5, 3))
