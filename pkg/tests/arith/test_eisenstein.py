"""
Tests for the totally ramified extension W[Pi], Pi^3 = p.
"""

import pytest

from cubicbrauer.arith.eisenstein import (
    EisensteinRing,
    component_precisions,
    eisenstein_invert,
)
from cubicbrauer.arith.finite_field import FiniteField, cube_roots_of_unity
from cubicbrauer.arith.padic import UnramifiedRing, teichmuller_lift
from cubicbrauer.errors import NotAUnitError, PrecisionExhaustedError


class TestEisensteinRing:
    """Tests for EisensteinRing and EisensteinElement."""

    def setup_method(self) -> None:
        """Set up the test environment."""
        self.ring = EisensteinRing.over(FiniteField.of(5), 12)

    def test_component_precisions(self) -> None:
        """Test how a Pi-adic precision splits over the three components."""
        assert component_precisions(7) == (3, 2, 2)
        assert component_precisions(9) == (3, 3, 3)

    def test_base_must_carry_precision(self) -> None:
        """Test that W_2 cannot carry Pi-adic precision 9."""
        with pytest.raises(ValueError):
            EisensteinRing(UnramifiedRing(FiniteField.of(5), 2), 9)

    def test_base_precision(self) -> None:
        """Test that the unramified base may carry more digits than ceil(M/3)."""
        assert self.ring.base.precision == 4
        wide = EisensteinRing.over(FiniteField.of(5), 12, 10)
        assert wide.base.precision == 10
        assert wide.precision == 12
        with pytest.raises(ValueError):
            EisensteinRing.over(FiniteField.of(5), 12, 3)

    def test_pi_cubed_is_p(self) -> None:
        """Test the defining relation Pi^3 = p."""
        pi = self.ring.pi()
        assert pi**3 == self.ring.coerce(5)
        assert (pi**3).valuation() == 3
        assert self.ring.pi_power(4) == pi * self.ring.coerce(5)

    def test_valuation(self) -> None:
        """Test Pi-adic valuations of mixed elements."""
        assert self.ring.element(0, 3, 1).valuation() == 1
        assert self.ring.element(25, 0, 5).valuation() == 5
        assert self.ring.zero.valuation() == 12
        assert self.ring.element(2, 1).is_unit()

    def test_inverse(self) -> None:
        """Test that units invert and Pi does not."""
        x = self.ring.element(2, 1, 3)
        assert x * x.inverse() == self.ring.one
        with pytest.raises(NotAUnitError) as excinfo:
            self.ring.pi().inverse()
        assert excinfo.value.valuation == 1

    def test_invert_function(self) -> None:
        """Test the functional form of inversion on a unit and on Pi^2."""
        x = self.ring.element(3, 4)
        assert eisenstein_invert(x) * x == self.ring.one
        with pytest.raises(NotAUnitError):
            eisenstein_invert(self.ring.pi_power(2))

    def test_shift(self) -> None:
        """Test multiplication and exact division by powers of Pi."""
        five = self.ring.coerce(5)
        assert five.shift(-1) == self.ring.pi_power(2)
        assert self.ring.one.shift(2) == self.ring.pi_power(2)
        with pytest.raises(NotAUnitError):
            self.ring.pi().shift(-2)

    def test_shift_loses_precision(self) -> None:
        """Test that dividing by Pi lowers the known precision."""
        x = self.ring.coerce(5)
        assert x.shift(-3).precision == 9
        with pytest.raises(PrecisionExhaustedError):
            self.ring.zero.shift(-12)

    def test_agrees_to(self) -> None:
        """Test congruence modulo powers of Pi."""
        a = self.ring.one
        b = self.ring.one + self.ring.pi_power(5)
        assert a.agrees_to(b, 5)
        assert not a.agrees_to(b, 6)

    def test_reduce(self) -> None:
        """Test reduction modulo Pi."""
        assert self.ring.element(7, 1, 1).reduce() == FiniteField.of(5)(2)


class TestConjugation:
    """Tests for the automorphism Pi -> omega * Pi."""

    def test_conjugation_has_order_three(self) -> None:
        """Test that conjugating three times is the identity and fixes p."""
        field = FiniteField.of(5, 2)
        ring = EisensteinRing.over(field, 9)
        omega = teichmuller_lift(cube_roots_of_unity(field)[0], ring.base)
        x = ring.element(3, 2, 1)
        once = x.conjugate(omega)
        assert once != x
        assert once.conjugate(omega).conjugate(omega) == x
        assert ring.coerce(5).conjugate(omega) == ring.coerce(5)
        pi = ring.pi()
        assert pi.conjugate(omega) == ring.from_unramified(omega) * pi
