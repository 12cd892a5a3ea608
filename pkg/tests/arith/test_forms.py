"""
Tests for homogeneous forms and modular linear algebra.
"""

from fractions import Fraction

import pytest

from cubicbrauer.arith.finite_field import FiniteField
from cubicbrauer.arith.forms import QQ, HomogeneousForm, form_substitute, monomials
from cubicbrauer.arith.modular import inverse_mod, nullspace_mod, rank_mod


def _fermat_surface() -> HomogeneousForm:
    return HomogeneousForm.from_dict(
        QQ, 4, 3, {(3, 0, 0, 0): 1, (0, 3, 0, 0): 1, (0, 0, 3, 0): 1, (0, 0, 0, 3): 5}
    )


class TestHomogeneousForm:
    """Tests for HomogeneousForm."""

    def test_monomials(self) -> None:
        """Test that there are 20 cubic monomials in 4 variables, x^3 first."""
        cubics = monomials(4, 3)
        assert len(cubics) == 20
        assert cubics[0] == (3, 0, 0, 0)

    def test_degree_is_enforced(self) -> None:
        """Test that a quadratic monomial cannot enter a cubic form."""
        with pytest.raises(ValueError):
            HomogeneousForm.from_dict(QQ, 4, 3, {(2, 0, 0, 0): 1})

    def test_evaluate_and_partials(self) -> None:
        """Test evaluation and differentiation."""
        form = _fermat_surface()
        assert form.evaluate([1, 1, 1, 1]) == 8
        assert form.partial(3).coefficient((0, 0, 0, 2)) == 15
        assert [g.degree for g in form.gradient()] == [2, 2, 2, 2]

    def test_substitute_swaps_variables(self) -> None:
        """Test that exchanging x and w moves the coefficient 5."""
        swap = [[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]]
        swapped = _fermat_surface().substitute(swap)
        assert swapped.coefficient((3, 0, 0, 0)) == 5
        assert swapped.coefficient((0, 0, 0, 3)) == 1

    def test_form_substitute(self) -> None:
        """Test a symmetry of the form and a shear x -> x + y."""
        swap = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        form = _fermat_surface()
        once = form_substitute(form, swap)
        assert once == form
        shear = [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        sheared = form_substitute(form, shear)
        assert sheared.coefficient((2, 1, 0, 0)) == 3
        assert sheared.evaluate([1, 0, 0, 0]) == 1

    def test_restrict_to_line(self) -> None:
        """Test the binary cubic cut out on the line x = y = 0."""
        form = _fermat_surface()
        coeffs = form.restrict_to_line([0, 0, 1, 0], [0, 0, 0, 1])
        assert coeffs == [1, 0, 0, 5]

    def test_map_to_finite_field(self) -> None:
        """Test that reducing mod 5 kills the w^3 term."""
        f5 = FiniteField.of(5)
        reduced = _fermat_surface().map_coefficients(f5.coerce, f5)
        assert reduced.variables_used() == {0, 1, 2}
        assert len(reduced.terms) == 3

    def test_equality_and_arithmetic(self) -> None:
        """Test that forms compare by coefficients."""
        form = _fermat_surface()
        assert form + form == form.scale(2)
        assert (form - form).is_zero()
        assert form != form.scale(3)

    def test_string_form(self) -> None:
        """Test rendering with signs and fractions."""
        form = HomogeneousForm.from_dict(
            QQ, 4, 3, {(3, 0, 0, 0): 1, (0, 1, 1, 1): Fraction(-2, 3)}
        )
        assert str(form) == "x^3 - 2/3*y*z*w"
        assert str(HomogeneousForm.zero_form(QQ, 4, 3)) == "0"


class TestModularLinearAlgebra:
    """Tests for rank, kernel and inverse modulo a prime."""

    def test_rank(self) -> None:
        """Test rank over F_5 and F_3."""
        assert rank_mod([[1, 2], [2, 4]], 5) == 1
        assert rank_mod([[1, 2], [2, 1]], 3) == 1
        assert rank_mod([[1, 2], [2, 1]], 5) == 2

    def test_nullspace(self) -> None:
        """Test the kernel of x + 2y over F_5."""
        assert nullspace_mod([[1, 2]], 2, 5) == [[3, 1]]
        assert nullspace_mod([], 2, 5) == [[1, 0], [0, 1]]

    def test_inverse(self) -> None:
        """Test inversion of a 2x2 matrix over F_5 and the singular case."""
        assert inverse_mod([[1, 2], [3, 4]], 5) == [[3, 1], [4, 2]]
        with pytest.raises(ValueError):
            inverse_mod([[1, 2], [2, 4]], 5)
