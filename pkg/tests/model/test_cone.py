"""
Tests for cone normal forms, the s-reduction and the vertex check.
"""

import pytest

from cubicbrauer.config import CubicBrauerConfig
from cubicbrauer.errors import (
    EnumerationTooLargeError,
    NotAConeError,
    PreconditionError,
    UnitConditionError,
)
from cubicbrauer.model.cone import (
    ConeNormalForm,
    GoodReductionCertificate,
    cone_normal_form,
    good_plane_section,
    is_good_plane,
    reduce_fully,
    reduce_s,
    vertex_no_lift_check,
)
from cubicbrauer.model.surface import normalize_flat
from cubicbrauer.parsing import parse_cubic_form


def _normal_form(text: str, p: int = 5) -> ConeNormalForm:
    return cone_normal_form(normalize_flat(parse_cubic_form(text), p))


class TestConeNormalForm:
    """Tests for cone_normal_form."""

    def test_fermat_cone(self) -> None:
        """Test f, s and a for x^3 + y^3 + z^3 + 5w^3."""
        nf = _normal_form("x^3 + y^3 + z^3 + 5*w^3")
        assert nf.s == 1
        assert nf.a == 1
        assert nf.a_is_unit
        assert str(nf.f) == "x^3 + y^3 + z^3"
        assert nf.form == parse_cubic_form("x^3 + y^3 + z^3 + 5*w^3")
        assert nf.original_form() == parse_cubic_form("x^3 + y^3 + z^3 + 5*w^3")

    def test_s_is_the_minimal_valuation(self) -> None:
        """Test that s is the smallest valuation among the X3 monomials."""
        nf = _normal_form("x^3 + y^3 + z^3 + 125*w^3 + 25*x*w^2")
        assert nf.s == 2
        assert nf.a == 5
        assert not nf.a_is_unit

    def test_a_zero(self) -> None:
        """Test that a missing X3^3 term gives a = 0."""
        nf = _normal_form("x^3 + y^3 + z^3 + 5*z*w^2")
        assert nf.a == 0
        assert not nf.a_is_unit

    def test_not_a_cone(self) -> None:
        """Test that a smooth reduction has no cone normal form."""
        with pytest.raises(NotAConeError):
            _normal_form("x^3 + y^3 + z^3 + w^3")

    def test_plane_section(self) -> None:
        """Test that X3 = 0 is good and cuts out the smooth base curve."""
        nf = _normal_form("x^3 + y^3 + z^3 + 5*w^3")
        assert is_good_plane([0, 0, 0, 1], nf)
        assert not is_good_plane([1, 0, 0, 0], nf)
        with pytest.raises(PreconditionError):
            is_good_plane([5, 0, 0, 0], nf)
        assert str(good_plane_section(nf)) == "x^3 + y^3 + z^3"


class TestReduceS:
    """Tests for removing multiples of 3 from s."""

    def test_s_three_reaches_good_reduction(self) -> None:
        """Test that x^3 + y^3 + z^3 + 125w^3 has good reduction after one step."""
        result = reduce_s(_normal_form("x^3 + y^3 + z^3 + 125*w^3"))
        assert isinstance(result, GoodReductionCertificate)
        assert result.scalings == 1
        assert result.model.form == parse_cubic_form("x^3 + y^3 + z^3 + w^3")
        assert "smooth special fibre" in result.describe()

    def test_s_four_drops_to_one(self) -> None:
        """Test that s = 4 becomes s = 1 with the same a."""
        result = reduce_fully(_normal_form("x^3 + y^3 + z^3 + 625*w^3"))
        assert isinstance(result, ConeNormalForm)
        assert result.s == 1
        assert result.a == 1
        assert result.scalings == 1
        with pytest.raises(PreconditionError):
            result.original_form()

    def test_mixed_terms_pick_up_powers(self) -> None:
        """Test that a monomial of X3-degree e gains p^(3 - e)."""
        result = reduce_fully(_normal_form("x^3 + y^3 + z^3 + 625*w^3 + 625*x*w^2"))
        assert isinstance(result, ConeNormalForm)
        assert result.g.coefficient((1, 0, 0, 2)) == 5
        assert result.g.coefficient((0, 0, 0, 3)) == 1

    def test_preconditions(self) -> None:
        """Test that small s and non-unit a are refused."""
        with pytest.raises(PreconditionError):
            reduce_s(_normal_form("x^3 + y^3 + z^3 + 5*w^3"))
        with pytest.raises(UnitConditionError):
            reduce_s(_normal_form("x^3 + y^3 + z^3 + 125*z*w^2"))


class TestVertexCheck:
    """Tests for the search for lifts of the vertex."""

    def test_no_lift_for_fermat_cone(self) -> None:
        """Test that no point through the vertex solves F mod 125."""
        result = vertex_no_lift_check(_normal_form("x^3 + y^3 + z^3 + 5*w^3"))
        assert result.verified
        assert (result.depth, result.searched) == (0, 1)
        assert "no solution" in result.describe()

    def test_linear_term_needs_residues_mod_p(self) -> None:
        """Test that a 5xw^2 term makes the search run over y modulo 5."""
        result = vertex_no_lift_check(_normal_form("x^3 + y^3 + z^3 + 5*x*w^2 + 5*w^3"))
        assert result.verified
        assert (result.depth, result.searched) == (1, 125)

    def test_runs_at_thirteen(self) -> None:
        """Test that the default cap admits the search at p = 13."""
        nf = _normal_form("x^3 + y^3 + z^3 + x*y*z + 13*x*w^2 + 13*w^3", 13)
        result = vertex_no_lift_check(nf)
        assert result.verified
        assert result.searched == 13**3

    def test_cap(self) -> None:
        """Test that the search refuses to run above the configured cap."""
        CubicBrauerConfig.set("model.vertex_search_cap", 100)
        with pytest.raises(EnumerationTooLargeError):
            vertex_no_lift_check(_normal_form("x^3 + y^3 + z^3 + 5*x*w^2 + 5*w^3"))

    def test_requires_small_s(self) -> None:
        """Test that s = 3 must be reduced first."""
        with pytest.raises(PreconditionError):
            vertex_no_lift_check(_normal_form("x^3 + y^3 + z^3 + 125*w^3"))
