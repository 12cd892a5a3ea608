"""
Tests for the cubic form parser.
"""

from fractions import Fraction

import pytest

from cubicbrauer.errors import InputError, ParseError
from cubicbrauer.parsing import parse_cubic_form, tokenize


class TestTokenize:
    """Tests for tokenize."""

    def test_kinds_and_positions(self) -> None:
        """Test token kinds and 1-based columns."""
        tokens = tokenize("5*w^3")
        assert [t.kind for t in tokens] == ["number", "op", "var", "op", "number", "end"]
        assert [t.column for t in tokens[:3]] == [1, 2, 3]

    def test_newlines(self) -> None:
        """Test that a newline advances the line and resets the column."""
        tokens = tokenize("x^3\n + y^3")
        plus = next(t for t in tokens if t.text == "+")
        assert (plus.line, plus.column) == (2, 2)

    def test_indexed_variables(self) -> None:
        """Test that X0..X3 are single tokens."""
        assert [t.text for t in tokenize("X0X3")[:2]] == ["X0", "X3"]

    def test_unexpected_character(self) -> None:
        """Test that an unknown character is reported with its position."""
        with pytest.raises(ParseError) as excinfo:
            tokenize("x^3 + y^3 $ z")
        assert excinfo.value.line == 1
        assert excinfo.value.column == 11


class TestParseCubicForm:
    """Tests for parse_cubic_form."""

    def test_diagonal_form(self) -> None:
        """Test the Fermat cone."""
        form = parse_cubic_form("x^3 + y^3 + z^3 + 5*w^3")
        assert form.coefficient((0, 0, 0, 3)) == 5
        assert form.coefficient((3, 0, 0, 0)) == 1
        assert len(form.terms) == 4

    def test_fractions_and_signs(self) -> None:
        """Test rational coefficients and a leading minus sign."""
        form = parse_cubic_form("-x^3 + 2/3*x*y*z + y^3 - 1/2*z^3 + w^3")
        assert form.coefficient((3, 0, 0, 0)) == -1
        assert form.coefficient((1, 1, 1, 0)) == Fraction(2, 3)
        assert form.coefficient((0, 0, 3, 0)) == Fraction(-1, 2)

    def test_juxtaposition(self) -> None:
        """Test that factors may be written side by side."""
        assert parse_cubic_form("xyz + x^3 + y^3 + z^3 + w^3") == \
            parse_cubic_form("x*y*z + x^3 + y^3 + z^3 + w^3")

    def test_like_terms_combined(self) -> None:
        """Test that repeated monomials are added and cancelled terms dropped."""
        form = parse_cubic_form("x^3 + x*x*x + y^3 + z^3 + w^3 + x^2*y - x*y*x")
        assert form.coefficient((3, 0, 0, 0)) == 2
        assert form.coefficient((2, 1, 0, 0)) == 0

    def test_plane_cubic(self) -> None:
        """Test three-variable input."""
        form = parse_cubic_form("X0^3 + X1^3 + X2^3", nvars=3)
        assert form.coefficient((0, 0, 3)) == 1

    def test_wrong_degree(self) -> None:
        """Test that a monomial of degree two is rejected."""
        with pytest.raises(ParseError, match="degree 2"):
            parse_cubic_form("x^3 + y^2 + z^3 + w^3")

    def test_missing_operator(self) -> None:
        """Test that two terms need an operator between them."""
        with pytest.raises(ParseError, match="expected '\\+' or '-'"):
            parse_cubic_form("x^3 2*y^3 + z^3 + w^3")

    def test_zero_denominator(self) -> None:
        """Test that a zero denominator is a parse error."""
        with pytest.raises(ParseError, match="zero denominator"):
            parse_cubic_form("1/0*x^3 + y^3 + z^3 + w^3")

    def test_unknown_variable(self) -> None:
        """Test that w is not a variable of a plane cubic."""
        with pytest.raises(ParseError, match="unknown variable 'w'"):
            parse_cubic_form("x^3 + y^3 + w^3", nvars=3)

    def test_zero_form(self) -> None:
        """Test that a form cancelling to zero is rejected."""
        with pytest.raises(InputError, match="zero"):
            parse_cubic_form("x^3 - x^3")

    def test_missing_variable(self) -> None:
        """Test that every variable must occur in a surface form."""
        with pytest.raises(InputError, match="w does not occur"):
            parse_cubic_form("x^3 + y^3 + z^3")

    def test_empty_input(self) -> None:
        """Test that empty text is a parse error at the end of input."""
        with pytest.raises(ParseError, match="end of input"):
            parse_cubic_form("")

    def test_degenerate_plane_cubic(self) -> None:
        """Test that a plane cubic may omit a variable."""
        form = parse_cubic_form("x^3 + y^3", nvars=3)
        assert form.variables_used() == {0, 1}

    def test_juxtaposed_powers_multiply(self) -> None:
        """Test that side-by-side powers form a single monomial."""
        with pytest.raises(ParseError, match="degree 6"):
            parse_cubic_form("x^3 y^3 + z^3 + w^3")
