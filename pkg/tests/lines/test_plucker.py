"""
Tests for Pluecker coordinates of lines over finite fields.
"""

import pytest

from cubicbrauer.arith.finite_field import FiniteField
from cubicbrauer.errors import PrecisionExhaustedError
from cubicbrauer.lines.plucker import (
    ProjectiveLine,
    lines_meet,
    normalize,
    on_plane,
    plane_through,
)


class TestProjectiveLine:
    """Tests for lines of P^3 over F_5."""

    def setup_method(self) -> None:
        """Set up the test environment."""
        self.field = FiniteField.of(5)
        f = self.field
        self.e = [tuple(f(int(i == j)) for j in range(4)) for i in range(4)]

    def test_coordinate_line(self) -> None:
        """Test the Pluecker vector of the line X2 = X3 = 0."""
        line = ProjectiveLine.from_rows(self.e[0], self.e[1])
        assert line.key() == (1, 0, 0, 0, 0, 0)
        assert line.chart() == (0, 1)
        assert line.relation().is_zero()
        assert line.degree() == 1

    def test_normalized_first_unit(self) -> None:
        """Test that the first nonzero coordinate is scaled to 1."""
        f = self.field
        u = (f(0), f(2), f(0), f(0))
        v = (f(0), f(0), f(3), f(1))
        line = ProjectiveLine.from_rows(u, v)
        first = next(c for c in line.coords if not c.is_zero())
        assert first.is_one()
        assert line.chart() == (1, 2)

    def test_same_line_from_other_rows(self) -> None:
        """Test that two spanning pairs of one line give the same key."""
        f = self.field
        a = ProjectiveLine.from_rows(self.e[0], self.e[1])
        u = tuple(x + y for x, y in zip(self.e[0], self.e[1]))
        v = tuple(f(2) * x for x in self.e[1])
        assert ProjectiveLine.from_rows(u, v).key() == a.key()

    def test_meeting(self) -> None:
        """Test incidence through the Pluecker pairing."""
        a = ProjectiveLine.from_rows(self.e[0], self.e[1])
        b = ProjectiveLine.from_rows(self.e[0], self.e[2])
        c = ProjectiveLine.from_rows(self.e[2], self.e[3])
        assert lines_meet(a, b)
        assert not lines_meet(a, c)

    def test_plane_through_point(self) -> None:
        """Test the plane spanned by X2 = X3 = 0 and (0:0:1:0)."""
        line = ProjectiveLine.from_rows(self.e[0], self.e[1])
        plane = plane_through(line, self.e[2])
        assert [c.to_int() for c in plane] == [0, 0, 0, 1]
        assert on_plane(plane, self.e[0])
        assert not on_plane(plane, self.e[3])

    def test_frobenius_fixes_rational_line(self) -> None:
        """Test that a line over F_5 is its own Frobenius image."""
        line = ProjectiveLine.from_rows(self.e[0], self.e[3])
        assert line.frobenius().key() == line.key()

    def test_zero_vector(self) -> None:
        """Test that the zero vector cannot be normalized."""
        with pytest.raises(PrecisionExhaustedError):
            normalize([self.field.zero] * 6)
