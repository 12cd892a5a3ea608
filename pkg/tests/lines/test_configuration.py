"""
Tests for the combinatorics of the 27 lines.
"""

import pytest

from cubicbrauer.arith.finite_field import FiniteField
from cubicbrauer.brauer.analyzer import ConePipeline
from cubicbrauer.errors import GroupingFailureError, NoIsomorphismError
from cubicbrauer.lattice.picard import build_pic_lattice, permutation_order
from cubicbrauer.lines.configuration import (
    common_plane,
    frobenius_permutation,
    group_into_triples,
    identify_configuration,
    incidence_matrix,
    normalizes_sigma,
    permutation_cycles,
    transport_permutation,
)
from cubicbrauer.lines.plucker import ProjectiveLine


class TestPermutationCycles:
    """Tests for permutation_cycles."""

    def test_cycles(self) -> None:
        """Test the cycle decomposition of a small permutation."""
        assert permutation_cycles([1, 2, 0, 3, 5, 4]) == [(0, 1, 2), (3,), (4, 5)]


class TestCommonPlane:
    """Tests for common_plane over F_5."""

    def setup_method(self) -> None:
        """Set up the test environment."""
        f = FiniteField.of(5)
        self.e = [tuple(f(int(i == j)) for j in range(4)) for i in range(4)]

    def _line(self, i: int, j: int) -> ProjectiveLine:
        return ProjectiveLine.from_rows(self.e[i], self.e[j])

    def test_triangle_in_plane(self) -> None:
        """Test that the three sides of a triangle in w = 0 share that plane."""
        plane = common_plane([self._line(0, 1), self._line(0, 2), self._line(1, 2)])
        assert plane is not None
        assert [c.to_int() for c in plane][:3] == [0, 0, 0]
        assert not plane[3].is_zero()

    def test_skew_lines(self) -> None:
        """Test that two skew lines lie in no plane."""
        assert common_plane([self._line(0, 1), self._line(2, 3)]) is None
        assert common_plane([self._line(0, 1), self._line(0, 2), self._line(1, 3)]) is None

    def test_coincident_lines(self) -> None:
        """Test that one line repeated spans no plane."""
        assert common_plane([self._line(0, 1), self._line(0, 1)]) is None


class TestTriples:
    """Tests for the triples over the flexes."""

    def test_nine_triples(self, fermat_pipeline: ConePipeline) -> None:
        """Test that the 27 lines form nine triples over distinct flexes."""
        triples = fermat_pipeline.triples
        assert len(triples) == 9
        assert sorted(i for t in triples for i in t.indices) == list(range(27))
        assert len({t.flex for t in triples}) == 9
        curve = fermat_pipeline.curve.over(fermat_pipeline.field)
        for t in triples:
            assert curve.evaluate(t.flex.coords).is_zero()

    def test_too_few_lines(self, fermat_pipeline: ConePipeline) -> None:
        """Test that a partial set of lines cannot be grouped."""
        with pytest.raises(GroupingFailureError):
            group_into_triples(fermat_pipeline.x_lines[:26])


class TestActions:
    """Tests for sigma and Frobenius on the lines."""

    def test_sigma_cycles(self, fermat_pipeline: ConePipeline) -> None:
        """Test that sigma permutes each triple cyclically."""
        cycles = permutation_cycles(fermat_pipeline.sigma)
        assert sorted(len(c) for c in cycles) == [3] * 9
        triples = {frozenset(t.indices) for t in fermat_pipeline.triples}
        assert {frozenset(c) for c in cycles} == triples

    def test_frobenius_is_permutation(self, fermat_pipeline: ConePipeline) -> None:
        """Test that Frobenius permutes the 27 lines."""
        assert sorted(fermat_pipeline.frobenius) == list(range(27))

    def test_normalizes_sigma(self) -> None:
        """Test the relation Frob^-1 sigma Frob = sigma^p on one 3-cycle."""
        sigma = (1, 2, 0)
        swap = (0, 2, 1)
        assert normalizes_sigma(swap, sigma, 5)
        assert not normalizes_sigma((0, 1, 2), sigma, 5)
        assert normalizes_sigma((0, 1, 2), sigma, 7)
        assert not normalizes_sigma(swap, sigma, 7)

    def test_frobenius_normalizes_sigma(self, fermat_pipeline: ConePipeline) -> None:
        """Test that the checked Frobenius agrees with the pipeline's permutation."""
        perm = frobenius_permutation(fermat_pipeline.lifted, fermat_pipeline.sigma)
        assert perm == tuple(fermat_pipeline.frobenius)


class TestIdentification:
    """Tests for identify_configuration."""

    def test_bijection_preserves_incidence(self, fermat_pipeline: ConePipeline) -> None:
        """Test that the bijection matches the geometric and abstract intersections."""
        lattice = build_pic_lattice()
        lines = [item.residue_line for item in fermat_pipeline.lifted]
        incidence = incidence_matrix(lines)
        bijection = identify_configuration(incidence, lattice)
        assert sorted(bijection) == list(range(27))
        for a in range(27):
            for b in range(a + 1, 27):
                abstract = lattice.pair(lattice.lines[bijection[a]], lattice.lines[bijection[b]])
                assert (abstract == 1) == incidence[a][b]

    def test_transport_keeps_order(self, fermat_pipeline: ConePipeline) -> None:
        """Test that transported sigma still has order three."""
        moved = transport_permutation(fermat_pipeline.sigma, fermat_pipeline.bijection)
        assert permutation_order(moved) == 3

    def test_wrong_degrees(self) -> None:
        """Test that a configuration with the wrong valencies is rejected."""
        incidence = [[False] * 27 for _ in range(27)]
        with pytest.raises(NoIsomorphismError, match="degrees"):
            identify_configuration(incidence)
