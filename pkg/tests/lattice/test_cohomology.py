"""
Tests for cohomology of cyclic groups acting on lattices.
"""

import numpy as np
import pytest

from cubicbrauer.errors import SublatticeNotStableError
from cubicbrauer.lattice.cohomology import h0, h1_cyclic, joint_h0, tate_h0_cyclic
from cubicbrauer.lattice.picard import LatticeAction


def _shift() -> LatticeAction:
    """The cyclic shift e0 -> e1 -> e2 -> e0 on Z^3."""
    matrix = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=object)
    return LatticeAction(matrix, 3)


class TestCyclicCohomology:
    """Tests for H^0, H^1 and the Tate group."""

    def test_permutation_module(self) -> None:
        """Test that a C3 shift on Z^3 has H^0 = Z(1,1,1) and H^1 = 0."""
        result = h1_cyclic(_shift())
        assert result.h0_rank == 1
        assert result.h0_basis == ((1, 1, 1),)
        assert result.h1_invariants == ()
        assert result.h1_order == 1
        assert tate_h0_cyclic(_shift()) == ()

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_trivial_action_on_z(self, n: int) -> None:
        """Test that the trivial action of order n on Z has H^1 = 0 and Tate H^0 = Z/n."""
        action = LatticeAction.trivial(1, n)
        assert h1_cyclic(action).h1_invariants == ()
        assert tate_h0_cyclic(action) == (n,)

    def test_sign_action(self) -> None:
        """Test that -1 on Z has no invariants and H^1 = Z/2."""
        action = LatticeAction(np.array([[-1]], dtype=object), 2)
        result = h1_cyclic(action)
        assert result.h0_rank == 0
        assert result.h1_invariants == (2,)
        assert tate_h0_cyclic(action) == ()

    def test_augmentation_sublattice(self) -> None:
        """Test the sum-zero sublattice of the shift: H^0 = 0 and H^1 = Z/3."""
        sublattice = np.array([[1, 0], [-1, 1], [0, -1]], dtype=object)
        result = h1_cyclic(_shift(), sublattice)
        assert result.h0_rank == 0
        assert result.h1_invariants == (3,)

    def test_unstable_sublattice(self) -> None:
        """Test that a sublattice moved by the action is rejected."""
        with pytest.raises(SublatticeNotStableError):
            h0(_shift(), np.array([[1], [0], [0]], dtype=object))

    def test_joint_invariants(self) -> None:
        """Test that the shift and a transposition fix only (1, 1, 1)."""
        swap = LatticeAction(np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=object), 2)
        rank, basis = joint_h0([_shift(), swap])
        assert rank == 1
        assert basis == ((1, 1, 1),)
        with pytest.raises(ValueError):
            joint_h0([])
