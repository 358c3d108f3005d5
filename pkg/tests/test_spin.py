import numpy as np
import pytest

from tripurify.errors import DimensionError
from tripurify.spin import spin_operator_set, total_spin_squared


def test_single_spin_half():
    j2 = total_spin_squared([0], 1)
    np.testing.assert_allclose(j2.entries, 0.75 * np.eye(2))


def test_two_spins_triplet_and_singlet():
    evals = np.linalg.eigvalsh(total_spin_squared([0, 1], 2).entries)
    np.testing.assert_allclose(evals, [0.0, 2.0, 2.0, 2.0], atol=1e-12)


def test_three_spins_spectrum():
    evals = np.linalg.eigvalsh(total_spin_squared([0, 1, 2], 3).entries)
    np.testing.assert_allclose(evals, [0.75] * 4 + [3.75] * 4, atol=1e-12)


@pytest.mark.parametrize("indices, n", [([0, 1, 2], 3), ([0, 1], 3), ([1, 3], 4)])
def test_components_commute_with_j2(indices, n):
    ops = spin_operator_set(indices, n)
    assert ops.max_commutator() < 1e-12
    assert ops.j2.is_hermitian()


def test_duplicate_indices_collapse():
    assert spin_operator_set([1, 0, 1], 2).indices == (0, 1)


@pytest.mark.parametrize("indices", [[], [3]])
def test_bad_indices(indices):
    with pytest.raises(DimensionError):
        spin_operator_set(indices, 3)
