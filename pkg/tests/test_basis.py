import numpy as np
import pytest

from tripurify.basis import (
    OMEGA3,
    GenuineBasis,
    basis_populations,
    cyclic_defects,
    cyclic_phases,
    eigencheck_basic_states,
    eigencheck_genuine_basis,
    genuine_basis,
    genuine_basis_3,
    genuine_basis_4,
    verify_basis,
)
from tripurify.qmat import DensityMatrix, StateVector


@pytest.mark.parametrize("parties, size", [(3, 8), (4, 16)])
def test_basis_is_orthonormal_and_complete(parties, size):
    report = verify_basis(genuine_basis(parties), tol=1e-12)
    assert report.size == size
    assert report.passed
    assert report.max_offdiag_overlap < 1e-12
    assert report.completeness_defect < 1e-12


def test_broken_basis_fails():
    basis = genuine_basis_3()
    states = (basis[1],) + basis.states[1:7] + (basis[1],)
    broken = GenuineBasis(states=states, qubit_count=3, labels=basis.labels)
    assert not verify_basis(broken).passed


def test_verify_rejects_non_positive_tolerance():
    with pytest.raises(ValueError):
        verify_basis(genuine_basis_3(), tol=0.0)


def test_unknown_party_count():
    with pytest.raises(ValueError):
        genuine_basis(5)


def test_labels_and_one_based_access():
    basis = genuine_basis_3()
    assert len(basis) == 8
    assert basis.labels[0] == "GB1"
    assert basis[8] is basis.states[7]
    assert genuine_basis_4().labels[-1] == "GB4_16"


def test_gb1_is_the_symmetric_w_state():
    w = StateVector.from_amplitudes([0, 1, 1, 0, 1, 0, 0, 0], normalize=True)
    assert abs(genuine_basis_3()[1].inner(w)) == pytest.approx(1.0)


def test_gb7_and_gb8_are_ghz_states():
    basis = genuine_basis_3()
    ghz_plus = StateVector.from_amplitudes([1, 0, 0, 0, 0, 0, 0, 1], normalize=True)
    ghz_minus = StateVector.from_amplitudes([1, 0, 0, 0, 0, 0, 0, -1], normalize=True)
    assert basis[7].inner(ghz_plus) == pytest.approx(1.0)
    assert basis[8].inner(ghz_minus) == pytest.approx(1.0)


def test_phased_w_uses_negative_exponent():
    gb2 = genuine_basis_3()[2].amplitudes
    assert gb2[0b010] / gb2[0b001] == pytest.approx(OMEGA3)
    assert gb2[0b100] / gb2[0b001] == pytest.approx(OMEGA3**2)


def test_basis_populations_of_a_basis_state():
    basis = genuine_basis_4()
    pops = basis_populations(basis[11].density(), basis)
    expected = np.zeros(16)
    expected[10] = 1.0
    np.testing.assert_allclose(pops, expected, atol=1e-12)


def test_populations_of_maximally_mixed_state():
    pops = basis_populations(DensityMatrix.maximally_mixed(3), genuine_basis_3())
    np.testing.assert_allclose(pops, np.full(8, 1 / 8), atol=1e-12)


class TestEigencheck:
    def test_basic_states_share_eigenvalues(self):
        for entry in eigencheck_basic_states():
            assert entry.j123 == pytest.approx(15 / 4, abs=1e-12), entry.label
            assert entry.j12 == pytest.approx(2.0, abs=1e-12), entry.label
            assert entry.is_simultaneous_eigenvector(1e-12), entry.label

    def test_symmetric_basis_states_keep_the_property(self):
        entries = {e.label: e for e in eigencheck_genuine_basis()}
        for label in ("GB1", "GB4", "GB7", "GB8"):
            assert entries[label].is_simultaneous_eigenvector(1e-12), label
            assert entries[label].j123 == pytest.approx(15 / 4)

    def test_phased_w_states_mix_the_pair_spin(self):
        entries = {e.label: e for e in eigencheck_genuine_basis()}
        for label in ("GB2", "GB3", "GB5", "GB6"):
            entry = entries[label]
            assert entry.j123 == pytest.approx(3 / 4, abs=1e-12)
            assert entry.residual_123 < 1e-12
            assert entry.j12 == pytest.approx(1.0, abs=1e-12)
            assert entry.residual_12 == pytest.approx(1.0, abs=1e-12)
            assert not entry.is_simultaneous_eigenvector(1e-12)


class TestCyclicShift:
    def test_three_qubit_basis_states_are_eigenvectors(self):
        assert max(cyclic_defects(genuine_basis_3())) < 1e-12

    def test_three_qubit_phases(self):
        phases = cyclic_phases(genuine_basis_3())
        for n in range(3):
            assert phases[n] == pytest.approx(OMEGA3**n)
            assert phases[3 + n] == pytest.approx(OMEGA3**n)
        assert phases[6] == pytest.approx(1.0)
        assert phases[7] == pytest.approx(1.0)

    def test_symmetric_four_qubit_states(self):
        basis = genuine_basis_4()
        defects = cyclic_defects(basis)
        for label in (1, 5, 9, 15, 16):
            assert defects[label - 1] < 1e-12
