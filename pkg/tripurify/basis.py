"""Genuine bases of three and four qubits and their verification.

The three-qubit basis holds three phased W states, three phased flipped-W
states and the two GHZ states, in the order GB^1..GB^8, so that coefficient
index i always refers to GB^i. The four-qubit basis is returned in label
order GB4^1..GB4^16.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from tripurify.gates import cyclic_shift_operator
from tripurify.models import BasisReport, EigencheckEntry
from tripurify.qmat import ALGEBRA_TOL, DensityMatrix, StateVector
from tripurify.spin import total_spin_squared

logger = logging.getLogger(__name__)

# Phases exactly as printed: negative exponent for three qubits, positive for four.
OMEGA3 = np.exp(-2j * np.pi / 3)
OMEGA12 = np.exp(1j * np.pi / 6)

W_KETS = ("001", "010", "100")
FLIPPED_W_KETS = ("110", "101", "011")
PAIR_KETS = ("1100", "1010", "1001", "0110", "0101", "0011")


@dataclass(frozen=True)
class GenuineBasis:
    """Ordered orthonormal basis; ``states[i]`` carries ``labels[i]``."""

    states: tuple[StateVector, ...]
    qubit_count: int
    labels: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.states)

    def __getitem__(self, label_index: int) -> StateVector:
        """1-based access: ``basis[1]`` is GB^1."""
        return self.states[label_index - 1]

    def matrix(self) -> np.ndarray:
        """Columns are the basis states."""
        return np.column_stack([s.amplitudes for s in self.states])

    def projector(self, label_index: int) -> np.ndarray:
        return self[label_index].projector()


def _ket(terms: dict[str, complex], norm: float) -> StateVector:
    n = len(next(iter(terms)))
    amps = np.zeros(2**n, dtype=np.complex128)
    for bits, amplitude in terms.items():
        amps[int(bits, 2)] = amplitude / norm
    return StateVector(amps, n)


def genuine_basis_3() -> GenuineBasis:
    """GB^1..GB^8 for three qubits."""
    states: list[StateVector] = []
    for kets in (W_KETS, FLIPPED_W_KETS):
        for n in range(3):
            terms = {bits: OMEGA3 ** (k * n) for k, bits in enumerate(kets)}
            states.append(_ket(terms, np.sqrt(3)))
    states.append(_ket({"000": 1.0, "111": 1.0}, np.sqrt(2)))
    states.append(_ket({"000": 1.0, "111": -1.0}, np.sqrt(2)))
    return GenuineBasis(
        states=tuple(states),
        qubit_count=3,
        labels=tuple(f"GB{i}" for i in range(1, 9)),
    )


# Sign patterns of GB4^1..4 (single excitation) and GB4^5..8 (triple excitation).
_HADAMARD_SIGNS = ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))
# Powers of omega on PAIR_KETS for GB4^9..GB4^14; 6 stands for the printed minus sign.
_PAIR_PHASES = (
    (0, 0, 0, 0, 0, 0),
    (0, 10, 8, 6, 4, 2),
    (0, 8, 4, 0, 8, 4),
    (0, 6, 0, 6, 0, 6),
    (0, 4, 8, 0, 4, 8),
    (0, 2, 4, 6, 8, 10),
)


def genuine_basis_4() -> GenuineBasis:
    """GB4^1..GB4^16 for four qubits, in label order."""
    single = ("0001", "0010", "0100", "1000")
    triple = ("1110", "1101", "1011", "0111")
    states: list[StateVector] = []
    for kets in (single, triple):
        for signs in _HADAMARD_SIGNS:
            states.append(_ket(dict(zip(kets, signs)), 2.0))
    for powers in _PAIR_PHASES:
        terms = {bits: OMEGA12**p for bits, p in zip(PAIR_KETS, powers)}
        states.append(_ket(terms, np.sqrt(6)))
    states.append(_ket({"0000": 1.0, "1111": 1.0}, np.sqrt(2)))
    states.append(_ket({"0000": 1.0, "1111": -1.0}, np.sqrt(2)))
    return GenuineBasis(
        states=tuple(states),
        qubit_count=4,
        labels=tuple(f"GB4_{i}" for i in range(1, 17)),
    )


def genuine_basis(parties: int) -> GenuineBasis:
    """Basis for a three- or four-party register."""
    if parties == 3:
        return genuine_basis_3()
    if parties == 4:
        return genuine_basis_4()
    raise ValueError(f"no genuine basis for {parties} parties")


def verify_basis(basis: GenuineBasis, tol: float = ALGEBRA_TOL) -> BasisReport:
    """Measure orthonormality and completeness defects.

    Args:
        basis: The basis to check.
        tol: Pass threshold; every defect must be strictly below it.

    Returns:
        BasisReport with the three defect numbers.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    vecs = basis.matrix()
    gram = vecs.conj().T @ vecs
    size = gram.shape[0]
    offdiag = np.abs(gram - np.diag(np.diag(gram)))
    completeness = vecs @ vecs.conj().T - np.eye(vecs.shape[0])
    report = BasisReport(
        qubit_count=basis.qubit_count,
        size=size,
        max_offdiag_overlap=float(offdiag.max()) if size > 1 else 0.0,
        max_norm_error=float(np.max(np.abs(np.diag(gram).real - 1.0))),
        completeness_defect=float(np.max(np.abs(completeness))),
        tol=tol,
    )
    logger.info(
        "Basis of %d qubits: overlap %.2e, norm %.2e, completeness %.2e",
        basis.qubit_count,
        report.max_offdiag_overlap,
        report.max_norm_error,
        report.completeness_defect,
    )
    return report


def basis_populations(rho: DensityMatrix, basis: GenuineBasis) -> np.ndarray:
    """<GB^i|rho|GB^i> for every basis state, in basis order."""
    vecs = basis.matrix()
    return np.real(np.einsum("ki,kl,li->i", vecs.conj(), rho.entries, vecs))


# ---------------------------------------------------------------------------
# Total-spin eigencheck
# ---------------------------------------------------------------------------

def _rayleigh(op: np.ndarray, psi: StateVector) -> tuple[float, float]:
    image = op @ psi.amplitudes
    value = float(np.real(np.vdot(psi.amplitudes, image)))
    residual = float(np.linalg.norm(image - value * psi.amplitudes))
    return value, residual


def eigencheck(states: Iterable[tuple[str, StateVector]]) -> list[EigencheckEntry]:
    """Rayleigh quotient and residual of each state under J^2_123 and J^2_12."""
    j123 = total_spin_squared([0, 1, 2], 3).entries
    j12 = total_spin_squared([0, 1], 3).entries
    entries: list[EigencheckEntry] = []
    for label, psi in states:
        value_123, residual_123 = _rayleigh(j123, psi)
        value_12, residual_12 = _rayleigh(j12, psi)
        entries.append(
            EigencheckEntry(
                label=label,
                j123=value_123,
                j12=value_12,
                residual_123=residual_123,
                residual_12=residual_12,
            )
        )
    return entries


def basic_states() -> list[tuple[str, StateVector]]:
    """Symmetric W, flipped W, |000> and |111>."""
    return [
        ("W", _ket({bits: 1.0 for bits in W_KETS}, np.sqrt(3))),
        ("flipped-W", _ket({bits: 1.0 for bits in FLIPPED_W_KETS}, np.sqrt(3))),
        ("000", StateVector.basis_ket("000")),
        ("111", StateVector.basis_ket("111")),
    ]


def eigencheck_basic_states() -> list[EigencheckEntry]:
    return eigencheck(basic_states())


def eigencheck_genuine_basis() -> list[EigencheckEntry]:
    """The same check over GB^1..GB^8.

    GB^1, GB^4, GB^7, GB^8 share (15/4, 2); the phased W states GB^2, GB^3,
    GB^5, GB^6 sit in J^2_123 = 3/4 and mix the J^2_12 triplet and singlet.
    """
    basis = genuine_basis_3()
    return eigencheck(zip(basis.labels, basis.states))


def cyclic_phases(basis: GenuineBasis) -> list[complex]:
    """<GB|P|GB> for the cyclic qubit relabeling P."""
    shift = cyclic_shift_operator(basis.qubit_count)
    return [psi.inner(StateVector(shift.apply(psi), psi.num_qubits)) for psi in basis.states]


def cyclic_defects(basis: GenuineBasis) -> list[float]:
    """||P psi - <psi|P|psi> psi|| per state; zero means psi is a cyclic eigenvector."""
    shift = cyclic_shift_operator(basis.qubit_count)
    defects = []
    for psi in basis.states:
        image = shift.apply(psi)
        phase = np.vdot(psi.amplitudes, image)
        defects.append(float(np.linalg.norm(image - phase * psi.amplitudes)))
    return defects
