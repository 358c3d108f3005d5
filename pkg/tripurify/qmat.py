"""Dense complex linear algebra for small multi-qubit registers.

Bit ordering: qubit 0 is the most significant bit of a basis index, so the
ket |q0 q1 ... q(n-1)> sits at index int("q0q1...", 2). Every module in the
package inherits this convention, including tensor products (left factor
major) and the reshape used by partial traces and measurements.

All values are immutable after construction and every operation returns a
new value.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from tripurify.errors import DimensionError, InvariantError
from tripurify.models import Role

logger = logging.getLogger(__name__)

MAX_QUBITS = 12
ALGEBRA_TOL = 1e-12
PSD_TOL = 1e-10
IMPOSSIBLE_BRANCH_TOL = 1e-14


def _frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=np.complex128, copy=True)
    out.flags.writeable = False
    return out


def _qubits_for_dim(dim: int) -> int:
    n = int(dim).bit_length() - 1
    if dim < 1 or 2**n != dim:
        raise DimensionError(f"dimension {dim} is not a power of two")
    return n


def _check_register(num_qubits: int, max_qubits: int = MAX_QUBITS) -> None:
    if num_qubits > max_qubits:
        raise DimensionError(
            f"register of {num_qubits} qubits exceeds the {max_qubits}-qubit limit"
        )


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StateVector:
    """Normalized pure state of ``num_qubits`` qubits."""

    amplitudes: np.ndarray
    num_qubits: int

    def __post_init__(self) -> None:
        amps = _frozen(np.ravel(self.amplitudes))
        _check_register(self.num_qubits)
        if amps.shape[0] != 2**self.num_qubits:
            raise DimensionError(
                f"{amps.shape[0]} amplitudes for {self.num_qubits} qubits"
            )
        norm_error = abs(float(np.vdot(amps, amps).real) - 1.0)
        if norm_error > ALGEBRA_TOL:
            raise InvariantError("unit norm", f"|norm^2 - 1| = {norm_error:.3e}")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(
        cls, amplitudes: Sequence[complex] | np.ndarray, normalize: bool = False
    ) -> StateVector:
        """Build a state from raw amplitudes, optionally normalizing them."""
        amps = np.asarray(amplitudes, dtype=np.complex128).ravel()
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0.0:
                raise InvariantError("unit norm", "zero vector")
            amps = amps / norm
        return cls(amps, _qubits_for_dim(amps.shape[0]))

    @classmethod
    def basis_ket(cls, bits: str) -> StateVector:
        """Computational basis ket, e.g. ``basis_ket("010")``."""
        _check_bitstring(bits, len(bits))
        amps = np.zeros(2 ** len(bits), dtype=np.complex128)
        amps[int(bits, 2) if bits else 0] = 1.0
        return cls(amps, len(bits))

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def inner(self, other: StateVector) -> complex:
        """Return <self|other>."""
        if other.num_qubits != self.num_qubits:
            raise DimensionError("inner product of different register sizes")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def density(self) -> DensityMatrix:
        return DensityMatrix(self.projector(), self.num_qubits)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix on ``num_qubits`` qubits."""

    entries: np.ndarray
    num_qubits: int

    def __post_init__(self) -> None:
        rho = _frozen(self.entries)
        _check_register(self.num_qubits)
        dim = 2**self.num_qubits
        if rho.shape != (dim, dim):
            raise DimensionError(f"shape {rho.shape} for {self.num_qubits} qubits")
        herm_error = float(np.max(np.abs(rho - rho.conj().T)))
        if herm_error > ALGEBRA_TOL:
            raise InvariantError("hermitian", f"max |rho - rho^dag| = {herm_error:.3e}")
        trace_error = abs(complex(np.trace(rho)) - 1.0)
        if trace_error > ALGEBRA_TOL:
            raise InvariantError("unit trace", f"|Tr rho - 1| = {trace_error:.3e}")
        smallest = float(np.linalg.eigvalsh(rho)[0])
        if smallest < -PSD_TOL:
            raise InvariantError("positive semidefinite", f"eigenvalue {smallest:.3e}")
        object.__setattr__(self, "entries", rho)

    @classmethod
    def from_matrix(cls, entries: np.ndarray) -> DensityMatrix:
        entries = np.asarray(entries, dtype=np.complex128)
        return cls(entries, _qubits_for_dim(entries.shape[0]))

    @classmethod
    def maximally_mixed(cls, num_qubits: int) -> DensityMatrix:
        dim = 2**num_qubits
        return cls(np.eye(dim, dtype=np.complex128) / dim, num_qubits)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def eigenvalues(self) -> np.ndarray:
        """Ascending real spectrum."""
        return np.linalg.eigvalsh(self.entries)

    def purity(self) -> float:
        return float(np.real(np.trace(self.entries @ self.entries)))

    def expectation(self, observable: np.ndarray) -> float:
        """Tr(O rho) for a Hermitian observable given as a matrix."""
        return float(np.real(np.trace(np.asarray(observable) @ self.entries)))

    def overlap(self, psi: StateVector) -> float:
        """<psi|rho|psi>."""
        if psi.num_qubits != self.num_qubits:
            raise DimensionError("overlap with a state of another register size")
        return float(np.real(np.vdot(psi.amplitudes, self.entries @ psi.amplitudes)))

    def allclose(self, other: DensityMatrix, atol: float = ALGEBRA_TOL) -> bool:
        return self.num_qubits == other.num_qubits and bool(
            np.allclose(self.entries, other.entries, rtol=0.0, atol=atol)
        )


@dataclass(frozen=True)
class Operator:
    """Square operator on ``num_qubits`` qubits; unitarity checked when flagged."""

    entries: np.ndarray
    num_qubits: int
    unitary_flag: bool = False

    def __post_init__(self) -> None:
        op = _frozen(self.entries)
        _check_register(self.num_qubits)
        dim = 2**self.num_qubits
        if op.shape != (dim, dim):
            raise DimensionError(f"shape {op.shape} for {self.num_qubits} qubits")
        if self.unitary_flag:
            defect = float(np.max(np.abs(op.conj().T @ op - np.eye(dim))))
            if defect > ALGEBRA_TOL:
                raise InvariantError("unitary", f"max |U^dag U - I| = {defect:.3e}")
        object.__setattr__(self, "entries", op)

    @classmethod
    def from_matrix(cls, entries: np.ndarray, unitary: bool = False) -> Operator:
        entries = np.asarray(entries, dtype=np.complex128)
        return cls(entries, _qubits_for_dim(entries.shape[0]), unitary)

    @classmethod
    def identity(cls, num_qubits: int) -> Operator:
        return cls(np.eye(2**num_qubits, dtype=np.complex128), num_qubits, True)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def dagger(self) -> Operator:
        return Operator(self.entries.conj().T, self.num_qubits, self.unitary_flag)

    def compose(self, other: Operator) -> Operator:
        """Matrix product ``self @ other`` (``other`` acts first)."""
        if other.num_qubits != self.num_qubits:
            raise DimensionError("composing operators of different register sizes")
        return Operator(
            self.entries @ other.entries,
            self.num_qubits,
            self.unitary_flag and other.unitary_flag,
        )

    def apply(self, psi: StateVector) -> np.ndarray:
        """Raw (unnormalized) image of a state vector."""
        if psi.num_qubits != self.num_qubits:
            raise DimensionError("operator and state register sizes differ")
        return self.entries @ psi.amplitudes

    def is_hermitian(self, tol: float = ALGEBRA_TOL) -> bool:
        return bool(np.max(np.abs(self.entries - self.entries.conj().T)) <= tol)

    def commutator_norm(self, other: Operator) -> float:
        """Max-entry norm of [self, other]."""
        comm = self.entries @ other.entries - other.entries @ self.entries
        return float(np.max(np.abs(comm)))


@dataclass(frozen=True)
class QubitLayout:
    """Where each party's source and target qubit lives in the joint register.

    ``for_parties`` puts the source triple first (qubits 0..k-1, parties in
    order) and the target triple after it (qubits k..2k-1), which makes the
    joint state exactly rho_source (x) rho_target.
    """

    party_labels: tuple[str, ...]
    source_qubits: tuple[int, ...]
    target_qubits: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.party_labels)
        if len(self.source_qubits) != k or len(self.target_qubits) != k:
            raise DimensionError("one source and one target qubit per party")
        if sorted(self.source_qubits + self.target_qubits) != list(range(2 * k)):
            raise InvariantError("layout indices form a permutation of 0..2k-1")

    @classmethod
    def for_parties(cls, parties: int) -> QubitLayout:
        if parties < 1 or parties > 26:
            raise DimensionError(f"unsupported party count {parties}")
        labels = tuple(chr(ord("A") + i) for i in range(parties))
        return cls(
            party_labels=labels,
            source_qubits=tuple(range(parties)),
            target_qubits=tuple(range(parties, 2 * parties)),
        )

    @property
    def parties(self) -> int:
        return len(self.party_labels)

    @property
    def num_qubits(self) -> int:
        return 2 * self.parties

    def index(self, party: str, role: Role) -> int:
        """Global qubit index of ``party``'s qubit in ``role``."""
        try:
            slot = self.party_labels.index(party)
        except ValueError as exc:
            raise DimensionError(f"unknown party {party!r}") from exc
        if role is Role.SOURCE:
            return self.source_qubits[slot]
        return self.target_qubits[slot]


@dataclass(frozen=True)
class MeasurementResult:
    """Outcome of a projective computational-basis measurement.

    ``post_state`` is None (and ``defined`` false) for branches whose
    probability is below the impossible-branch tolerance.
    """

    probability: float
    post_state: Optional[DensityMatrix]

    @property
    def defined(self) -> bool:
        return self.post_state is not None


@dataclass(frozen=True)
class Diagnostics:
    """Entanglement diagnostics of a density matrix."""

    purity: float
    marginal_entropies: tuple[float, ...]
    negativity_2q: Optional[float]


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

Tensorable = Union[StateVector, DensityMatrix, Operator]


def tensor_product(a: Tensorable, b: Tensorable, max_qubits: int = MAX_QUBITS) -> Tensorable:
    """Kronecker product ``a (x) b``; ``a`` occupies the leading qubits.

    Raises:
        DimensionError: If the result would exceed ``max_qubits`` qubits.
        TypeError: If the operands are of different kinds.
    """
    if type(a) is not type(b):
        raise TypeError(f"cannot tensor {type(a).__name__} with {type(b).__name__}")
    total = a.num_qubits + b.num_qubits
    if total > max_qubits:
        raise DimensionError(
            f"tensor product of {total} qubits exceeds the {max_qubits}-qubit limit"
        )
    if isinstance(a, StateVector):
        return StateVector(np.kron(a.amplitudes, b.amplitudes), total)
    if isinstance(a, DensityMatrix):
        return DensityMatrix(np.kron(a.entries, b.entries), total)
    return Operator(
        np.kron(a.entries, b.entries), total, a.unitary_flag and b.unitary_flag
    )


def tensor_all(*factors: Tensorable) -> Tensorable:
    """Left-to-right tensor product of several factors of one kind."""
    if not factors:
        raise ValueError("tensor_all needs at least one factor")
    result = factors[0]
    for factor in factors[1:]:
        result = tensor_product(result, factor)
    return result


def apply_operator(rho: DensityMatrix, u: Operator) -> DensityMatrix:
    """Return U rho U^dag.

    Raises:
        DimensionError: On mismatched register sizes.
        InvariantError: If ``u`` is not flagged unitary.
    """
    if rho.num_qubits != u.num_qubits:
        raise DimensionError(
            f"operator on {u.num_qubits} qubits applied to {rho.num_qubits}-qubit state"
        )
    if not u.unitary_flag:
        raise InvariantError("unitary", "apply_operator needs a unitary-flagged operator")
    evolved = u.entries @ rho.entries @ u.entries.conj().T
    return DensityMatrix(evolved, rho.num_qubits)


def _normalize_keep(keep: Iterable[int], num_qubits: int) -> list[int]:
    kept = sorted(set(int(q) for q in keep))
    if not kept:
        raise DimensionError("partial trace must keep at least one qubit")
    if kept[0] < 0 or kept[-1] >= num_qubits:
        raise DimensionError(f"qubit indices {kept} out of range for {num_qubits} qubits")
    return kept


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Trace out every qubit not listed in ``keep``; kept qubits stay in index order."""
    n = rho.num_qubits
    kept = _normalize_keep(keep, n)
    if len(kept) == n:
        return rho
    tensor = rho.entries.reshape((2,) * (2 * n))
    rows = list(range(n))
    cols = [q + n if q in kept else q for q in range(n)]
    out = [rows[q] for q in kept] + [cols[q] for q in kept]
    reduced = np.einsum(tensor, rows + cols, out)
    dim = 2 ** len(kept)
    return DensityMatrix(reduced.reshape(dim, dim), len(kept))


def partial_transpose(rho: DensityMatrix, qubits: Iterable[int]) -> np.ndarray:
    """Transpose the listed qubits; the result is generally not a state."""
    n = rho.num_qubits
    tensor = rho.entries.reshape((2,) * (2 * n))
    for q in set(qubits):
        if not 0 <= q < n:
            raise DimensionError(f"qubit {q} out of range for {n} qubits")
        tensor = np.swapaxes(tensor, q, q + n)
    return tensor.reshape(rho.dim, rho.dim)


def _check_bitstring(bits: str, length: int) -> None:
    if len(bits) != length or any(ch not in "01" for ch in bits):
        raise ValueError(f"malformed bitstring {bits!r} (expected {length} bits of 0/1)")


def measure_computational(
    rho: DensityMatrix, qubits: Sequence[int], outcome: str
) -> MeasurementResult:
    """Project ``qubits`` onto ``outcome`` and discard them.

    Returns:
        MeasurementResult with Tr(P rho P) and the renormalized state of the
        remaining qubits (None when the branch is impossible).
    """
    n = rho.num_qubits
    measured = [int(q) for q in qubits]
    if len(set(measured)) != len(measured):
        raise DimensionError(f"repeated qubit in {measured}")
    if any(not 0 <= q < n for q in measured):
        raise DimensionError(f"qubit indices {measured} out of range for {n} qubits")
    _check_bitstring(outcome, len(measured))

    index: list[object] = [slice(None)] * (2 * n)
    for q, bit in zip(measured, outcome):
        index[q] = int(bit)
        index[q + n] = int(bit)
    block = rho.entries.reshape((2,) * (2 * n))[tuple(index)]
    remaining = n - len(measured)
    dim = 2**remaining
    block = np.asarray(block).reshape(dim, dim)
    probability = float(np.real(np.trace(block)))

    if probability < IMPOSSIBLE_BRANCH_TOL:
        logger.debug("Outcome %s on qubits %s is impossible (p=%.3e)", outcome, measured, probability)
        return MeasurementResult(probability=max(probability, 0.0), post_state=None)

    block = 0.5 * (block + block.conj().T) / probability
    return MeasurementResult(
        probability=min(probability, 1.0),
        post_state=DensityMatrix(block, remaining),
    )


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy in bits."""
    evals = np.clip(rho.eigenvalues(), 0.0, None)
    evals = evals[evals > 1e-15]
    return float(max(0.0, -np.sum(evals * np.log2(evals))))


def negativity(rho: DensityMatrix, qubits: Iterable[int]) -> float:
    """Sum of |negative eigenvalues| of the partial transpose over ``qubits``."""
    evals = np.linalg.eigvalsh(partial_transpose(rho, qubits))
    return float(-np.sum(evals[evals < 0.0]))


def diagnostics(rho: DensityMatrix) -> Diagnostics:
    """Purity, single-qubit marginal entropies and (for two qubits) negativity."""
    n = rho.num_qubits
    entropies = tuple(von_neumann_entropy(partial_trace(rho, [q])) for q in range(n))
    return Diagnostics(
        purity=rho.purity(),
        marginal_entropies=entropies,
        negativity_2q=negativity(rho, [1]) if n == 2 else None,
    )
