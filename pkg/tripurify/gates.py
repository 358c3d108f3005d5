"""Gate and single-site operator constructors.

Multi-qubit gates here are permutations of the computational basis, built
directly from index arithmetic (qubit 0 = most significant bit).
"""

from __future__ import annotations

from functools import reduce
from typing import Sequence

import numpy as np

from tripurify.errors import DimensionError
from tripurify.qmat import MAX_QUBITS, Operator

# Pauli matrices
I2 = np.eye(2, dtype=np.complex128)
X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def kron_many(*matrices: np.ndarray) -> np.ndarray:
    """Kronecker product of several matrices, leftmost factor most significant."""
    return reduce(np.kron, matrices)


def _check_qubit(q: int, num_qubits: int) -> None:
    if not 0 <= q < num_qubits:
        raise DimensionError(f"qubit {q} out of range for {num_qubits} qubits")


def embed(single: np.ndarray, qubit: int, num_qubits: int) -> np.ndarray:
    """Lift a 2x2 matrix to act on ``qubit`` of an ``num_qubits`` register."""
    _check_qubit(qubit, num_qubits)
    factors = [I2] * num_qubits
    factors[qubit] = np.asarray(single, dtype=np.complex128)
    return kron_many(*factors)


def _bit(index: np.ndarray, qubit: int, num_qubits: int) -> np.ndarray:
    return (index >> (num_qubits - 1 - qubit)) & 1


def permutation_operator(images: np.ndarray, num_qubits: int) -> Operator:
    """Unitary sending basis ket |i> to |images[i]>."""
    dim = 2**num_qubits
    matrix = np.zeros((dim, dim), dtype=np.complex128)
    matrix[images, np.arange(dim)] = 1.0
    return Operator(matrix, num_qubits, unitary_flag=True)


def pauli_x(qubit: int, num_qubits: int) -> Operator:
    """Bit flip on one qubit, e.g. X applied to |0><0| gives |1><1|."""
    return Operator(embed(X, qubit, num_qubits), num_qubits, unitary_flag=True)


def cnot(control: int, target: int, num_qubits: int) -> Operator:
    """CNOT flipping ``target`` when ``control`` is 1."""
    if num_qubits > MAX_QUBITS:
        raise DimensionError(f"{num_qubits} qubits exceeds the {MAX_QUBITS}-qubit limit")
    _check_qubit(control, num_qubits)
    _check_qubit(target, num_qubits)
    if control == target:
        raise DimensionError("CNOT control and target must differ")
    index = np.arange(2**num_qubits)
    flip = _bit(index, control, num_qubits) << (num_qubits - 1 - target)
    return permutation_operator(index ^ flip, num_qubits)


def qubit_permutation(destinations: Sequence[int]) -> Operator:
    """Relabel qubits: the qubit at position i moves to ``destinations[i]``."""
    n = len(destinations)
    if sorted(destinations) != list(range(n)):
        raise DimensionError(f"{list(destinations)} is not a permutation of 0..{n - 1}")
    index = np.arange(2**n)
    images = np.zeros_like(index)
    for src, dst in enumerate(destinations):
        images |= _bit(index, src, n) << (n - 1 - dst)
    return permutation_operator(images, n)


def cyclic_shift_operator(num_qubits: int) -> Operator:
    """Cyclic relabeling |q0 q1 ... q(n-1)> -> |q(n-1) q0 ... q(n-2)>."""
    return qubit_permutation([(q + 1) % num_qubits for q in range(num_qubits)])
