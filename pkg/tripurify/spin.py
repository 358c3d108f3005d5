"""Collective spin operators for groups of spin-1/2 qubits (hbar = 1)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from tripurify.errors import DimensionError
from tripurify.gates import X, Y, Z, embed
from tripurify.qmat import Operator


@dataclass(frozen=True)
class SpinOperatorSet:
    """Components J_x, J_y, J_z and J^2 of the total spin of ``indices``."""

    indices: tuple[int, ...]
    num_qubits: int
    jx: Operator
    jy: Operator
    jz: Operator
    j2: Operator

    def max_commutator(self) -> float:
        """Largest [J^2, J_a] entry over the three components."""
        return max(self.j2.commutator_norm(j) for j in (self.jx, self.jy, self.jz))


def spin_operator_set(indices: Iterable[int], num_qubits: int) -> SpinOperatorSet:
    """Build J_a = sum_i sigma_a^(i) / 2 over ``indices`` and J^2 = J.J.

    Raises:
        DimensionError: If ``indices`` is empty or out of range.
    """
    group = tuple(sorted(set(indices)))
    if not group:
        raise DimensionError("total spin needs at least one qubit")
    if group[0] < 0 or group[-1] >= num_qubits:
        raise DimensionError(f"indices {group} out of range for {num_qubits} qubits")

    components = [
        sum(embed(pauli / 2.0, q, num_qubits) for q in group) for pauli in (X, Y, Z)
    ]
    j2 = sum(c @ c for c in components)
    jx, jy, jz = (Operator(c, num_qubits) for c in components)
    return SpinOperatorSet(
        indices=group,
        num_qubits=num_qubits,
        jx=jx,
        jy=jy,
        jz=jz,
        j2=Operator(np.asarray(j2), num_qubits),
    )


def total_spin_squared(indices: Iterable[int], num_qubits: int) -> Operator:
    """J^2 of the qubits in ``indices`` within an ``num_qubits`` register."""
    return spin_operator_set(indices, num_qubits).j2
