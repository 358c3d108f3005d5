"""Shared test utilities: random states and simplex strategies."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st

from tripurify.models import CoefficientVector
from tripurify.qmat import DensityMatrix


def random_density(seed: int, num_qubits: int) -> DensityMatrix:
    """Full-rank random state from a seeded Ginibre matrix."""
    rng = np.random.default_rng(seed)
    dim = 2**num_qubits
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    rho = rho / np.trace(rho).real
    return DensityMatrix(0.5 * (rho + rho.conj().T), num_qubits)


def simplex(size: int = 8) -> st.SearchStrategy[CoefficientVector]:
    """Points of the probability simplex with ``size`` entries."""
    return (
        st.lists(
            st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
            min_size=size,
            max_size=size,
        )
        .filter(lambda v: sum(v) > 1e-3)
        .map(lambda v: CoefficientVector(c=tuple(x / sum(v) for x in v)))
    )
