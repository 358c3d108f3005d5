"""Mixed W states over the genuine basis.

Covers the general GB-diagonal family, the one-parameter concise family
obtained by twirling, the two-state total mixtures, and the W fraction.
"""

from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np

from tripurify.basis import GenuineBasis, basis_populations, genuine_basis
from tripurify.errors import DimensionError, InvariantError
from tripurify.models import CoefficientVector, MixturePreset, WFraction
from tripurify.qmat import DensityMatrix

logger = logging.getLogger(__name__)

W_TYPE_COUNT = 6


@lru_cache(maxsize=None)
def _basis(parties: int) -> GenuineBasis:
    return genuine_basis(parties)


def mixed_from_coeffs(c: CoefficientVector) -> DensityMatrix:
    """rho = sum_i C_i |GB^i><GB^i| (three or four parties, by vector length)."""
    basis = _basis(c.parties)
    vecs = basis.matrix()
    weights = c.as_array()
    # the simplex check admits a sum off by up to 1e-12
    weights = weights / weights.sum()
    rho = (vecs * weights) @ vecs.conj().T
    return DensityMatrix(rho, basis.qubit_count)


def concise_state(c1: float) -> DensityMatrix:
    """c1 |GB^1><GB^1| + ((1 - c1)/7)(I - |GB^1><GB^1|).

    Raises:
        InvariantError: If ``c1`` lies outside [0, 1].
    """
    if not 0.0 <= c1 <= 1.0:
        raise InvariantError("c1 in [0, 1]", f"c1 = {c1!r}")
    p1 = _basis(3).projector(1)
    rest = (1.0 - c1) / 7.0
    return DensityMatrix(c1 * p1 + rest * (np.eye(8) - p1), 3)


def gb1_population(rho: DensityMatrix) -> float:
    """<GB^1|rho|GB^1> for a three-qubit state."""
    _require_three_qubits(rho)
    return rho.overlap(_basis(3)[1])


def twirl_to_concise(rho: DensityMatrix) -> DensityMatrix:
    """Project onto the concise family, keeping the GB^1 population.

    The map is applied analytically, F P1 + ((1 - F)/7)(I - P1) with
    F = <GB^1|rho|GB^1>; no rotation set is sampled.
    """
    population = gb1_population(rho)
    logger.debug("Twirling to concise form at GB1 population %.12g", population)
    return concise_state(min(1.0, max(0.0, population)))


def w_fraction(rho: DensityMatrix) -> WFraction:
    """Largest overlap with GB^1..GB^6; ties go to the smallest index."""
    _require_three_qubits(rho)
    overlaps = basis_populations(rho, _basis(3))[:W_TYPE_COUNT]
    best = int(np.argmax(overlaps))
    return WFraction(value=float(overlaps[best]), argmax_index=best + 1)


def total_mixture(preset: MixturePreset, c1: float = 0.5) -> CoefficientVector:
    """Two-state mixtures of a phased W state and its flipped partner.

    ``gb1gb4``/``gb2gb5``/``gb3gb6`` weight the W member by ``c1`` and the
    flipped member by ``1 - c1``; ``equal-gb1gb4`` is the half-half mixture
    regardless of ``c1``.
    """
    if not 0.0 <= c1 <= 1.0:
        raise InvariantError("c1 in [0, 1]", f"c1 = {c1!r}")
    pairs = {
        MixturePreset.GB1_GB4: (1, 4),
        MixturePreset.GB2_GB5: (2, 5),
        MixturePreset.GB3_GB6: (3, 6),
        MixturePreset.EQUAL_GB1_GB4: (1, 4),
    }
    first, second = pairs[preset]
    weight = 0.5 if preset is MixturePreset.EQUAL_GB1_GB4 else c1
    return CoefficientVector.from_sparse({first: weight, second: 1.0 - weight})


def coefficients_of(rho: DensityMatrix) -> CoefficientVector:
    """Read GB populations back as a coefficient vector (off-diagonal parts dropped)."""
    parties = rho.num_qubits
    if parties not in (3, 4):
        raise DimensionError(f"no genuine basis for {parties} qubits")
    pops = np.clip(basis_populations(rho, _basis(parties)), 0.0, None)
    return CoefficientVector(c=tuple(float(p) for p in pops / pops.sum()))


def _require_three_qubits(rho: DensityMatrix) -> None:
    if rho.num_qubits != 3:
        raise DimensionError(f"expected a three-qubit state, got {rho.num_qubits} qubits")
