"""Fidelity-based entanglement witnesses alpha*I - |psi><psi|.

A negative expectation certifies entanglement of the class of ``psi``.
Three presets ship: a W witness with the 13/20 bound, the standard W
witness (2/3), and the GHZ witness (3/4) on GB^7. The two W presets put
the concise-family threshold at different places; the report says so.
"""

from __future__ import annotations

import logging
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from tripurify.analysis import ROOT_SCAN_POINTS, ROOT_TOL, scan_roots
from tripurify.basis import genuine_basis_3
from tripurify.errors import DimensionError
from tripurify.models import WitnessPreset, WitnessReading, WitnessSummary
from tripurify.qmat import ALGEBRA_TOL, DensityMatrix, StateVector
from tripurify.wstates import concise_state

logger = logging.getLogger(__name__)

# preset -> (alpha, GB label index)
PRESETS: dict[WitnessPreset, tuple[float, int]] = {
    WitnessPreset.PAPER_W: (13 / 20, 1),
    WitnessPreset.STANDARD_W: (2 / 3, 1),
    WitnessPreset.GHZ: (3 / 4, 7),
}


class WitnessSpec(BaseModel):
    """alpha*I - |target><target| with alpha strictly inside (0, 1)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: float = Field(gt=0.0, lt=1.0)
    target_state: StateVector
    target_label: str = ""


def preset(name: WitnessPreset) -> WitnessSpec:
    alpha, index = PRESETS[name]
    basis = genuine_basis_3()
    return WitnessSpec(alpha=alpha, target_state=basis[index], target_label=basis.labels[index - 1])


def witness_expectation(rho: DensityMatrix, w: WitnessSpec) -> float:
    """Tr[(alpha*I - |psi><psi|) rho] = alpha - <psi|rho|psi>."""
    if rho.num_qubits != w.target_state.num_qubits:
        raise DimensionError(
            f"witness on {w.target_state.num_qubits} qubits, state on {rho.num_qubits}"
        )
    return w.alpha - rho.overlap(w.target_state)


def witness_threshold(
    w: WitnessSpec, scan_points: int = ROOT_SCAN_POINTS, tol: float = ROOT_TOL
) -> Optional[float]:
    """Smallest C1 where the expectation on the concise state crosses zero.

    Returns None when the expectation keeps one sign on [0, 1].
    """
    roots = scan_roots(
        lambda c1: witness_expectation(concise_state(c1), w), 0.0, 1.0, scan_points, tol
    )
    return roots[0] if roots else None


def witness_on_state(
    rho: DensityMatrix,
    name: WitnessPreset,
    scan_points: int = ROOT_SCAN_POINTS,
    tol: float = ROOT_TOL,
) -> WitnessReading:
    """Evaluate a preset on ``rho``; detection means a negative expectation."""
    w = preset(name)
    expectation = witness_expectation(rho, w)
    return WitnessReading(
        preset=name,
        alpha=w.alpha,
        target_label=w.target_label,
        expectation=expectation,
        threshold=witness_threshold(w, scan_points, tol),
        detects=expectation < -ALGEBRA_TOL,
    )


def witness_report(
    c1: float, scan_points: int = ROOT_SCAN_POINTS, tol: float = ROOT_TOL
) -> WitnessSummary:
    """All presets on the concise state with GB^1 population ``c1``."""
    rho = concise_state(c1)
    readings = [witness_on_state(rho, name, scan_points, tol) for name in WitnessPreset]
    by_name = {r.preset: r for r in readings}
    printed = by_name[WitnessPreset.PAPER_W].threshold
    standard = by_name[WitnessPreset.STANDARD_W].threshold
    disagree = printed is None or standard is None or abs(printed - standard) > tol
    note = ""
    if disagree:
        note = (
            f"W witness thresholds differ: {printed!r} with alpha = 13/20, "
            f"{standard!r} with alpha = 2/3"
        )
        logger.warning("%s", note)
    return WitnessSummary(c1=c1, readings=readings, thresholds_disagree=disagree, note=note)
