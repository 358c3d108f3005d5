"""Bipartite by-products of the failure outcomes.

A failure outcome (mixed target bits) usually leaves the source triple
with only bipartite entanglement. For the two-state mixtures of a phased W
state and its flipped partner the remaining pair is a pure Bell state and
the third party splits off as a product factor, possibly mixed itself.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from tripurify.engine import RoundResult, classify, purification_round
from tripurify.errors import DimensionError, ImpossibleBranchError
from tripurify.models import BranchClass, MixturePreset
from tripurify.qmat import DensityMatrix, negativity, partial_trace, von_neumann_entropy
from tripurify.wstates import total_mixture

logger = logging.getLogger(__name__)

PURE_TOL = 1e-10


@dataclass(frozen=True)
class ByproductReport:
    """What is left in the source triple after a failure outcome.

    ``factorized_party`` is the party whose removal leaves a pure pair;
    when no pair is pure it is None and the pair fields describe the most
    nearly pure pair instead. ``pair_entropy`` is the entropy of one pair
    qubit, i.e. the entanglement in ebits when the pair is pure.
    """

    outcome: str
    probability: float
    is_pure: bool
    factorized_party: Optional[str]
    pair_parties: str
    pair_state: DensityMatrix
    pair_purity: float
    pair_entropy: float
    pair_negativity: float
    party_entropy: float
    triple_purity: float


def byproduct_analysis(
    round_result: RoundResult, outcome: str, pure_tol: float = PURE_TOL
) -> ByproductReport:
    """Inspect the post-selected source of one failure outcome.

    Raises:
        ValueError: If ``outcome`` is not a failure outcome.
        DimensionError: If the round did not run on three parties.
        ImpossibleBranchError: If the branch has no post-selected state.
    """
    if classify(outcome) is not BranchClass.FAIL_BIPARTITE:
        raise ValueError(f"outcome {outcome!r} is not a failure outcome")
    layout = round_result.layout
    if layout.parties != 3:
        raise DimensionError("by-product analysis covers three parties")
    branch = round_result[outcome]
    if branch.post_source is None:
        raise ImpossibleBranchError(
            f"outcome {outcome} has probability {branch.probability:.3e}"
        )
    post = branch.post_source

    best: Optional[tuple[int, DensityMatrix, float]] = None
    for party in range(3):
        pair = partial_trace(post, [q for q in range(3) if q != party])
        purity = pair.purity()
        if best is None or purity > best[2] + pure_tol:
            best = (party, pair, purity)
    party, pair, pair_purity = best

    is_pure = pair_purity >= 1.0 - pure_tol
    labels = layout.party_labels
    report = ByproductReport(
        outcome=outcome,
        probability=branch.probability,
        is_pure=is_pure,
        factorized_party=labels[party] if is_pure else None,
        pair_parties="".join(labels[q] for q in range(3) if q != party),
        pair_state=pair,
        pair_purity=pair_purity,
        pair_entropy=von_neumann_entropy(partial_trace(pair, [0])),
        pair_negativity=negativity(pair, [1]),
        party_entropy=von_neumann_entropy(partial_trace(post, [party])),
        triple_purity=post.purity(),
    )
    logger.info(
        "By-product of %s: pair %s purity %.12g, entropy %.12g",
        outcome,
        report.pair_parties,
        pair_purity,
        report.pair_entropy,
    )
    return report


def mixture_byproduct(
    preset: MixturePreset, outcome: str, c1: float = 0.5, pure_tol: float = PURE_TOL
) -> ByproductReport:
    """Run a round on a two-state mixture and inspect ``outcome``."""
    return byproduct_analysis(purification_round(total_mixture(preset, c1)), outcome, pure_tol)
