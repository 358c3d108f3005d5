"""One purification round on two identical copies.

Each party applies a CNOT from its source qubit (control) onto its target
qubit; the target copy is then measured in the computational basis and
every outcome is kept as a branch with its probability and the
post-selected state of the source copy (targets traced out).

The joint density matrix is evolved directly; the pure-state expansion of
the two copies is only used as a cross-check in the tests.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional

import numpy as np

from tripurify.basis import genuine_basis
from tripurify.errors import DimensionError
from tripurify.gates import cnot
from tripurify.models import (
    BranchClass,
    BranchRecord,
    CoefficientVector,
    ConciseMapPoint,
    RecurrenceTrace,
    RoundReport,
    WFraction,
)
from tripurify.qmat import (
    DensityMatrix,
    Operator,
    QubitLayout,
    apply_operator,
    measure_computational,
    tensor_product,
)
from tripurify.wstates import coefficients_of, mixed_from_coeffs, twirl_to_concise, w_fraction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Branch:
    """A single target-measurement outcome."""

    outcome: str
    probability: float
    post_source: Optional[DensityMatrix]
    classification: BranchClass

    @property
    def defined(self) -> bool:
        return self.post_source is not None

    def gb1_population(self) -> Optional[float]:
        """Overlap of the post-selected source with basis state 1."""
        if self.post_source is None:
            return None
        basis = genuine_basis(self.post_source.num_qubits)
        return self.post_source.overlap(basis[1])

    def w_fraction(self) -> Optional[WFraction]:
        """W fraction of the post-selected source (three parties only)."""
        if self.post_source is None or self.post_source.num_qubits != 3:
            return None
        return w_fraction(self.post_source)

    def to_record(self) -> BranchRecord:
        wf = self.w_fraction()
        return BranchRecord(
            outcome=self.outcome,
            probability=self.probability,
            classification=self.classification,
            defined=self.defined,
            gb1_population=self.gb1_population(),
            w_fraction=wf.value if wf is not None else None,
            purity=self.post_source.purity() if self.post_source is not None else None,
        )


@dataclass(frozen=True)
class RoundResult:
    """All branches of one round, keyed by outcome bitstring (party order)."""

    input_fingerprint: CoefficientVector
    layout: QubitLayout
    branches: dict[str, Branch]

    def __getitem__(self, outcome: str) -> Branch:
        return self.branches[outcome]

    def __iter__(self) -> Iterator[Branch]:
        return iter(self.branches.values())

    @property
    def total_probability(self) -> float:
        return sum(b.probability for b in self.branches.values())

    @property
    def success(self) -> Branch:
        return self.branches["0" * self.layout.parties]

    def to_report(self) -> RoundReport:
        return RoundReport(
            parties=self.layout.parties,
            coefficients=self.input_fingerprint.c,
            branches=[b.to_record() for b in self.branches.values()],
        )


def classify(outcome: str) -> BranchClass:
    """All zeros keeps the source, all ones rejects it, anything else fails.

    Raises:
        ValueError: If ``outcome`` is not a 3- or 4-character 0/1 string.
    """
    if len(outcome) not in (3, 4) or any(ch not in "01" for ch in outcome):
        raise ValueError(f"malformed outcome bitstring {outcome!r}")
    if set(outcome) == {"0"}:
        return BranchClass.SUCCESS
    if set(outcome) == {"1"}:
        return BranchClass.REJECT
    return BranchClass.FAIL_BIPARTITE


def all_outcomes(parties: int) -> list[str]:
    return ["".join(bits) for bits in product("01", repeat=parties)]


@lru_cache(maxsize=None)
def txor_operator(parties: int = 3) -> Operator:
    """Trilateral XOR: one source->target CNOT per party.

    The CNOTs act on disjoint qubit pairs, so their order is irrelevant and
    the product is self-inverse.
    """
    layout = QubitLayout.for_parties(parties)
    total = Operator.identity(layout.num_qubits)
    for src, tgt in zip(layout.source_qubits, layout.target_qubits):
        total = cnot(src, tgt, layout.num_qubits).compose(total)
    return total


def purify_state(
    rho: DensityMatrix, fingerprint: Optional[CoefficientVector] = None
) -> RoundResult:
    """Run a round on two copies of an arbitrary three- or four-qubit state."""
    parties = rho.num_qubits
    if parties not in (3, 4):
        raise DimensionError(f"rounds run on three or four parties, got {parties}")
    layout = QubitLayout.for_parties(parties)
    # unit trace holds only to ALGEBRA_TOL; the two-copy state would double the error
    rho = DensityMatrix(rho.entries / np.trace(rho.entries).real, parties)
    joint = apply_operator(tensor_product(rho, rho), txor_operator(parties))

    branches: dict[str, Branch] = {}
    for outcome in all_outcomes(parties):
        measured = measure_computational(joint, layout.target_qubits, outcome)
        branches[outcome] = Branch(
            outcome=outcome,
            probability=measured.probability,
            post_source=measured.post_state,
            classification=classify(outcome),
        )
        logger.debug("Outcome %s: p=%.12g", outcome, measured.probability)

    result = RoundResult(
        input_fingerprint=fingerprint if fingerprint is not None else coefficients_of(rho),
        layout=layout,
        branches=branches,
    )
    logger.info(
        "Round on %d parties: success probability %.12g", parties, result.success.probability
    )
    return result


def purification_round(c: CoefficientVector) -> RoundResult:
    """Run a round on two copies of the GB-diagonal state with populations ``c``."""
    return purify_state(mixed_from_coeffs(c), fingerprint=c)


def iterate_rounds(c: CoefficientVector, rounds: int, twirl: bool = True) -> RecurrenceTrace:
    """Brute-force recurrence keeping the "000" branch of every round.

    With ``twirl`` the state is projected onto the concise family before
    each round, which is what the closed-form recurrence assumes.
    """
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")
    if c.parties != 3:
        raise DimensionError("the recurrence is defined for three parties")
    rho = mixed_from_coeffs(c)
    f0 = rho.overlap(genuine_basis(3)[1])
    points: list[ConciseMapPoint] = []
    cumulative = 1.0
    for _ in range(rounds):
        if twirl:
            rho = twirl_to_concise(rho)
        branch = purify_state(rho).success
        if branch.post_source is None:
            logger.warning("Success branch vanished after %d rounds", len(points))
            break
        f_in = rho.overlap(genuine_basis(3)[1])
        points.append(
            ConciseMapPoint(
                f_in=f_in,
                f_out=branch.gb1_population(),
                p000=branch.probability,
                yield_=branch.probability / 2.0,
            )
        )
        cumulative *= points[-1].yield_
        rho = branch.post_source
    return RecurrenceTrace(f0=f0, rounds=points, cumulative_yield=cumulative)
