"""Plain-text tables printed by the CLI.

Every formatter returns a string ending without a newline; numbers use
``%.12g`` so identical inputs give byte-identical output.
"""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from tripurify.byproduct import ByproductReport
from tripurify.engine import RoundResult
from tripurify.models import (
    BasisReport,
    CheckSummary,
    EigencheckEntry,
    RecurrenceTrace,
    WitnessReading,
    WitnessSummary,
)


def num(x: Optional[float]) -> str:
    """12 significant digits, "-" for a missing value."""
    return "-" if x is None else "%.12g" % x


def _table(header: list[str], rows: Iterable[list[str]]) -> str:
    rows = [header] + list(rows)
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows
    )


def _pairs(items: list[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in items)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in items)


def format_basis_report(report: BasisReport) -> str:
    return _pairs(
        [
            ("qubits", str(report.qubit_count)),
            ("states", str(report.size)),
            ("max_offdiag_overlap", "%.3e" % report.max_offdiag_overlap),
            ("max_norm_error", "%.3e" % report.max_norm_error),
            ("completeness_defect", "%.3e" % report.completeness_defect),
            ("tol", "%.3e" % report.tol),
            ("status", "PASS" if report.passed else "FAIL"),
        ]
    )


def format_round(result: RoundResult) -> str:
    report = result.to_report()
    coeffs = " ".join(num(c) for c in report.coefficients)
    rows = [
        [
            b.outcome,
            num(b.probability),
            b.classification.value,
            num(b.gb1_population),
            num(b.w_fraction),
            num(b.purity),
        ]
        for b in report.branches
    ]
    table = _table(["outcome", "probability", "class", "gb1", "w_fraction", "purity"], rows)
    return f"coefficients  {coeffs}\n{table}\ntotal         {num(result.total_probability)}"


def format_trace(trace: RecurrenceTrace) -> str:
    rows = [
        [str(k), num(p.f_in), num(p.f_out), num(p.p000), num(p.yield_)]
        for k, p in enumerate(trace.rounds, start=1)
    ]
    table = _table(["round", "f_in", "f_out", "p000", "yield"], rows)
    return f"{table}\ncumulative_yield  {num(trace.cumulative_yield)}"


def _reading_row(r: WitnessReading) -> list[str]:
    return [
        r.preset.value,
        num(r.alpha),
        r.target_label,
        num(r.expectation),
        num(r.threshold) if r.threshold is not None else "absent",
        "yes" if r.detects else "no",
    ]


_READING_HEADER = ["preset", "alpha", "target", "expectation", "threshold", "detects"]


def format_witness(reading: WitnessReading) -> str:
    return _table(_READING_HEADER, [_reading_row(reading)])


def format_witness_summary(summary: WitnessSummary) -> str:
    text = f"c1  {num(summary.c1)}\n" + _table(
        _READING_HEADER, [_reading_row(r) for r in summary.readings]
    )
    if summary.thresholds_disagree:
        text += f"\nnote: {summary.note}"
    return text


def _matrix(m: np.ndarray) -> str:
    def cell(z: complex) -> str:
        z = complex(z)
        if abs(z.imag) < 1e-12:
            return "%.6f" % (z.real + 0.0)
        return "%.6f%+.6fj" % (z.real + 0.0, z.imag + 0.0)

    return "\n".join("  " + "  ".join(cell(z) for z in row) for row in m)


def format_byproduct(report: ByproductReport) -> str:
    items = [
        ("outcome", report.outcome),
        ("probability", num(report.probability)),
        ("is_pure", "true" if report.is_pure else "false"),
        ("factorized_party", report.factorized_party or "none"),
        ("pair", report.pair_parties),
        ("pair_purity", num(report.pair_purity)),
        ("pair_entropy_ebits", num(report.pair_entropy)),
        ("pair_negativity", num(report.pair_negativity)),
        ("party_entropy", num(report.party_entropy)),
        ("triple_purity", num(report.triple_purity)),
    ]
    return _pairs(items) + "\npair_state\n" + _matrix(report.pair_state.entries)


def format_eigencheck(entries: list[EigencheckEntry], tol: float) -> str:
    rows = [
        [
            e.label,
            num(e.j123),
            num(e.j12),
            "%.3e" % e.residual_123,
            "%.3e" % e.residual_12,
            "yes" if e.is_simultaneous_eigenvector(tol) else "no",
        ]
        for e in entries
    ]
    return _table(["state", "J2_123", "J2_12", "res_123", "res_12", "eigen"], rows)


def format_check(summary: CheckSummary) -> str:
    return _pairs(
        [
            ("samples", str(summary.samples)),
            ("seed", str(summary.seed)),
            ("tol", "%.3e" % summary.tol),
            ("max_p000_error", "%.3e" % summary.max_p000_error),
            ("max_fw000_error", "%.3e" % summary.max_fw000_error),
            ("oracle_failures", str(summary.oracle_failures)),
            ("max_reject_excess", "%.3e" % summary.max_reject_excess),
            ("reject_failures", str(summary.reject_failures)),
            ("status", "PASS" if summary.passed else "FAIL"),
        ]
    )
