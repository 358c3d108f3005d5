"""Closed forms for the success and reject branches, and the concise recurrence.

For GB-diagonal inputs every branch of a round is again GB-diagonal; the
formulas below give those populations directly from the coefficients.
The brute-force engine is the reference they are tested against.
"""

from __future__ import annotations

import logging
from typing import Callable

import numpy as np
from scipy.optimize import bisect

from tripurify.engine import purification_round
from tripurify.errors import DimensionError, ImpossibleBranchError, InvariantError
from tripurify.models import CheckSummary, CoefficientVector, ConciseMapPoint, RecurrenceTrace
from tripurify.qmat import ALGEBRA_TOL, IMPOSSIBLE_BRANCH_TOL

logger = logging.getLogger(__name__)

ROOT_TOL = 1e-10
ROOT_SCAN_POINTS = 1000
# |g| at or below this on a scan point counts as an exact root
ZERO_TOL = 1e-14


def _three_party(c: CoefficientVector) -> np.ndarray:
    if c.parties != 3:
        raise DimensionError("closed forms exist for three parties only")
    return c.as_array()


# ---------------------------------------------------------------------------
# Branch closed forms
# ---------------------------------------------------------------------------

def p000_analytic(c: CoefficientVector) -> float:
    """Success probability [2 S_W^2 + 2 S_fW^2 + 3 (C7 + C8)^2] / 6.

    S_W and S_fW are the total W and flipped-W weights.
    """
    v = _three_party(c)
    s_w, s_fw, ghz = v[0:3].sum(), v[3:6].sum(), v[6] + v[7]
    return float((2 * s_w**2 + 2 * s_fw**2 + 3 * ghz**2) / 6.0)


def fw000_analytic(c: CoefficientVector) -> float:
    """GB^1 population of the success branch, (2 C1^2 + 4 C2 C3) / (6 P000).

    Raises:
        ImpossibleBranchError: If the success probability vanishes.
    """
    v = _three_party(c)
    p = p000_analytic(c)
    if p < IMPOSSIBLE_BRANCH_TOL:
        raise ImpossibleBranchError(f"success probability {p:.3e} vanishes")
    return float((2 * v[0] ** 2 + 4 * v[1] * v[2]) / (6.0 * p))


def _cyclic_products(u: np.ndarray, w: np.ndarray) -> np.ndarray:
    """out[k] = sum over n + m = k (mod 3) of u[n] w[m]."""
    out = np.zeros(3)
    for n in range(3):
        for m in range(3):
            out[(n + m) % 3] += u[n] * w[m]
    return out


def fw000_populations(c: CoefficientVector) -> np.ndarray:
    """All eight GB populations of the success branch."""
    v = _three_party(c)
    p = p000_analytic(c)
    if p < IMPOSSIBLE_BRANCH_TOL:
        raise ImpossibleBranchError(f"success probability {p:.3e} vanishes")
    w, fw, ghz = v[0:3], v[3:6], v[6:8]
    pops = np.concatenate(
        [
            _cyclic_products(w, w) / 3.0,
            _cyclic_products(fw, fw) / 3.0,
            [(ghz[0] ** 2 + ghz[1] ** 2) / 2.0, ghz[0] * ghz[1]],
        ]
    )
    return pops / p


def p111_analytic(c: CoefficientVector) -> float:
    """Reject probability (2/3) S_W S_fW + (C7 + C8)^2 / 2."""
    v = _three_party(c)
    s_w, s_fw, ghz = v[0:3].sum(), v[3:6].sum(), v[6] + v[7]
    return float(2.0 * s_w * s_fw / 3.0 + ghz**2 / 2.0)


def fw111_populations(c: CoefficientVector) -> np.ndarray:
    """All eight GB populations of the reject branch.

    A W state pairs with a flipped-W state here, so GB^1 and GB^4 always
    carry the same population (C1 C4 + C2 C6 + C3 C5) / (3 P111).
    """
    v = _three_party(c)
    p = p111_analytic(c)
    if p < IMPOSSIBLE_BRANCH_TOL:
        raise ImpossibleBranchError(f"reject probability {p:.3e} vanishes")
    w, fw, ghz = v[0:3], v[3:6], v[6:8]
    mixed = _cyclic_products(w, fw) / 3.0
    pops = np.concatenate(
        [mixed, mixed, [(ghz[0] ** 2 + ghz[1] ** 2) / 2.0, ghz[0] * ghz[1]]]
    )
    return pops / p


# ---------------------------------------------------------------------------
# Concise family
# ---------------------------------------------------------------------------

def _check_fraction(f: float) -> None:
    if not 0.0 <= f <= 1.0:
        raise InvariantError("W fraction in [0, 1]", f"f = {f!r}")


def fw_concise_map(f: float) -> ConciseMapPoint:
    """One round on the concise state with GB^1 population ``f``."""
    _check_fraction(f)
    denominator = 40 * f**2 - 10 * f + 19
    p000 = denominator / 147.0
    return ConciseMapPoint(
        f_in=f,
        f_out=(51 * f**2 - 4 * f + 2) / denominator,
        p000=p000,
        yield_=p000 / 2.0,
    )


def map_gain(f: float) -> float:
    """f_out - f."""
    return fw_concise_map(f).f_out - f


def map_derivative(f: float, h: float = 1e-6) -> float:
    """Numerical slope of the concise map, one-sided at the interval ends."""
    _check_fraction(f)
    lo, hi = max(0.0, f - h), min(1.0, f + h)
    return (fw_concise_map(hi).f_out - fw_concise_map(lo).f_out) / (hi - lo)


def scan_roots(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    scan_points: int = ROOT_SCAN_POINTS,
    tol: float = ROOT_TOL,
) -> list[float]:
    """Roots of ``func`` on [lo, hi] from a sign scan refined by bisection.

    Scan points where |func| <= ZERO_TOL are reported as roots as they are;
    every strict sign change between neighbours is bisected to ``tol``.
    """
    if scan_points < 1:
        raise ValueError(f"scan_points must be >= 1, got {scan_points}")
    grid = np.linspace(lo, hi, scan_points + 1)
    values = np.array([func(float(x)) for x in grid])
    signs = np.where(np.abs(values) <= ZERO_TOL, 0.0, np.sign(values))

    roots: list[float] = [float(x) for x, s in zip(grid, signs) if s == 0.0]
    for i in np.flatnonzero(signs[:-1] * signs[1:] < 0):
        roots.append(float(bisect(func, grid[i], grid[i + 1], xtol=tol / 4)))
    return sorted(roots)


def fixed_points_concise(
    scan_points: int = ROOT_SCAN_POINTS, tol: float = ROOT_TOL
) -> list[float]:
    """Solutions of f_out(f) = f on [0, 1]: 1/8, 2/5 and 1."""
    roots = scan_roots(map_gain, 0.0, 1.0, scan_points, tol)
    logger.info("Concise map fixed points: %s", ", ".join(f"{r:.12g}" for r in roots))
    return roots


def recurrence(f0: float, rounds: int) -> RecurrenceTrace:
    """Iterate the concise map, re-twirling between rounds.

    ``cumulative_yield`` is the product of the per-round yields P000/2,
    i.e. surviving copies per copy consumed over all rounds.
    """
    _check_fraction(f0)
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")
    points: list[ConciseMapPoint] = []
    cumulative = 1.0
    f = f0
    for _ in range(rounds):
        point = fw_concise_map(f)
        points.append(point)
        cumulative *= point.yield_
        f = min(1.0, max(0.0, point.f_out))
    logger.info(
        "Recurrence from %.12g: %d rounds, final %.12g, cumulative yield %.6e",
        f0,
        rounds,
        f,
        cumulative,
    )
    return RecurrenceTrace(f0=f0, rounds=points, cumulative_yield=cumulative)


# ---------------------------------------------------------------------------
# Seeded cross-checks against the engine
# ---------------------------------------------------------------------------

def random_coefficients(
    rng: np.random.Generator, size: int = 8, c1_largest: bool = False
) -> CoefficientVector:
    """Uniform point of the simplex; optionally swap the largest entry into C1."""
    v = rng.dirichlet(np.ones(size))
    if c1_largest:
        top = int(np.argmax(v))
        v[0], v[top] = v[top], v[0]
    return CoefficientVector(c=tuple(float(x) for x in v / v.sum()))


def run_checks(samples: int, seed: int, tol: float = ALGEBRA_TOL) -> CheckSummary:
    """Seeded comparison of the engine with the closed forms.

    Draws ``samples`` uniform simplex points for the success-branch formulas,
    then ``samples`` points with C1 largest for the reject-branch bound.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)

    max_p_err = max_f_err = 0.0
    oracle_failures = 0
    for _ in range(samples):
        c = random_coefficients(rng)
        branch = purification_round(c).success
        p_err = abs(branch.probability - p000_analytic(c))
        f_err = abs(branch.gb1_population() - fw000_analytic(c))
        max_p_err, max_f_err = max(max_p_err, p_err), max(max_f_err, f_err)
        if p_err >= tol or f_err >= tol:
            oracle_failures += 1
            logger.warning("Closed form mismatch at %s", c.c)

    max_excess = -np.inf
    reject_failures = 0
    for _ in range(samples):
        c = random_coefficients(rng, c1_largest=True)
        fraction = purification_round(c)["111"].w_fraction()
        if fraction is None:
            continue
        excess = fraction.value - c.c[0]
        max_excess = max(max_excess, excess)
        if excess > tol:
            reject_failures += 1
            logger.warning("Reject branch exceeds C1 at %s", c.c)

    summary = CheckSummary(
        samples=samples,
        seed=seed,
        tol=tol,
        max_p000_error=max_p_err,
        max_fw000_error=max_f_err,
        oracle_failures=oracle_failures,
        max_reject_excess=float(max_excess),
        reject_failures=reject_failures,
    )
    logger.info("Checks on %d samples (seed %d): passed=%s", samples, seed, summary.passed)
    return summary
