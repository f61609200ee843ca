"""Dimension bounds from the gap series ``F(t) = sum_{s in S} c0**(s t) c1**t``.

``h`` solves ``F(h) = 1`` with the lower ratios and ``H`` with the upper
ratios.  Every evaluation of ``F`` is an enclosure: finite sums are widened
by a fixed relative slack, infinite sums add a geometric tail majorant.
Bisection only moves a bracket end when the enclosure lies entirely on one
side of 1, so the returned interval contains the root up to floating-point
slack (this is not directed-rounding interval arithmetic).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericError
from .language import GapSet
from .pressure import ContractionPair

log = logging.getLogger(__name__)

REL_SLACK = 1e-12
S_CUT_MAX = 10**7
DEFAULT_TOL = 1e-9
DEFAULT_EPS = 1e-12
DEFAULT_T_MAX = 1024.0
_PROBES = (0.5, 0.25, 0.75, 0.125, 0.875)


@dataclass(frozen=True)
class Enclosure:
    """Closed interval ``[lo, hi]`` certified to contain a value.

    ``widened`` marks root enclosures that could not be narrowed to the
    requested tolerance because ``F - 1`` drowned in the evaluation slack.
    """

    lo: float
    hi: float
    widened: bool = False

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise DomainError(f"empty enclosure [{self.lo}, {self.hi}]")

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


@dataclass(frozen=True)
class DimensionBounds:
    h: Enclosure
    H: Enclosure


def _series_bounds(t, c0, c1, S, eps, s_cap=S_CUT_MAX):
    """``(lower, upper)`` for ``F(t)``; upper is ``inf`` when the tail cannot
    be pushed below ``eps`` within ``s_cap`` terms (lower stays valid)."""
    ln0, ln1 = math.log(c0), math.log(c1)
    if not S.is_infinite:
        s = np.asarray(S.values, dtype=np.float64)
        partial = float(np.exp(t * (s * ln0 + ln1)).sum())
        return partial * (1 - REL_SLACK), partial * (1 + REL_SLACK)
    q_log = t * ln0  # log of c0**t
    one_minus_q = -math.expm1(q_log)
    # smallest s_cut with c1**t * q**(s_cut+1) / (1-q) <= eps
    need = (math.log(eps * one_minus_q) - t * ln1) / q_log - 1.0
    s_cut = max(0, math.ceil(need))
    upper_ok = s_cut <= s_cap
    s_cut = min(s_cut, s_cap)
    s = S.elements_upto(s_cut).astype(np.float64)
    partial = float(np.exp(t * (s * ln0 + ln1)).sum())
    if not upper_ok:
        return partial * (1 - REL_SLACK), math.inf
    tail = math.exp(t * ln1 + (s_cut + 1) * q_log) / one_minus_q
    return partial * (1 - REL_SLACK), (partial + tail) * (1 + REL_SLACK)


def _check_ratios(c0, c1):
    if not (0.0 < c0 < 1.0 and 0.0 < c1 < 1.0):
        raise DomainError(f"contraction ratios must lie in (0, 1), got {c0}, {c1}")


def series_value(t: float, c0: float, c1: float, S: GapSet, eps: float = DEFAULT_EPS) -> Enclosure:
    """Enclosure of ``F(t)``.

    For infinite ``S`` the partial sum is cut at the first ``s_cut`` whose
    full geometric tail ``c1**t c0**((s_cut+1) t) / (1 - c0**t)`` is below
    ``eps``; that tail majorizes any subset of the remaining integers.
    """
    _check_ratios(c0, c1)
    if eps <= 0:
        raise DomainError("eps must be positive")
    if t <= 0 and S.is_infinite:
        raise DomainError("the gap series diverges for t <= 0 when S is infinite")
    lo, hi = _series_bounds(t, c0, c1, S, eps)
    if math.isinf(hi):
        raise NumericError(f"series tail at t={t} needs more than {S_CUT_MAX} terms")
    return Enclosure(lo, hi)


def solve_dimension_root(
    c0: float,
    c1: float,
    S: GapSet,
    tol: float = DEFAULT_TOL,
    eps: float = DEFAULT_EPS,
    t_max: float = DEFAULT_T_MAX,
) -> Enclosure:
    """Enclosure of width ``<= tol`` around the unique ``t >= 0`` with ``F(t) = 1``.

    A singleton ``S`` has ``F(t) < 1`` for every ``t > 0``; its root is 0 and
    ``[0, 0]`` is returned.
    """
    _check_ratios(c0, c1)
    if tol <= 0:
        raise DomainError("tol must be positive")
    if not S.is_infinite and len(S.values) == 1:
        return Enclosure(0.0, 0.0)

    t_hi = 1.0
    while _series_bounds(t_hi, c0, c1, S, eps)[1] > 1.0:
        t_hi *= 2.0
        if t_hi > t_max:
            raise NumericError(f"no upper bracket for the root below t_max={t_max}")

    if S.is_infinite:
        t_lo = 0.5 * t_hi
        for _ in range(1100):
            if _series_bounds(t_lo, c0, c1, S, eps)[0] >= 1.0:
                break
            t_lo *= 0.5
        else:
            raise NumericError("no lower bracket for the root")
    else:
        t_lo = 0.0  # F(0) = |S| >= 2

    def side(t):
        # +1: F(t) >= 1 certified, -1: F(t) <= 1 certified, 0: undecided
        e = eps
        for _ in range(4):
            lo, hi = _series_bounds(t, c0, c1, S, e)
            if lo >= 1.0:
                return 1
            if hi <= 1.0:
                return -1
            e *= 1e-3
        return 0

    widened = False
    while t_hi - t_lo > tol:
        # the midpoint can sit within evaluation slack of the root; off-centre
        # probes still shrink the bracket
        for frac in _PROBES:
            p = t_lo + frac * (t_hi - t_lo)
            if p <= t_lo or p >= t_hi:
                continue
            s = side(p)
            if s:
                break
        else:
            s = 0
        if s > 0:
            t_lo = p
        elif s < 0:
            t_hi = p
        else:
            widened = True
            log.warning(
                "root enclosure widened to %.3g (tolerance %.3g): F(t)-1 within evaluation slack",
                t_hi - t_lo,
                tol,
            )
            break
    return Enclosure(t_lo, t_hi, widened)


def bounds(
    pair: ContractionPair,
    S: GapSet,
    tol: float = DEFAULT_TOL,
    eps: float = DEFAULT_EPS,
    t_max: float = DEFAULT_T_MAX,
) -> DimensionBounds:
    """``h`` from the lower ratios, ``H`` from the upper ratios."""
    h = solve_dimension_root(*pair.lower, S, tol, eps, t_max)
    H = solve_dimension_root(*pair.upper, S, tol, eps, t_max)
    if h.mid > H.mid + tol:
        raise NumericError(f"bound ordering violated: h={h.mid} > H={H.mid}")
    return DimensionBounds(h, H)


def solve_entropy(S: GapSet, tol: float = DEFAULT_TOL, eps: float = DEFAULT_EPS) -> tuple[Enclosure, float]:
    """Root ``lambda`` of ``sum_{s in S} lambda**(s+1) = 1`` and the entropy
    ``ln(1/lambda)`` in nats.

    Substituting ``lambda = exp(-t)`` turns the equation into ``F(t) = 1``
    with ``c0 = c1 = 1/e``, so the root solver is reused as is.  Sets with a
    single gap have entropy 0 and ``lambda = 1``.
    """
    if not S.is_infinite and len(S.values) < 2:
        return Enclosure(1.0, 1.0), 0.0
    c = math.exp(-1.0)
    root = solve_dimension_root(c, c, S, tol, eps)
    lam = Enclosure(math.exp(-root.hi), math.exp(-root.lo), root.widened)
    return lam, math.log(1.0 / lam.mid)


# ---------------------------------------------------------------------------
# golden mean cross-check


def golden_mean_spectral_radius(t: float, c0: float, c1: float) -> float:
    """Perron root of ``[[c0**t, c1**t], [c0**t, 0]]``."""
    a, b = c0**t, c1**t
    return 0.5 * (a + math.sqrt(a * a + 4.0 * a * b))


def _spectral_root(c0, c1):
    lo, hi = 0.0, 1.0
    while golden_mean_spectral_radius(hi, c0, c1) > 1.0:
        lo, hi = hi, 2.0 * hi
        if hi > DEFAULT_T_MAX:
            raise NumericError("spectral radius stays above 1")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if golden_mean_spectral_radius(mid, c0, c1) > 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class GoldenMeanReport:
    c0: float
    c1: float
    h_spectral: float
    h_series: Enclosure
    difference: float
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.difference <= self.tol and self.residual <= self.tol


def cross_check_golden_mean(c0: float, c1: float, tol: float = 1e-8) -> GoldenMeanReport:
    """Compare the spectral-radius root with the gap-series root for S = N.

    Also reports ``|c0**h + c0**h c1**h - 1|`` at the series midpoint.
    """
    _check_ratios(c0, c1)
    h_spec = _spectral_root(c0, c1)
    h_series = solve_dimension_root(c0, c1, GapSet.naturals_from(1), tol=min(tol, DEFAULT_TOL) * 0.1)
    h = h_series.mid
    residual = abs(c0**h + c0**h * c1**h - 1.0)
    return GoldenMeanReport(c0, c1, h_spec, h_series, abs(h_spec - h), residual, tol)
