"""Weighted word sums, finite-n pressure, and finite-n cylinder measures.

A word ``w`` carries weight ``c_w**t = (c0**#0(w) * c1**#1(w))**t``.  All
logarithms are natural.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, InputError, UndefinedPressure
from .language import GapSet, _walk, check_word, gap_enumerate, is_allowable, state_after


@dataclass(frozen=True)
class ContractionPair:
    """Lower/upper contraction ratios of the two IFS maps."""

    c0_lower: float
    c0_upper: float
    c1_lower: float
    c1_upper: float

    def __post_init__(self):
        for lo, hi, name in ((self.c0_lower, self.c0_upper, "c0"), (self.c1_lower, self.c1_upper, "c1")):
            if not 0.0 < lo <= hi < 1.0:
                raise DomainError(f"need 0 < {name}_lower <= {name}_upper < 1, got {lo}, {hi}")

    @classmethod
    def exact(cls, c0: float, c1: float) -> "ContractionPair":
        return cls(c0, c0, c1, c1)

    @property
    def lower(self) -> tuple[float, float]:
        return self.c0_lower, self.c1_lower

    @property
    def upper(self) -> tuple[float, float]:
        return self.c0_upper, self.c1_upper


@dataclass(frozen=True)
class PressureSample:
    n: int
    t: float
    weighted_sum: float
    pressure: float


def _check_ratios(c0, c1):
    if not (0.0 < c0 < 1.0 and 0.0 < c1 < 1.0):
        raise DomainError(f"contraction ratios must lie in (0, 1), got {c0}, {c1}")


def weighted_language_sum(n: int, t: float, c0: float, c1: float, S: GapSet) -> float:
    """``sum over w in L_n of c_w**t``."""
    _check_ratios(c0, c1)
    if n < 0:
        raise DomainError("n must be non-negative")
    return float(_walk(int(n), S, float(c0) ** t, float(c1) ** t))


def core_sums(n: int, t: float, c0: float, c1: float, S: GapSet) -> list[float]:
    """``[g(0,t), ..., g(n,t)]`` with ``g(m,t) = sum over w in G_m of c_w**t``."""
    _check_ratios(c0, c1)
    gaps = gap_enumerate(S, n - 1)
    w1 = c1**t
    block = [(s + 1, c0 ** (s * t) * w1) for s in gaps]
    g = [1.0] + [0.0] * n
    for m in range(1, n + 1):
        g[m] = sum(wt * g[m - p] for p, wt in block if p <= m)
    return g


def weighted_core_sum(n: int, t: float, c0: float, c1: float, S: GapSet) -> float:
    """``g(n, t)`` via the renewal recurrence ``g(n) = sum_s c0**(s t) c1**t g(n-s-1)``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return core_sums(int(n), t, c0, c1, S)[int(n)]


def pressure_estimate(n: int, t: float, c0: float, c1: float, S: GapSet, which: str = "language") -> PressureSample:
    """``(1/n) ln(sum)`` for the language (``P``) or core (``Q``) sums.

    Raises UndefinedPressure when the core sum vanishes at this ``n``.
    """
    if n < 1:
        raise DomainError("pressure needs n >= 1")
    if which == "language":
        total = weighted_language_sum(n, t, c0, c1, S)
    elif which == "core":
        total = weighted_core_sum(n, t, c0, c1, S)
    else:
        raise DomainError(f"which must be 'language' or 'core', got {which!r}")
    if total <= 0.0:
        raise UndefinedPressure(f"{which} sum is zero at n={n}")
    return PressureSample(n, t, total, math.log(total) / n)


def core_pressure_limsup(n_max: int, t: float, c0: float, c1: float, S: GapSet) -> list[float | None]:
    """Running maximum of the finite-n core pressures, as a limsup proxy.

    Entry ``n-1`` covers ``1..n``; it is None while every core sum so far
    has been zero.
    """
    g = core_sums(n_max, t, c0, c1, S)
    out, best = [], None
    for n in range(1, n_max + 1):
        if g[n] > 0.0:
            p = math.log(g[n]) / n
            best = p if best is None else max(best, p)
        out.append(best)
    return out


def cylinder_measure_estimate(w: str, n: int, t: float, c0: float, c1: float, S: GapSet) -> float:
    """Finite-n cylinder ratio ``nu_n([w])``.

    Numerator: weight of every allowable word of length ``n + len(w)``
    starting with ``w``.  Denominator: weight of all such words.
    """
    check_word(w)
    if n < 1:
        raise DomainError("n must be >= 1")
    if not is_allowable(w, S):
        raise DomainError(f"{w!r} is not allowable")
    _check_ratios(c0, c1)
    w0, w1 = float(c0) ** t, float(c1) ** t
    prefix = w0 ** w.count("0") * w1 ** w.count("1")
    numerator = prefix * _walk(n, S, w0, w1, state_after(w))
    return numerator / weighted_language_sum(n + len(w), t, c0, c1, S)


# ---------------------------------------------------------------------------
# tables

PRESSURE_HEADER = ("n", "t", "sum_lower", "pressure_lower", "sum_upper", "pressure_upper")


def pressure_table(ns: Iterable[int], ts: Iterable[float], pair: ContractionPair, S: GapSet) -> list[tuple]:
    """Rows ``(n, t, sum_lower, pressure_lower, sum_upper, pressure_upper)``
    of language sums under lower and upper ratios."""
    rows = []
    ts = list(ts)
    for n in ns:
        for t in ts:
            lo = pressure_estimate(n, t, *pair.lower, S)
            hi = pressure_estimate(n, t, *pair.upper, S)
            rows.append((n, t, lo.weighted_sum, lo.pressure, hi.weighted_sum, hi.pressure))
    return rows


def write_pressure_csv(path, rows) -> None:
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(PRESSURE_HEADER)
        for n, t, *vals in rows:
            out.writerow([int(n)] + [repr(float(v)) for v in (t, *vals)])


def read_pressure_csv(path) -> list[tuple]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != PRESSURE_HEADER:
            raise InputError(f"unexpected pressure-table header {header}")
        return [(int(r[0]), *map(float, r[1:])) for r in reader]
