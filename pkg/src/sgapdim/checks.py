"""Verification battery run by ``sgapdim verify`` against one scenario.

Each check returns a :class:`CheckResult`; none of them raise on failure.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass

import numpy as np

from .config import Scenario
from .geometry import box_counts, estimate_box_dimension, generate_points, verify_bounds
from .language import GapSet, count_core, count_language, enumerate_language, is_allowable
from .pressure import cylinder_measure_estimate, weighted_core_sum, weighted_language_sum
from .solver import (
    _series_bounds,
    bounds,
    cross_check_golden_mean,
    solve_dimension_root,
    solve_entropy,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: str
    got: str
    tolerance: float
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: got {self.got}; expected {self.expected} (tol {self.tolerance:g})"

    def as_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def brute_force_count(n: int, S: GapSet) -> int:
    return sum(is_allowable("".join(bits), S) for bits in itertools.product("01", repeat=n))


def check_root_certificates(sc: Scenario) -> CheckResult:
    """Both root enclosures satisfy ``F(lo) >= 1 >= F(hi)`` and the width bound."""
    tol, eps = sc.solver.tolerance, sc.solver.series_eps
    b = bounds(sc.pair, sc.gaps, tol, eps, sc.solver.t_max)
    ok, worst = True, 0.0
    for enc, (c0, c1) in ((b.h, sc.pair.lower), (b.H, sc.pair.upper)):
        worst = max(worst, enc.width)
        if enc.hi == 0.0:
            continue  # singleton S
        ok &= enc.width <= tol or enc.widened
        if enc.lo > 0:
            ok &= _series_bounds(enc.lo, c0, c1, sc.gaps, eps)[0] >= 1.0
        ok &= _series_bounds(enc.hi, c0, c1, sc.gaps, eps)[1] <= 1.0
    return CheckResult("root certificates", "F(lo) >= 1 >= F(hi), width <= tol", f"max width {worst:.3g}", tol, bool(ok))


def check_ordering(sc: Scenario) -> CheckResult:
    b = bounds(sc.pair, sc.gaps, sc.solver.tolerance, sc.solver.series_eps, sc.solver.t_max)
    return CheckResult("bound ordering", "h <= H", f"h={b.h.mid:.9f}, H={b.H.mid:.9f}", 0.0, b.h.mid <= b.H.mid)


def check_entropy(sc: Scenario, tol: float = 1e-8) -> CheckResult:
    """With ``c0 = c1 = 1/2``, ``h ln 2`` must equal the entropy ``ln(1/lambda)``."""
    h = solve_dimension_root(0.5, 0.5, sc.gaps, tol=1e-11, eps=sc.solver.series_eps)
    _, entropy = solve_entropy(sc.gaps, tol=1e-11, eps=sc.solver.series_eps)
    diff = abs(h.mid * math.log(2.0) - entropy)
    return CheckResult("entropy consistency", f"h ln2 = {entropy:.10f}", f"{h.mid * math.log(2.0):.10f}", tol, diff <= tol)


def check_golden_mean(sc: Scenario, tol: float = 1e-8) -> CheckResult | None:
    S = sc.gaps
    is_n = S == GapSet.naturals_from(1) or S == GapSet.arithmetic(1, 1)
    if not is_n:
        return None
    rep = cross_check_golden_mean(*sc.pair.lower, tol=tol)
    return CheckResult(
        "golden-mean spectral cross-check",
        f"h_spectral = {rep.h_spectral:.10f}",
        f"h_series = {rep.h_series.mid:.10f} (residual {rep.residual:.2g})",
        tol,
        rep.passed,
    )


def check_language(sc: Scenario, n_max: int = 12) -> CheckResult:
    bad = [n for n in range(n_max + 1) if count_language(n, sc.gaps) != brute_force_count(n, sc.gaps)]
    core_ok = all(count_core(n, sc.gaps) <= count_language(n, sc.gaps) for n in range(n_max + 1))
    got = "all n agree" if not bad else f"mismatch at n={bad}"
    return CheckResult("language count vs brute force", f"agreement for n <= {n_max}", got, 0.0, not bad and core_ok)


def check_language_sums(sc: Scenario, n_max: int = 30) -> CheckResult:
    """At the solved root the language sums stay >= 1 and bounded."""
    c0, c1 = sc.pair.lower
    h = solve_dimension_root(c0, c1, sc.gaps, tol=1e-11, eps=sc.solver.series_eps).mid
    sums = [weighted_language_sum(n, h, c0, c1, sc.gaps) for n in range(1, n_max + 1)]
    lo, hi = min(sums), max(sums)
    return CheckResult(
        "language sums at h",
        f"min >= 1 - 1e-9, max finite (n <= {n_max})",
        f"min={lo:.12f}, max={hi:.6f}",
        1e-9,
        lo >= 1.0 - 1e-9 and math.isfinite(hi),
    )


def check_sandwich(sc: Scenario, ts=(0.2, 0.5, 1.0)) -> CheckResult:
    c0, c1 = sc.pair.lower
    worst = 0.0
    for t in ts:
        for n in range(1, 7):
            g = weighted_core_sum(n, t, c0, c1, sc.gaps)
            for k in range(1, 7):
                w = weighted_language_sum(n * k, t, c0, c1, sc.gaps)
                worst = max(worst, g**k / w - 1.0)
    return CheckResult("core/language sandwich", "g(n)^k <= W(nk)", f"max relative excess {worst:.3g}", 1e-12, worst <= 1e-12)


def random_allowable_words(S: GapSet, count: int, max_len: int, rng: np.random.Generator) -> list[str]:
    words = []
    while len(words) < count:
        n = int(rng.integers(0, max_len + 1))
        pool = list(enumerate_language(n, S, cap=10_000))
        words.append(pool[int(rng.integers(len(pool)))])
    return words


def check_cylinder_additivity(sc: Scenario, trials: int = 100, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    c0, c1 = sc.pair.lower
    t = solve_dimension_root(c0, c1, sc.gaps, tol=sc.solver.tolerance, eps=sc.solver.series_eps).mid
    worst = 0.0
    for w in random_allowable_words(sc.gaps, trials, 8, rng):
        n = int(rng.integers(1, 13))
        parent = cylinder_measure_estimate(w, n + 1, t, c0, c1, sc.gaps)
        children = sum(
            cylinder_measure_estimate(w + a, n, t, c0, c1, sc.gaps) for a in "01" if is_allowable(w + a, sc.gaps)
        )
        worst = max(worst, abs(children - parent))
    return CheckResult("cylinder additivity", "nu_n(w0) + nu_n(w1) = nu_{n+1}(w)", f"max error {worst:.3g}", 1e-12, worst <= 1e-12)


def check_box_dimension(sc: Scenario) -> CheckResult | None:
    if sc.ifs is None:
        return None
    b = bounds(sc.pair, sc.gaps, sc.solver.tolerance, sc.solver.series_eps, sc.solver.t_max)
    cloud = generate_points(sc.ifs, sc.gaps, sc.points.depth, sc.points.cap, sc.points.seed)
    series = box_counts(cloud, sc.boxdim.scales)
    slope, stderr = estimate_box_dimension(series, sc.boxdim.drop_low, sc.boxdim.drop_high)
    rep = verify_bounds(slope, stderr, b, sc.boxdim.slack)
    return CheckResult(
        "box dimension within [h, H]",
        f"[{rep.lower:.6f}, {rep.upper:.6f}] +/- slack",
        f"{slope:.6f} (stderr {stderr:.3g}, {cloud.count} points)",
        sc.boxdim.slack,
        rep.passed,
    )


BATTERY = (
    check_root_certificates,
    check_ordering,
    check_entropy,
    check_golden_mean,
    check_language,
    check_language_sums,
    check_sandwich,
    check_cylinder_additivity,
    check_box_dimension,
)


def run_battery(sc: Scenario) -> list[CheckResult]:
    results = []
    for check in BATTERY:
        res = check(sc)
        if res is not None:
            results.append(res)
    return results
