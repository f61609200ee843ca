"""Fixed acceptance criteria run by ``sgapdim verify`` after the scenario checks.

These cases do not depend on the scenario file.  Each returns a
:class:`~sgapdim.checks.CheckResult` whose name starts with ``criterion k``;
elapsed time is checked against the stated limit as part of passing.
"""

from __future__ import annotations

import math
import time

import numpy as np

from .checks import CheckResult, brute_force_count
from .geometry import SimilarityIFS, box_counts, default_scales, estimate_box_dimension, generate_points
from .language import GapSet, count_language, enumerate_language, is_allowable
from .pressure import ContractionPair, cylinder_measure_estimate, weighted_core_sum, weighted_language_sum
from .solver import bounds, cross_check_golden_mean, solve_dimension_root, solve_entropy

N = GapSet.naturals_from(1)
N0 = GapSet.naturals_from(0)
PRIMES = GapSet.primes()
TEST_SETS = (N, N0, PRIMES, GapSet.finite([0]), GapSet.finite([1]), GapSet.finite([2, 5]), GapSet.arithmetic(1, 3))
TEST_PAIRS = ((1 / 3, 1 / 3), (0.5, 0.25))
TRIADIC = default_scales(1, 8, 3.0)
PHI = (1 + math.sqrt(5)) / 2


def _timed(k, limit, tol, expected, fn):
    t0 = time.perf_counter()
    ok, got = fn()
    elapsed = time.perf_counter() - t0
    return CheckResult(f"criterion {k}", expected, f"{got} in {elapsed:.2f}s", tol, bool(ok) and elapsed < limit)


def criterion_1():
    def body():
        enc = solve_dimension_root(1 / 3, 1 / 3, N)
        err = abs(enc.mid - math.log(PHI) / math.log(3))
        return err <= 1e-6 and enc.width <= 1e-9, f"h={enc.mid:.10f} (width {enc.width:.2g})"

    return _timed(1, 1.0, 1e-6, "h = ln(phi)/ln 3 = 0.4380178795, width <= 1e-9, < 1s", body)


def criterion_2():
    def body():
        worst = max(cross_check_golden_mean(c0, c1).difference for c0, c1 in ((1 / 3, 1 / 3), (0.5, 0.25), (0.9, 0.9)))
        return worst <= 1e-8, f"max difference {worst:.2g}"

    return _timed(2, 1.0, 1e-8, "|h_series - h_spectral| <= 1e-8, < 1s", body)


def criterion_3():
    def body():
        h = solve_dimension_root(0.5, 0.25, N0).mid
        return abs(h - 0.694242) <= 1e-6, f"h={h:.10f}"

    return _timed(3, 1.0, 1e-6, "h = 0.694242, < 1s", body)


def criterion_4():
    def body():
        worst = 0.0
        for S in (N, N0, PRIMES, GapSet.finite([1, 3])):
            h = solve_dimension_root(0.5, 0.5, S, tol=1e-11, eps=1e-12).mid
            _, ent = solve_entropy(S, tol=1e-11, eps=1e-12)
            worst = max(worst, abs(h * math.log(2) - ent))
        return worst <= 1e-8, f"max |h ln2 - ln(1/lambda)| {worst:.2g}"

    return _timed(4, 5.0, 1e-8, "entropy consistency on 4 sets, < 5s", body)


def criterion_5():
    def body():
        bad = [(S.describe(), n) for S in TEST_SETS for n in range(17) if count_language(n, S) != brute_force_count(n, S)]
        return not bad, "no mismatches" if not bad else f"mismatches {bad}"

    return _timed(5, 60.0, 0.0, "count_language = brute force, n <= 16, < 60s", body)


def criterion_6():
    def body():
        lo, hi = math.inf, 0.0
        for S in TEST_SETS:
            for c0, c1 in TEST_PAIRS:
                h = solve_dimension_root(c0, c1, S, tol=1e-11).mid
                sums = [weighted_language_sum(n, h, c0, c1, S) for n in range(1, 31)]
                lo, hi = min(lo, min(sums)), max(hi, max(sums))
        return lo >= 1 - 1e-9 and math.isfinite(hi), f"min {lo:.12f}, max {hi:.6f}"

    return _timed(6, 10.0, 1e-9, "language sums at h >= 1 - 1e-9 for n <= 30, < 10s", body)


def criterion_7():
    def body():
        worst = -math.inf
        for S in TEST_SETS:
            for c0, c1 in TEST_PAIRS:
                for t in (0.2, 0.5, 1.0):
                    for n in range(1, 7):
                        g = weighted_core_sum(n, t, c0, c1, S)
                        for k in range(1, 7):
                            worst = max(worst, g**k - weighted_language_sum(n * k, t, c0, c1, S) * (1 + 1e-12))
        return worst <= 0.0, f"max excess {worst:.3g}"

    return _timed(7, 10.0, 1e-12, "g(n,t)^k <= W(nk,t)(1+1e-12), < 10s", body)


def criterion_8(seed: int = 20240613):
    def body():
        rng = np.random.default_rng(seed)
        worst = 0.0
        for i in range(100):
            S = TEST_SETS[i % len(TEST_SETS)]
            c0, c1 = TEST_PAIRS[i % 2]
            t = solve_dimension_root(c0, c1, S).mid
            words = list(enumerate_language(int(rng.integers(0, 9)), S, 10_000))
            w = words[int(rng.integers(len(words)))]
            n = int(rng.integers(1, 13))
            parent = cylinder_measure_estimate(w, n + 1, t, c0, c1, S)
            kids = sum(cylinder_measure_estimate(w + a, n, t, c0, c1, S) for a in "01" if is_allowable(w + a, S))
            worst = max(worst, abs(kids - parent))
        return worst <= 1e-12, f"max error {worst:.3g}"

    return _timed(8, 30.0, 1e-12, "cylinder additivity on 100 random words, < 30s", body)


def _box_estimate(S):
    cloud = generate_points(SimilarityIFS.cantor(), S, depth=14, cap=200_000, seed=0)
    return estimate_box_dimension(box_counts(cloud, TRIADIC), 2, 2)[0]


def criterion_9a():
    def body():
        est = _box_estimate(N0)
        return abs(est - math.log(2) / math.log(3)) <= 0.03, f"estimate {est:.6f}"

    return _timed("9a", 60.0, 0.03, "Cantor box estimate 0.630930 +/- 0.03, < 60s", body)


def criterion_9b():
    def body():
        est = _box_estimate(N)
        b = bounds(ContractionPair.exact(1 / 3, 1 / 3), N)
        ok = abs(est - 0.438018) <= 0.05 and b.h.mid - 0.05 <= est <= b.H.mid + 0.05
        return ok, f"estimate {est:.6f}"

    return _timed("9b", 60.0, 0.05, "golden-mean box estimate 0.438018 +/- 0.05, < 60s", body)


def criterion_9c():
    def body():
        est = _box_estimate(PRIMES)
        b = bounds(ContractionPair.exact(1 / 3, 1 / 3), PRIMES)
        return b.h.mid - 0.07 <= est <= b.H.mid + 0.07, f"estimate {est:.6f}, h=H={b.h.mid:.6f}"

    return _timed("9c", 60.0, 0.07, "prime-gap box estimate in [h-0.07, H+0.07], < 60s", body)


def criterion_10(seed: int = 7):
    def body():
        sets = (N, N0, PRIMES, GapSet.finite([1, 3]), GapSet.arithmetic(1, 3))
        rng = np.random.default_rng(seed)
        bad = 0
        for i in range(100):
            c0 = np.sort(rng.uniform(0.01, 0.99, 2))
            c1 = np.sort(rng.uniform(0.01, 0.99, 2))
            b = bounds(ContractionPair(float(c0[0]), float(c0[1]), float(c1[0]), float(c1[1])), sets[i % 5])
            bad += b.h.mid > b.H.mid
        return bad == 0, f"{bad} violations"

    return _timed(10, 30.0, 0.0, "h <= H for 100 random pairs, < 30s", body)


CRITERIA = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9a, criterion_9b, criterion_9c, criterion_10,
)


def run_criteria() -> list[CheckResult]:
    return [c() for c in CRITERIA]
