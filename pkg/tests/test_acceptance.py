"""Acceptance gate: criteria 1-10, each at its stated tolerance and time limit.

Every test prints one ``[PASS]``/``[FAIL] criterion k`` line.  Run with
``pytest tests/test_acceptance.py -s`` (or execute this file directly) to see
them.
"""

import math
import time

import numpy as np
import pytest

from sgapdim.geometry import SimilarityIFS, box_counts, default_scales, estimate_box_dimension, generate_points
from sgapdim.language import GapSet, count_language, enumerate_language, is_allowable
from sgapdim.pressure import ContractionPair, cylinder_measure_estimate, weighted_core_sum, weighted_language_sum
from sgapdim.solver import bounds, cross_check_golden_mean, solve_dimension_root, solve_entropy

from oracles import brute_language_count

N = GapSet.naturals_from(1)
N0 = GapSet.naturals_from(0)
PRIMES = GapSet.primes()
PHI = (1 + math.sqrt(5)) / 2

# the gap sets of criterion 5, reused by 6-8
TEST_SETS = [N, N0, PRIMES, GapSet.finite([0]), GapSet.finite([1]), GapSet.finite([2, 5]), GapSet.arithmetic(1, 3)]
TEST_PAIRS = [(1 / 3, 1 / 3), (0.5, 0.25)]

# box sides matched to the 1/3 map ratio, dropping two scales at each end
TRIADIC = default_scales(1, 8, 3.0)


class Gate:
    """Times one criterion and prints its verdict line."""

    def __init__(self, k, limit):
        self.k, self.limit = k, limit

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        return False

    def verdict(self, ok, detail):
        in_time = self.elapsed < self.limit
        status = "PASS" if ok and in_time else "FAIL"
        print(f"[{status}] criterion {self.k}: {detail} ({self.elapsed:.2f}s, limit {self.limit:g}s)")
        assert ok, detail
        assert in_time, f"criterion {self.k} took {self.elapsed:.2f}s"


def test_criterion_1_golden_mean_closed_form():
    with Gate(1, 1.0) as g:
        enc = solve_dimension_root(1 / 3, 1 / 3, N)
    # x + x^2 = 1 with x = 3^-h
    exact = math.log(PHI) / math.log(3)
    err = abs(enc.mid - exact)
    g.verdict(err <= 1e-6 and enc.width <= 1e-9, f"h={enc.mid:.10f}, |h-exact|={err:.2g}, width={enc.width:.2g}")


def test_criterion_2_spectral_cross_check():
    with Gate(2, 1.0) as g:
        reps = [cross_check_golden_mean(c0, c1) for c0, c1 in [(1 / 3, 1 / 3), (0.5, 0.25), (0.9, 0.9)]]
    worst = max(r.difference for r in reps)
    g.verdict(worst <= 1e-8, f"max |h_series - h_spectral| = {worst:.2g}")


def test_criterion_3_moran_reduction():
    with Gate(3, 1.0) as g:
        enc = solve_dimension_root(0.5, 0.25, N0)
    # x + x^2 = 1 with x = 2^-h
    exact = -math.log2((math.sqrt(5) - 1) / 2)
    err = abs(enc.mid - exact)
    g.verdict(err <= 1e-6 and abs(enc.mid - 0.694242) <= 1e-6, f"h={enc.mid:.10f}, |h-exact|={err:.2g}")


def test_criterion_4_entropy_consistency():
    sets = [N, N0, PRIMES, GapSet.finite([1, 3])]
    with Gate(4, 5.0) as g:
        diffs = []
        for S in sets:
            h = solve_dimension_root(0.5, 0.5, S, tol=1e-11, eps=1e-12).mid
            _, entropy = solve_entropy(S, tol=1e-11, eps=1e-12)
            diffs.append(abs(h * math.log(2) - entropy))
    g.verdict(max(diffs) <= 1e-8, f"max |h ln2 - ln(1/lambda)| = {max(diffs):.2g} over {len(sets)} sets")


def test_criterion_5_language_oracle():
    with Gate(5, 60.0) as g:
        bad = [
            (S.describe(), n)
            for S in TEST_SETS
            for n in range(17)
            if count_language(n, S) != brute_language_count(n, S)
        ]
    g.verdict(not bad, f"{len(TEST_SETS)} sets x n <= 16 brute-forced, mismatches: {bad or 'none'}")


def test_criterion_6_language_sums_at_root():
    with Gate(6, 10.0) as g:
        lows, highs = [], []
        for S in TEST_SETS:
            for c0, c1 in TEST_PAIRS:
                h = solve_dimension_root(c0, c1, S, tol=1e-11).mid
                sums = [weighted_language_sum(n, h, c0, c1, S) for n in range(1, 31)]
                lows.append(min(sums))
                highs.append(max(sums))
    ok = min(lows) >= 1 - 1e-9 and all(math.isfinite(v) for v in highs)
    g.verdict(ok, f"min over n <= 30 = {min(lows):.12f}, max = {max(highs):.6f}")


def test_criterion_7_core_language_sandwich():
    with Gate(7, 10.0) as g:
        worst = -math.inf
        for S in TEST_SETS:
            for c0, c1 in TEST_PAIRS:
                for t in (0.2, 0.5, 1.0):
                    for n in range(1, 7):
                        gn = weighted_core_sum(n, t, c0, c1, S)
                        for k in range(1, 7):
                            w = weighted_language_sum(n * k, t, c0, c1, S)
                            worst = max(worst, gn**k - w * (1 + 1e-12))
    g.verdict(worst <= 0.0, f"max of g(n,t)^k - W(nk,t)(1+1e-12) = {worst:.3g}")


def test_criterion_8_cylinder_additivity():
    rng = np.random.default_rng(20240613)
    with Gate(8, 30.0) as g:
        worst = 0.0
        for i in range(100):
            S = TEST_SETS[i % len(TEST_SETS)]
            c0, c1 = TEST_PAIRS[i % 2]
            t = solve_dimension_root(c0, c1, S).mid
            length = int(rng.integers(0, 9))
            words = list(enumerate_language(length, S, 10_000))
            w = words[int(rng.integers(len(words)))]
            n = int(rng.integers(1, 13))
            parent = cylinder_measure_estimate(w, n + 1, t, c0, c1, S)
            kids = sum(cylinder_measure_estimate(w + a, n, t, c0, c1, S) for a in "01" if is_allowable(w + a, S))
            worst = max(worst, abs(kids - parent))
    g.verdict(worst <= 1e-12, f"max |nu_n(w0) + nu_n(w1) - nu_(n+1)(w)| = {worst:.3g} over 100 words")


def _box_estimate(S):
    cloud = generate_points(SimilarityIFS.cantor(), S, depth=14, cap=200_000, seed=0)
    slope, _ = estimate_box_dimension(box_counts(cloud, TRIADIC), drop_low=2, drop_high=2)
    return slope, cloud.count


def test_criterion_9a_cantor():
    with Gate("9a", 60.0) as g:
        est, count = _box_estimate(N0)
    target = math.log(2) / math.log(3)
    g.verdict(abs(est - target) <= 0.03, f"Cantor estimate {est:.6f} vs {target:.6f} ({count} points)")


def test_criterion_9b_golden_mean_subfractal():
    with Gate("9b", 60.0) as g:
        est, count = _box_estimate(N)
        b = bounds(ContractionPair.exact(1 / 3, 1 / 3), N)
    ok = abs(est - 0.438018) <= 0.05 and b.h.mid - 0.05 <= est <= b.H.mid + 0.05
    g.verdict(ok, f"estimate {est:.6f}, [h, H] = [{b.h.mid:.6f}, {b.H.mid:.6f}] ({count} points)")


def test_criterion_9c_prime_gap_subfractal():
    with Gate("9c", 60.0) as g:
        est, count = _box_estimate(PRIMES)
        b = bounds(ContractionPair.exact(1 / 3, 1 / 3), PRIMES)
    ok = b.h.mid - 0.07 <= est <= b.H.mid + 0.07
    g.verdict(ok, f"estimate {est:.6f}, [h, H] = [{b.h.mid:.6f}, {b.H.mid:.6f}] ({count} points)")


def test_criterion_10_ordering():
    sets = [N, N0, PRIMES, GapSet.finite([1, 3]), GapSet.arithmetic(1, 3)]
    rng = np.random.default_rng(7)
    with Gate(10, 30.0) as g:
        violations = 0
        for i in range(100):
            c0 = np.sort(rng.uniform(0.01, 0.99, 2))
            c1 = np.sort(rng.uniform(0.01, 0.99, 2))
            pair = ContractionPair(float(c0[0]), float(c0[1]), float(c1[0]), float(c1[1]))
            b = bounds(pair, sets[i % len(sets)])
            violations += b.h.mid > b.H.mid
    g.verdict(violations == 0, f"{violations} ordering violations in 100 random pairs")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
