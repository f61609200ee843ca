"""Similarity IFS realizations, subfractal point clouds and box counting."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InputError
from .language import GapSet, check_word, count_core, enumerate_core, sample_gap_word
from .pressure import ContractionPair
from .solver import DimensionBounds

# cell-boundary snapping, in units of the box side
_SNAP = 1e-9


@dataclass(frozen=True)
class Similarity:
    """``x -> ratio * R(angle) @ x + translation`` in dimension 1 or 2.

    In dimension 1 the angle is ignored.
    """

    ratio: float
    translation: tuple
    angle: float = 0.0

    @property
    def dimension(self) -> int:
        return len(self.translation)

    @property
    def matrix(self) -> np.ndarray:
        if self.dimension == 1:
            return np.array([[self.ratio]])
        c, s = math.cos(self.angle), math.sin(self.angle)
        return self.ratio * np.array([[c, -s], [s, c]])

    @property
    def offset(self) -> np.ndarray:
        return np.asarray(self.translation, dtype=float)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return x @ self.matrix.T + self.offset

    def then(self, inner: "Similarity") -> "Similarity":
        """``self ∘ inner``."""
        if inner.dimension != self.dimension:
            raise DomainError("cannot compose maps of different dimensions")
        b = self.matrix @ inner.offset + self.offset
        return Similarity(self.ratio * inner.ratio, tuple(float(v) for v in b), self.angle + inner.angle)

    def fixed_point(self) -> np.ndarray:
        d = self.dimension
        return np.linalg.solve(np.eye(d) - self.matrix, self.offset)


def identity(dimension: int) -> Similarity:
    return Similarity(1.0, (0.0,) * dimension)


@dataclass(frozen=True)
class SimilarityIFS:
    map0: Similarity
    map1: Similarity
    osc_attested: bool = False

    def __post_init__(self):
        if self.map0.dimension != self.map1.dimension or self.map0.dimension not in (1, 2):
            raise DomainError("both maps must share dimension 1 or 2")
        for m in (self.map0, self.map1):
            if not 0.0 < m.ratio < 1.0:
                raise DomainError(f"similarity ratio {m.ratio} not in (0, 1)")

    @classmethod
    def cantor(cls) -> "SimilarityIFS":
        """Middle-thirds maps ``x/3`` and ``x/3 + 2/3``."""
        return cls(Similarity(1 / 3, (0.0,)), Similarity(1 / 3, (2 / 3,)), osc_attested=True)

    @property
    def dimension(self) -> int:
        return self.map0.dimension

    @property
    def maps(self) -> tuple[Similarity, Similarity]:
        return self.map0, self.map1

    def consistent_with(self, pair: ContractionPair) -> bool:
        r0, r1 = self.map0.ratio, self.map1.ratio
        return pair.c0_lower <= r0 <= pair.c0_upper and pair.c1_lower <= r1 <= pair.c1_upper

    def hull(self) -> tuple[np.ndarray, float]:
        """A ball ``(center, radius)`` mapped into itself by both maps.

        Centered at the mean of the two fixed points; the radius is the
        smallest ``R`` with ``|f_i(c) - c| + r_i R <= R`` for both maps.
        """
        center = 0.5 * (self.map0.fixed_point() + self.map1.fixed_point())
        radius = max(np.linalg.norm(m(center) - center) / (1.0 - m.ratio) for m in self.maps)
        return center, float(radius)


def compose_map(ifs: SimilarityIFS, w: str) -> Similarity:
    """``f_{w1} ∘ f_{w2} ∘ ... ∘ f_{wn}``; the last letter acts first, so
    cylinder images shrink as the word grows."""
    if not check_word(w):
        raise DomainError("compose_map needs a non-empty word")
    result = ifs.maps[int(w[-1])]
    for letter in reversed(w[:-1]):
        result = ifs.maps[int(letter)].then(result)
    return result


def base_point(ifs: SimilarityIFS, S: GapSet) -> np.ndarray:
    """``pi((0^m 1)^inf)`` with ``m = min(S)``: the fixed point of map1 when
    ``0 in S``, otherwise that of ``f_0^m ∘ f_1``.  Appending it to any core
    word keeps the coding sequence allowable."""
    m = S.min_value
    return compose_map(ifs, "0" * m + "1").fixed_point()


def apply_words(ifs: SimilarityIFS, words, x0) -> np.ndarray:
    """``f_w(x0)`` for every word, vectorized over words.

    Words are right-aligned and left-padded with an identity letter, then the
    letters are applied from the innermost (last) position outwards.
    """
    words = list(words)
    d = ifs.dimension
    if not words:
        return np.empty((0, d))
    width = max(len(w) for w in words)
    codes = np.full((len(words), width), 2, dtype=np.int8)
    for i, w in enumerate(words):
        if w:
            codes[i, width - len(w):] = np.frombuffer(w.encode(), dtype=np.uint8) - ord("0")
    ident = identity(d)
    mats = np.stack([m.matrix for m in (*ifs.maps, ident)])
    offs = np.stack([m.offset for m in (*ifs.maps, ident)])
    pts = np.tile(np.asarray(x0, dtype=float), (len(words), 1))
    for col in range(width - 1, -1, -1):
        k = codes[:, col]
        pts = np.einsum("nij,nj->ni", mats[k], pts) + offs[k]
    return pts


@dataclass
class PointCloud:
    dimension: int
    points: np.ndarray
    depth: int
    exhaustive: bool = True

    @property
    def count(self) -> int:
        return len(self.points)


def generate_points(ifs: SimilarityIFS, S: GapSet, depth: int, cap: int = 200_000, seed: int = 0) -> PointCloud:
    """Points of the subfractal coded by core words.

    Uses the largest ``n <= depth`` with a non-empty ``G_n``.  When
    ``|G_n| <= cap`` every core word of that length is imaged; otherwise
    ``cap`` words are drawn with the gap sampler (each completed to end in
    ``1``).  Each word ``w`` contributes ``f_w(x0)`` with ``x0`` from
    :func:`base_point`, so every point lies on the subfractal.
    """
    if depth < 1:
        raise DomainError("depth must be >= 1")
    n = depth
    while n >= 1 and count_core(n, S, max_n=max(depth, 64)) == 0:
        n -= 1
    if n < 1:
        raise DomainError(f"no core words of length <= {depth}")
    x0 = base_point(ifs, S)
    if count_core(n, S, max_n=max(depth, 64)) <= cap:
        words = list(enumerate_core(n, S))
        return PointCloud(ifs.dimension, apply_words(ifs, words, x0), n, exhaustive=True)
    rng = np.random.default_rng(seed)
    words = [sample_gap_word(depth, S, rng) for _ in range(cap)]
    return PointCloud(ifs.dimension, apply_words(ifs, words, x0), depth, exhaustive=False)


@dataclass
class BoxCountSeries:
    scales: list = field(default_factory=list)
    counts: list = field(default_factory=list)

    def __len__(self):
        return len(self.scales)

    def rows(self):
        for r, n in zip(self.scales, self.counts):
            yield r, n, -math.log(r), math.log(n) if n > 0 else -math.inf


def default_scales(j_min: int = 2, j_max: int = 12, base: float = 2.0) -> list[float]:
    return [base ** (-j) for j in range(j_min, j_max + 1)]


def occupied_cells(points: np.ndarray, r: float) -> np.ndarray:
    """Distinct grid cells of side ``r`` hit by the points.

    The grid is anchored at the origin and its cells are closed on the upper
    side, ``(k r, (k+1) r]``, so a point on a cell boundary belongs to the
    lower cell.  Points within ``1e-9`` cells of a boundary are snapped to it.
    """
    q = np.asarray(points, dtype=float) / r
    idx = np.ceil(q - _SNAP).astype(np.int64) - 1
    return np.unique(idx, axis=0)


def box_counts(cloud: PointCloud, scales) -> BoxCountSeries:
    scales = [float(r) for r in scales]
    if cloud.count == 0:
        raise DomainError("cannot box-count an empty cloud")
    if any(not 0.0 < r <= 1.0 for r in scales):
        raise DomainError("scales must lie in (0, 1]")
    if any(b >= a for a, b in zip(scales, scales[1:])):
        raise DomainError("scales must be strictly decreasing")
    pts = np.asarray(cloud.points).reshape(cloud.count, -1)
    return BoxCountSeries(scales, [len(occupied_cells(pts, r)) for r in scales])


def estimate_box_dimension(series: BoxCountSeries, drop_low: int = 2, drop_high: int = 2) -> tuple[float, float]:
    """Least-squares slope of ``ln N`` against ``ln(1/r)`` and its standard error.

    ``drop_high`` entries at the coarse end and ``drop_low`` at the fine end
    are discarded first.
    """
    end = len(series) - drop_low
    r = np.asarray(series.scales[drop_high:end], dtype=float)
    n = np.asarray(series.counts[drop_high:end], dtype=float)
    if len(r) < 2:
        raise DomainError("need at least two scales after dropping")
    x, y = -np.log(r), np.log(n)
    xc = x - x.mean()
    sxx = float(xc @ xc)
    slope = float(xc @ (y - y.mean())) / sxx
    if len(x) <= 2:
        return slope, 0.0
    resid = y - y.mean() - slope * xc
    stderr = math.sqrt(float(resid @ resid) / (len(x) - 2) / sxx)
    return slope, stderr


@dataclass(frozen=True)
class BoundsCheck:
    estimate: float
    stderr: float
    lower: float
    upper: float
    slack: float

    @property
    def passed(self) -> bool:
        return self.lower - self.slack <= self.estimate <= self.upper + self.slack


def verify_bounds(estimate: float, stderr: float, b: DimensionBounds, slack: float) -> BoundsCheck:
    """Is the estimate inside ``[h.lo - slack, H.hi + slack]``?"""
    return BoundsCheck(estimate, stderr, b.h.lo, b.H.hi, slack)


# ---------------------------------------------------------------------------
# CSV

BOX_HEADER = ("r", "N", "ln_inv_r", "ln_N")


def write_points_csv(path, cloud: PointCloud) -> None:
    header = ("x",) if cloud.dimension == 1 else ("x", "y")
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(header)
        for p in np.asarray(cloud.points).reshape(cloud.count, -1):
            out.writerow([repr(float(v)) for v in p])


def read_points_csv(path) -> np.ndarray:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader, ()))
        if header not in (("x",), ("x", "y")):
            raise InputError(f"unexpected point-cloud header {header}")
        rows = [[float(v) for v in row] for row in reader]
    return np.asarray(rows, dtype=float).reshape(-1, len(header))


def write_box_csv(path, series: BoxCountSeries) -> None:
    with open(path, "w", newline="") as fh:
        out = csv.writer(fh, lineterminator="\n")
        out.writerow(BOX_HEADER)
        for r, n, lr, ln in series.rows():
            out.writerow([repr(float(r)), int(n), repr(float(lr)), repr(float(ln))])


def read_box_csv(path) -> BoxCountSeries:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader, ()))
        if header != BOX_HEADER:
            raise InputError(f"unexpected box-count header {header}")
        rows = list(reader)
    return BoxCountSeries([float(r[0]) for r in rows], [int(r[1]) for r in rows])
