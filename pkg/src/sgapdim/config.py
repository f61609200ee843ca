"""Scenario files: line-oriented ``key = value`` pairs with ``#`` comments.

Keys are namespaced::

    sgap.kind = naturals          # finite | arithmetic | primes | naturals | file
    sgap.offset = 1               # naturals: {offset, offset+1, ...}
    sgap.values = 2, 5            # finite
    sgap.start = 1                # arithmetic
    sgap.step = 3
    sgap.path = gaps.txt          # file, relative to the scenario file
    contraction.c0 = 1/3          # shorthand for c0_lower = c0_upper
    contraction.c1_lower = 0.3
    contraction.c1_upper = 0.4
    ifs.dimension = 1
    ifs.map0.ratio = 1/3
    ifs.map0.translation = 0      # "x, y" in dimension 2
    ifs.map0.angle = 0            # radians, dimension 2 only
    ifs.map1.ratio = 1/3
    ifs.map1.translation = 2/3
    ifs.osc = true
    solver.tolerance = 1e-9
    solver.series_eps = 1e-12
    solver.t_max = 1024
    points.depth = 14
    points.cap = 200000
    points.seed = 0
    boxdim.base = 2               # ladder base**-j for j_min..j_max
    boxdim.j_min = 2
    boxdim.j_max = 12
    boxdim.scales = 0.25, 0.125   # explicit ladder, overrides base/j_min/j_max
    boxdim.drop_low = 2
    boxdim.drop_high = 2
    boxdim.slack = 0.05
    pressure.n_max = 20
    pressure.t_values = 0.25, 0.5, 0.75, 1
    language.n_max = 20

Numbers accept fractions such as ``1/3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import ConfigError, DomainError, InputError
from .geometry import Similarity, SimilarityIFS, default_scales
from .language import GapSet
from .pressure import ContractionPair


@dataclass(frozen=True)
class SolverSettings:
    tolerance: float = 1e-9
    series_eps: float = 1e-12
    t_max: float = 1024.0


@dataclass(frozen=True)
class PointSettings:
    depth: int = 14
    cap: int = 200_000
    seed: int = 0


@dataclass(frozen=True)
class BoxSettings:
    scales: tuple = tuple(default_scales())
    drop_low: int = 2
    drop_high: int = 2
    slack: float = 0.05


@dataclass(frozen=True)
class Scenario:
    gaps: GapSet
    pair: ContractionPair
    ifs: SimilarityIFS | None = None
    solver: SolverSettings = field(default_factory=SolverSettings)
    points: PointSettings = field(default_factory=PointSettings)
    boxdim: BoxSettings = field(default_factory=BoxSettings)
    pressure_n_max: int = 20
    pressure_t_values: tuple = (0.25, 0.5, 0.75, 1.0)
    language_n_max: int = 20

    def with_seed(self, seed: int) -> "Scenario":
        pts = PointSettings(self.points.depth, self.points.cap, int(seed))
        return Scenario(self.gaps, self.pair, self.ifs, self.solver, pts, self.boxdim,
                        self.pressure_n_max, self.pressure_t_values, self.language_n_max)


_MAP_KEYS = ("ratio", "translation", "angle")
KNOWN_KEYS = {
    "sgap.kind", "sgap.values", "sgap.start", "sgap.step", "sgap.offset", "sgap.path",
    "contraction.c0", "contraction.c1",
    "contraction.c0_lower", "contraction.c0_upper", "contraction.c1_lower", "contraction.c1_upper",
    "ifs.dimension", "ifs.osc",
    *(f"ifs.map{i}.{k}" for i in (0, 1) for k in _MAP_KEYS),
    "solver.tolerance", "solver.series_eps", "solver.t_max",
    "points.depth", "points.cap", "points.seed",
    "boxdim.base", "boxdim.j_min", "boxdim.j_max", "boxdim.scales",
    "boxdim.drop_low", "boxdim.drop_high", "boxdim.slack",
    "pressure.n_max", "pressure.t_values", "language.n_max",
}


class _Entries:
    """Raw key/value pairs plus the line each came from."""

    def __init__(self, text: str):
        self.values: dict[str, str] = {}
        self.lines: dict[str, int] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", lineno)
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in KNOWN_KEYS:
                raise ConfigError(f"unknown key {key!r}", lineno)
            if key in self.values:
                raise ConfigError(f"duplicate key {key!r}", lineno)
            if not value:
                raise ConfigError(f"empty value for {key!r}", lineno)
            self.values[key] = value
            self.lines[key] = lineno

    def __contains__(self, key):
        return key in self.values

    def line(self, key):
        return self.lines.get(key)

    def _convert(self, key, fn, what):
        try:
            return fn(self.values[key])
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"{key}: malformed {what} {self.values[key]!r}", self.line(key)) from None

    def require(self, key):
        if key not in self.values:
            raise ConfigError(f"missing required key {key!r}")
        return self.values[key]

    def real(self, key, default=None, positive=False):
        if key not in self.values:
            if default is None:
                self.require(key)
            return default
        v = self._convert(key, lambda s: float(Fraction(s)), "number")
        if positive and not v > 0:
            raise ConfigError(f"{key} must be positive", self.line(key))
        return v

    def integer(self, key, default=None, minimum=None):
        if key not in self.values:
            if default is None:
                self.require(key)
            return default
        v = self._convert(key, int, "integer")
        if minimum is not None and v < minimum:
            raise ConfigError(f"{key} must be >= {minimum}", self.line(key))
        return v

    def reals(self, key, default=None):
        if key not in self.values:
            return default
        return self._convert(key, lambda s: tuple(float(Fraction(p)) for p in s.split(",")), "number list")

    def integers(self, key):
        return self._convert(key, lambda s: tuple(int(p) for p in s.split(",")), "integer list")

    def flag(self, key, default=False):
        if key not in self.values:
            return default
        v = self.values[key].lower()
        if v in ("true", "yes", "1"):
            return True
        if v in ("false", "no", "0"):
            return False
        raise ConfigError(f"{key}: expected true/false, got {v!r}", self.line(key))


def _gap_set(e: _Entries, base_dir: Path) -> GapSet:
    kind = e.require("sgap.kind").lower()
    line = e.line("sgap.kind")
    try:
        if kind == "finite":
            if "sgap.values" not in e:
                raise ConfigError("finite gap set needs sgap.values (S must be non-empty)", line)
            return GapSet.finite(e.integers("sgap.values"))
        if kind == "arithmetic":
            return GapSet.arithmetic(e.integer("sgap.start", 0, 0), e.integer("sgap.step", 1, 1))
        if kind == "primes":
            return GapSet.primes()
        if kind in ("naturals", "naturals_from"):
            return GapSet.naturals_from(e.integer("sgap.offset", 0, 0))
        if kind == "file":
            path = Path(e.require("sgap.path"))
            return GapSet.from_file(path if path.is_absolute() else base_dir / path)
    except (DomainError, InputError) as exc:
        raise ConfigError(f"invalid gap set: {exc}", line) from None
    raise ConfigError(f"unknown sgap.kind {kind!r}", line)


def _pair(e: _Entries) -> ContractionPair:
    vals = {}
    for c in ("c0", "c1"):
        short = f"contraction.{c}"
        for side in ("lower", "upper"):
            key = f"contraction.{c}_{side}"
            if key in e:
                vals[f"{c}_{side}"] = e.real(key)
            elif short in e:
                vals[f"{c}_{side}"] = e.real(short)
            else:
                raise ConfigError(f"missing required key {key!r} (or {short!r})")
    try:
        return ContractionPair(**vals)
    except DomainError as exc:
        lines = [e.line(k) for k in e.lines if k.startswith("contraction.")]
        raise ConfigError(str(exc), min(lines) if lines else None) from None


def _similarity(e: _Entries, i: int, dim: int) -> Similarity:
    prefix = f"ifs.map{i}."
    ratio = e.real(prefix + "ratio")
    trans = e.reals(prefix + "translation", (0.0,) * dim)
    if len(trans) != dim:
        raise ConfigError(f"{prefix}translation needs {dim} component(s)", e.line(prefix + "translation"))
    angle = e.real(prefix + "angle", 0.0)
    if not 0.0 < ratio < 1.0:
        raise ConfigError(f"{prefix}ratio must lie in (0, 1)", e.line(prefix + "ratio"))
    return Similarity(ratio, trans, angle)


def _ifs(e: _Entries, pair: ContractionPair) -> SimilarityIFS | None:
    if not any(k.startswith("ifs.") for k in e.values):
        return None
    dim = e.integer("ifs.dimension", 1)
    if dim not in (1, 2):
        raise ConfigError("ifs.dimension must be 1 or 2", e.line("ifs.dimension"))
    ifs = SimilarityIFS(_similarity(e, 0, dim), _similarity(e, 1, dim), e.flag("ifs.osc"))
    if not ifs.consistent_with(pair):
        bad = "ifs.map0.ratio" if not pair.c0_lower <= ifs.map0.ratio <= pair.c0_upper else "ifs.map1.ratio"
        raise ConfigError(f"{bad} lies outside the contraction bounds", e.line(bad))
    return ifs


def _box(e: _Entries) -> BoxSettings:
    scales = e.reals("boxdim.scales")
    if scales is None:
        base = e.real("boxdim.base", 2.0)
        if base <= 1.0:
            raise ConfigError("boxdim.base must exceed 1", e.line("boxdim.base"))
        j_min = e.integer("boxdim.j_min", 2, 0)
        j_max = e.integer("boxdim.j_max", 12, 0)
        if j_max <= j_min:
            raise ConfigError("boxdim.j_max must exceed boxdim.j_min", e.line("boxdim.j_max"))
        scales = tuple(default_scales(j_min, j_max, base))
    elif any(not 0 < r <= 1 for r in scales) or any(b >= a for a, b in zip(scales, scales[1:])):
        raise ConfigError("boxdim.scales must be strictly decreasing values in (0, 1]", e.line("boxdim.scales"))
    drop_low = e.integer("boxdim.drop_low", 2, 0)
    drop_high = e.integer("boxdim.drop_high", 2, 0)
    if len(scales) < drop_low + drop_high + 2:
        raise ConfigError("scale ladder too short for the requested drops")
    return BoxSettings(tuple(scales), drop_low, drop_high, e.real("boxdim.slack", 0.05, positive=True))


def parse_config_text(text: str, base_dir=".") -> Scenario:
    e = _Entries(text)
    gaps = _gap_set(e, Path(base_dir))
    pair = _pair(e)
    ifs = _ifs(e, pair)
    solver = SolverSettings(
        e.real("solver.tolerance", 1e-9, positive=True),
        e.real("solver.series_eps", 1e-12, positive=True),
        e.real("solver.t_max", 1024.0, positive=True),
    )
    points = PointSettings(
        e.integer("points.depth", 14, 1),
        e.integer("points.cap", 200_000, 1),
        e.integer("points.seed", 0),
    )
    t_values = e.reals("pressure.t_values", (0.25, 0.5, 0.75, 1.0))
    return Scenario(
        gaps, pair, ifs, solver, points, _box(e),
        e.integer("pressure.n_max", 20, 1), t_values, e.integer("language.n_max", 20, 0),
    )


def parse_config(path) -> Scenario:
    """Read and validate a scenario file; raises ConfigError."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None
    try:
        return parse_config_text(text, path.parent)
    except InputError as exc:
        raise ConfigError(str(exc), None) from None
