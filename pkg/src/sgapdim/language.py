"""Gap sets, the language of an S-gap shift, and word counting.

Words are plain strings over the alphabet ``"01"``.  A word is allowable
when it occurs somewhere in a one-sided sequence of the form
``0^n 1 0^{s1} 1 0^{s2} 1 ...`` with every ``s_i`` in ``S`` (or in a limit of
such sequences).  Counting never enumerates the ``2**n`` words; it walks a
small automaton whose state is ``(seen_a_one, current_zero_run)``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .errors import DomainError, InputError, NumericError

FINITE = "finite"
ARITHMETIC = "arithmetic"
PRIMES = "primes"
NATURALS = "naturals"
FILE = "file"

KINDS = (FINITE, ARITHMETIC, PRIMES, NATURALS, FILE)

DEFAULT_MAX_N = 64


# ---------------------------------------------------------------------------
# primes


@lru_cache(maxsize=8)
def _sieve(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime)


def primes_upto(limit: int) -> np.ndarray:
    """All primes ``<= limit`` as an int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    # round the sieve bound up so repeated calls with growing limits hit the cache
    bound = 1 << max(6, (limit - 1).bit_length())
    primes = _sieve(bound)
    return primes[: np.searchsorted(primes, limit, side="right")].astype(np.int64)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# gap sets


@dataclass(frozen=True)
class GapSet:
    """A non-empty set ``S`` of allowed gap lengths (non-negative integers).

    Build instances through the class methods rather than the constructor.
    """

    kind: str
    values: tuple = ()
    start: int = 0
    step: int = 1
    offset: int = 0
    path: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown gap-set kind {self.kind!r}")
        if self.kind in (FINITE, FILE):
            vals = tuple(int(v) for v in self.values)
            if not vals:
                raise DomainError("gap set must be non-empty")
            if any(v < 0 for v in vals):
                raise DomainError("gap lengths must be non-negative")
            if any(b <= a for a, b in zip(vals, vals[1:])):
                raise DomainError("gap values must be strictly increasing")
            object.__setattr__(self, "values", vals)
        elif self.kind == ARITHMETIC:
            if self.start < 0 or self.step < 1:
                raise DomainError("arithmetic gap set needs start >= 0 and step >= 1")
        elif self.kind == NATURALS:
            if self.offset < 0:
                raise DomainError("offset must be non-negative")

    # constructors -----------------------------------------------------------

    @classmethod
    def finite(cls, values: Sequence[int]) -> "GapSet":
        return cls(FINITE, values=tuple(sorted(set(int(v) for v in values))))

    @classmethod
    def arithmetic(cls, start: int, step: int) -> "GapSet":
        return cls(ARITHMETIC, start=int(start), step=int(step))

    @classmethod
    def primes(cls) -> "GapSet":
        return cls(PRIMES)

    @classmethod
    def naturals_from(cls, offset: int = 0) -> "GapSet":
        """``{offset, offset+1, ...}``; offset 0 is N_0, offset 1 is N."""
        return cls(NATURALS, offset=int(offset))

    @classmethod
    def from_file(cls, path) -> "GapSet":
        """Read one non-negative decimal integer per line, ascending, no duplicates.

        Blank lines are ignored.  Raises InputError on unreadable or
        malformed files.
        """
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise InputError(f"cannot read gap file {path}: {exc}") from exc
        values = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            if not line.isdigit():
                raise InputError(f"{path}:{lineno}: not a non-negative integer: {line!r}")
            v = int(line)
            if values and v == values[-1]:
                raise InputError(f"{path}:{lineno}: duplicate gap {v}")
            if values and v < values[-1]:
                raise InputError(f"{path}:{lineno}: gaps must be ascending")
            values.append(v)
        if not values:
            raise InputError(f"{path}: empty gap file")
        return cls(FILE, values=tuple(values), path=str(path))

    # queries ------------------------------------------------------------------

    @property
    def is_infinite(self) -> bool:
        return self.kind in (ARITHMETIC, PRIMES, NATURALS)

    @property
    def max_value(self) -> int | None:
        """Largest element, or None for infinite sets."""
        return None if self.is_infinite else self.values[-1]

    @property
    def min_value(self) -> int:
        if self.kind in (FINITE, FILE):
            return self.values[0]
        if self.kind == ARITHMETIC:
            return self.start
        if self.kind == NATURALS:
            return self.offset
        return 2

    def __contains__(self, s) -> bool:
        s = int(s)
        if s < 0:
            return False
        if self.kind in (FINITE, FILE):
            i = bisect.bisect_left(self.values, s)
            return i < len(self.values) and self.values[i] == s
        if self.kind == ARITHMETIC:
            return s >= self.start and (s - self.start) % self.step == 0
        if self.kind == NATURALS:
            return s >= self.offset
        return is_prime(s)

    def elements_upto(self, s_max: int) -> np.ndarray:
        """Elements ``<= s_max`` as an ascending int64 array."""
        s_max = int(s_max)
        if s_max < 0:
            return np.empty(0, dtype=np.int64)
        if self.kind in (FINITE, FILE):
            k = bisect.bisect_right(self.values, s_max)
            return np.asarray(self.values[:k], dtype=np.int64)
        if self.kind == ARITHMETIC:
            return np.arange(self.start, s_max + 1, self.step, dtype=np.int64)
        if self.kind == NATURALS:
            return np.arange(self.offset, s_max + 1, dtype=np.int64)
        return primes_upto(s_max)

    def describe(self) -> str:
        if self.kind == FINITE:
            return "{" + ",".join(map(str, self.values)) + "}"
        if self.kind == FILE:
            return f"file:{self.path} ({len(self.values)} gaps)"
        if self.kind == ARITHMETIC:
            return f"{{{self.start}+{self.step}k}}"
        if self.kind == NATURALS:
            return f"{{{self.offset},{self.offset + 1},...}}"
        return "primes"


def gap_contains(S: GapSet, s: int) -> bool:
    return s in S


def gap_enumerate(S: GapSet, s_max: int) -> list[int]:
    """All elements of ``S`` that are ``<= s_max``, ascending."""
    return [int(v) for v in S.elements_upto(s_max)]


# ---------------------------------------------------------------------------
# words and run profiles


def check_word(w: str) -> str:
    if not isinstance(w, str) or w.strip("01"):
        raise DomainError(f"words are strings over '01', got {w!r}")
    return w


@dataclass(frozen=True)
class RunProfile:
    """Zero-run decomposition of a word.

    For the all-zero word the whole word is the leading run and
    ``trailing == 0``.
    """

    leading: int
    internal_gaps: tuple
    trailing: int
    ones: int

    @property
    def length(self) -> int:
        return self.leading + self.trailing + sum(self.internal_gaps) + self.ones

    @classmethod
    def of(cls, w: str) -> "RunProfile":
        runs = check_word(w).split("1")
        if len(runs) == 1:
            return cls(len(w), (), 0, 0)
        return cls(len(runs[0]), tuple(len(r) for r in runs[1:-1]), len(runs[-1]), len(runs) - 1)

    def to_word(self) -> str:
        if self.ones == 0:
            return "0" * self.leading
        middle = "".join("0" * g + "1" for g in self.internal_gaps)
        return "0" * self.leading + "1" + middle + "0" * self.trailing


def is_allowable(w: str, S: GapSet) -> bool:
    """Membership in the language of X(S).

    Internal gaps must lie in ``S``.  For finite ``S`` the leading run, the
    trailing run and an all-zero word are each bounded by ``max(S)``; for
    infinite ``S`` they are unconstrained.  The empty word is allowable.
    """
    runs = check_word(w).split("1")
    bound = S.max_value
    if len(runs) == 1:
        return bound is None or len(w) <= bound
    if bound is not None and (len(runs[0]) > bound or len(runs[-1]) > bound):
        return False
    return all(len(r) in S for r in runs[1:-1])


def state_after(w: str) -> tuple[bool, int]:
    """Automaton state ``(seen_a_one, zero_run)`` reached after reading ``w``."""
    check_word(w)
    k = w.rfind("1")
    if k < 0:
        return False, len(w)
    return True, len(w) - k - 1


def _walk(n: int, S: GapSet, w0, w1, state=(False, 0)):
    """Total weight of all length-``n`` continuations from ``state``.

    A continuation ``tau`` has weight ``w0**(#0s) * w1**(#1s)``.  With
    ``w0 = w1 = 1`` (ints) this is an exact count.
    """
    bound = S.max_value
    seen, run = state
    member = set(gap_enumerate(S, run + n))
    unit = 1 if isinstance(w0, int) and isinstance(w1, int) else 1.0
    zero = unit * 0
    cur = {(seen, run): unit}
    for _ in range(n):
        nxt = {}
        for (sn, r), wt in cur.items():
            if bound is None or r + 1 <= bound:
                key = (sn, r + 1)
                nxt[key] = nxt.get(key, zero) + wt * w0
            if not sn or r in member:
                key = (True, 0)
                nxt[key] = nxt.get(key, zero) + wt * w1
        cur = nxt
    return sum(cur.values(), zero)


def _check_n(n: int, max_n: int) -> int:
    n = int(n)
    if n < 0:
        raise DomainError("word length must be non-negative")
    if n > max_n:
        raise NumericError(f"n={n} exceeds the configured maximum {max_n}")
    return n


def count_language(n: int, S: GapSet, max_n: int = DEFAULT_MAX_N) -> int:
    """``|L_n(X(S))|`` by dynamic programming (exact integer)."""
    n = _check_n(n, max_n)
    return _walk(n, S, 1, 1)


def count_core(n: int, S: GapSet, max_n: int = DEFAULT_MAX_N) -> int:
    """``|G_n|``, the number of words ``0^{s1}1 ... 0^{sk}1`` of length ``n``.

    Uses the renewal recurrence ``g(m) = sum_{s in S, s+1 <= m} g(m-s-1)``
    with ``g(0) = 1``.
    """
    n = _check_n(n, max_n)
    return core_counts(n, S)[n]


def core_counts(n: int, S: GapSet) -> list[int]:
    """``[|G_0|, |G_1|, ..., |G_n|]``."""
    parts = [s + 1 for s in gap_enumerate(S, n - 1)]
    g = [1] + [0] * n
    for m in range(1, n + 1):
        g[m] = sum(g[m - p] for p in parts if p <= m)
    return g


def enumerate_language(n: int, S: GapSet, cap: int) -> Iterator[str]:
    """Allowable words of length ``n`` in lexicographic order, at most ``cap``."""
    if cap <= 0:
        return
    bound = S.max_value
    member = set(gap_enumerate(S, n))
    emitted = 0
    # every live automaton state has a live successor, so plain DFS never stalls
    stack = [("", False, 0)]
    while stack:
        w, seen, run = stack.pop()
        if len(w) == n:
            yield w
            emitted += 1
            if emitted >= cap:
                return
            continue
        if not seen or run in member:
            stack.append((w + "1", True, 0))
        if bound is None or run + 1 <= bound:
            stack.append((w + "0", seen, run + 1))


def enumerate_core(n: int, S: GapSet) -> Iterator[str]:
    """All words of ``G_n`` (lexicographic order)."""
    gaps = gap_enumerate(S, n - 1)[::-1]

    def rec(remaining):
        if remaining == 0:
            yield ""
            return
        for s in gaps:
            if s + 1 <= remaining:
                head = "0" * s + "1"
                for tail in rec(remaining - s - 1):
                    yield head + tail

    yield from rec(n)


def _gap_pool(n: int, S: GapSet) -> list[int]:
    pool = gap_enumerate(S, n)
    return pool if pool else [S.min_value]


def sample_gap_word(n: int, S: GapSet, rng: np.random.Generator) -> str:
    """Concatenate blocks ``0^s 1`` (``s`` uniform over ``S ∩ [0, n]``) until
    the length reaches ``n``.  The result ends in ``1`` and belongs to G."""
    if n < 0:
        raise DomainError("word length must be non-negative")
    pool = _gap_pool(n, S)
    parts, length = [], 0
    while length < n:
        s = pool[rng.integers(len(pool))]
        parts.append("0" * s + "1")
        length += s + 1
    return "".join(parts)


def sample_word(n: int, S: GapSet, seed: int) -> str:
    """A random allowable word of length ``n``; deterministic in ``seed``."""
    rng = np.random.default_rng(seed)
    w = sample_gap_word(n, S, rng)[:n]
    if not is_allowable(w, S):
        raise DomainError(f"could not build an allowable word of length {n}")
    return w
