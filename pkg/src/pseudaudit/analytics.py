"""Descriptive analytics over attributed posts.

Concentration shares, the rank-ordered stretched exponential
``log y(r) = a - b * r**c`` with population extrapolation, CIDR label
aggregation and time-of-day profiles.
"""

from __future__ import annotations

import csv
import datetime as dt
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .validate import CidrRange, ParseError

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
C_MIN = 1e-6
UNLABELED = "unlabeled"


class UsageError(ValueError):
    pass


class InvalidFit(ValueError):
    pass


def rank_counts(values: Iterable) -> np.ndarray:
    """Posts per distinct value, sorted descending (rank 1 first)."""
    return np.array(sorted(Counter(values).values(), reverse=True), np.int64)


def concentration(counts: Sequence[float], f: float | Fraction) -> Fraction | float:
    """Share of all posts made by the top ``ceil(f * n)`` addresses.

    Integer counts give an exact ``Fraction``.
    """
    if len(counts) == 0:
        raise UsageError("empty counts")
    f = Fraction(f).limit_denominator(10**9) if not isinstance(f, Fraction) else f
    if not 0 < f <= 1:
        raise UsageError("f must be in (0, 1]")
    arr = sorted(counts, reverse=True)
    top = math.ceil(f * len(arr))
    if all(float(x).is_integer() for x in arr):
        return Fraction(int(sum(arr[:top])), int(sum(arr)))
    return float(sum(arr[:top]) / sum(arr))


# --------------------------------------------------------------------------
# stretched exponential


@dataclass(frozen=True)
class StretchedExpFit:
    a: float
    b: float
    c: float
    R: int
    rss: float

    def log_predict(self, r) -> np.ndarray:
        return self.a - self.b * np.asarray(r, np.float64) ** self.c

    def predict(self, r) -> np.ndarray:
        return np.exp(self.log_predict(r))


def _regress(x: np.ndarray, y: np.ndarray) -> tuple[float, float, float]:
    # least squares y ~ a - b x; returns a, b, rss
    xm, ym = x.mean(), y.mean()
    dx = x - xm
    sxx = float(dx @ dx)
    slope = float(dx @ (y - ym)) / sxx if sxx > 0 else 0.0
    a = ym - slope * xm
    res = y - (a + slope * x)
    return float(a), -slope, float(res @ res)


def _golden(fn, lo: float, hi: float, tol: float) -> float:
    c = hi - INV_PHI * (hi - lo)
    d = lo + INV_PHI * (hi - lo)
    fc, fd = fn(c), fn(d)
    while hi - lo > tol:
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - INV_PHI * (hi - lo)
            fc = fn(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + INV_PHI * (hi - lo)
            fd = fn(d)
    return (lo + hi) / 2


def fit_stretched_exponential(counts: Sequence[float], R: int | None = None, tol: float = 1e-13) -> StretchedExpFit:
    """Least-squares fit of ``log count = a - b * r**c`` over ranks 1..R.

    ``c`` is profiled: a coarse grid over (0, 1] locates the basin, then a
    golden-section search refines it; ``a`` and ``b`` come from the closed-form
    regression at each ``c``.
    """
    y = np.asarray(counts, np.float64)
    R = y.size if R is None else R
    if R < 3:
        raise UsageError("need at least three ranks")
    if R > y.size:
        raise UsageError("R exceeds the number of counts")
    y = y[:R]
    if np.any(y <= 0):
        raise UsageError("counts must be positive")
    if np.any(np.diff(y) > 0):
        raise UsageError("counts must be sorted descending")
    ly = np.log(y)
    logr = np.log(np.arange(1, R + 1, dtype=np.float64))

    def rss(c: float) -> float:
        return _regress(np.exp(c * logr), ly)[2]

    grid = np.linspace(C_MIN, 1.0, 201)
    vals = [rss(c) for c in grid]
    i = int(np.argmin(vals))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, grid.size - 1)]
    c = _golden(rss, lo, hi, tol)
    a, b, r = _regress(np.exp(c * logr), ly)
    return StretchedExpFit(a, b, float(c), R, r)


def extrapolate_population(fit: StretchedExpFit) -> tuple[int, float]:
    """Largest rank whose predicted count is at least 1, and the predicted total.

    Solves ``a - b * r**c = 0``; the float estimate is then nudged so the
    returned rank satisfies the inequality exactly as evaluated.
    """
    if not fit.b > 0 or not 0 < fit.c <= 1:
        raise InvalidFit("fit needs b > 0 and 0 < c <= 1")
    if fit.a < fit.b:
        return 0, 0.0
    n = max(1, int(math.floor((fit.a / fit.b) ** (1.0 / fit.c))))
    while fit.a - fit.b * (n + 1) ** fit.c >= 0:
        n += 1
    while n > 1 and fit.a - fit.b * n**fit.c < 0:
        n -= 1
    total = float(fit.predict(np.arange(1, n + 1)).sum())
    return n, total


# --------------------------------------------------------------------------
# labels


class LabelTable:
    """CIDR ranges with labels, flattened to disjoint intervals.

    Each interval carries the label of the longest prefix covering it.
    """

    def __init__(self, entries: Sequence[tuple[CidrRange, str]]):
        seen: dict[CidrRange, str] = {}
        for rng, label in entries:
            if rng in seen and seen[rng] != label:
                raise ParseError(f"conflicting labels for {rng}")
            seen[rng] = label
        self.entries = sorted(seen.items())
        cuts = sorted({r.first for r in seen} | {r.last + 1 for r in seen})
        starts, labels = [], []
        for lo, hi in zip(cuts, cuts[1:]):
            best = None
            for r, lab in seen.items():
                if r.first <= lo and hi - 1 <= r.last and (best is None or r.prefix > best[0]):
                    best = (r.prefix, lab)
            lab = best[1] if best else None
            if labels and labels[-1] == lab:
                continue
            starts.append(lo)
            labels.append(lab)
        if labels and labels[-1] is not None:
            starts.append(cuts[-1])
            labels.append(None)
        self._starts = np.array(starts, np.int64)
        self._labels = labels

    @classmethod
    def parse(cls, lines: Iterable[str], source: str = "<labels>") -> "LabelTable":
        rows = []
        data = [l for l in lines if l.strip() and not l.lstrip().startswith("#")]
        for lineno, r in enumerate(csv.DictReader(data), 2):
            try:
                rows.append((CidrRange.parse(r["cidr"]), r["label"].strip()))
            except (ValueError, KeyError, AttributeError) as exc:
                raise ParseError(f"{source}:{lineno}: {exc}") from None
        return cls(rows)

    @classmethod
    def load(cls, path: str | Path) -> "LabelTable":
        with open(path, newline="") as fh:
            return cls.parse(fh, str(path))

    def intervals(self) -> list[tuple[int, str | None]]:
        return list(zip(self._starts.tolist(), self._labels))

    def lookup(self, addresses) -> list[str]:
        a = np.asarray(addresses, np.int64)
        if not self._labels:
            return [UNLABELED] * a.size
        i = np.searchsorted(self._starts, a, side="right") - 1
        return [UNLABELED if k < 0 or self._labels[k] is None else self._labels[k] for k in i.tolist()]


def label_aggregate(addresses: Iterable[int], labels: LabelTable) -> dict[str, tuple[int, float]]:
    """Per-label post counts and shares, one entry per assigned post's address."""
    addrs = list(addresses)
    counts = Counter(labels.lookup(addrs))
    total = len(addrs)
    return {k: (v, v / total) for k, v in sorted(counts.items())}


# --------------------------------------------------------------------------
# time of day


def time_profile(
    timestamps: Iterable[int], bucket_minutes: int = 60, tz_offset_minutes: int = 0
) -> dict[int, np.ndarray]:
    """Average posts per minute in each time-of-day bucket, per local year.

    Buckets and years use local time (UTC plus the offset).  The divisor for
    a year is ``bucket_minutes`` times the number of days of the observed UTC
    span (first to last post date) falling in that year, so changing the
    offset only rotates the buckets.
    """
    if bucket_minutes <= 0 or 1440 % bucket_minutes:
        raise UsageError("bucket_minutes must divide 1440")
    ts = np.fromiter((int(t) for t in timestamps), np.int64)
    if ts.size == 0:
        return {}
    nb = 1440 // bucket_minutes
    local = ts + 60 * tz_offset_minutes
    minute = (local // 60) % 1440
    bucket = minute // bucket_minutes
    epoch = dt.date(1970, 1, 1)
    years = np.array([(epoch + dt.timedelta(days=int(d))).year for d in (local // 86400).tolist()])
    first = epoch + dt.timedelta(days=int(ts.min() // 86400))
    last = epoch + dt.timedelta(days=int(ts.max() // 86400))
    out = {}
    for y in sorted(set(years.tolist())):
        lo = max(first, dt.date(y, 1, 1))
        hi = min(last, dt.date(y, 12, 31))
        days = max((hi - lo).days + 1, 1)
        counts = np.bincount(bucket[years == y], minlength=nb).astype(np.float64)
        out[y] = counts / (bucket_minutes * days)
    return out
