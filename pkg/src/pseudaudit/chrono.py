"""Timestamp recovery by linear interpolation over auto-incrementing post ids."""

from __future__ import annotations

import csv
import datetime as dt
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class AnchorSet:
    """Posts with exact timestamps, strictly increasing in id and time."""

    post_ids: np.ndarray
    timestamps: np.ndarray

    def __post_init__(self):
        ids = np.asarray(self.post_ids, np.int64)
        ts = np.asarray(self.timestamps, np.float64)
        if ids.shape != ts.shape or ids.ndim != 1:
            raise ValueError("post_ids and timestamps must be 1-d and equally long")
        if ids.size > 1 and (np.any(np.diff(ids) <= 0) or np.any(np.diff(ts) <= 0)):
            raise ValueError("anchors must be strictly increasing in post id and timestamp")
        object.__setattr__(self, "post_ids", ids)
        object.__setattr__(self, "timestamps", ts)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, float]]) -> "AnchorSet":
        pairs = sorted(pairs)
        return cls(np.array([p for p, _ in pairs], np.int64), np.array([t for _, t in pairs], np.float64))

    def __len__(self) -> int:
        return int(self.post_ids.size)


def interpolate(anchors: AnchorSet, post_ids) -> np.ndarray | float:
    """Timestamps for ``post_ids`` by linear interpolation between bracketing anchors.

    Outside the anchor range the line through the two nearest anchors is
    extended; with a single anchor every post gets its timestamp.  Since the
    anchors increase strictly, extrapolation keeps the result monotone.
    """
    if len(anchors) == 0:
        raise UsageError("need at least one anchor")
    scalar = np.ndim(post_ids) == 0
    x = np.atleast_1d(np.asarray(post_ids, np.float64))
    ids = anchors.post_ids.astype(np.float64)
    ts = anchors.timestamps
    if ids.size == 1:
        out = np.full(x.shape, ts[0])
    else:
        out = np.interp(x, ids, ts)
        lo, hi = x < ids[0], x > ids[-1]
        if lo.any():
            slope = (ts[1] - ts[0]) / (ids[1] - ids[0])
            out[lo] = np.minimum(ts[0] + slope * (x[lo] - ids[0]), ts[0])
        if hi.any():
            slope = (ts[-1] - ts[-2]) / (ids[-1] - ids[-2])
            out[hi] = np.maximum(ts[-1] + slope * (x[hi] - ids[-1]), ts[-1])
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class GapStats:
    n: int
    mean: float
    p95: float
    p99: float


def gap_stats(anchors: AnchorSet, post_ids: Iterable[int]) -> GapStats:
    """Time gaps of the anchor pairs that bracket at least one unanchored post.

    Each bracketing pair counts once.  Posts outside the anchor range have no
    bracket and are ignored.  Quantiles are order statistics
    (inverted-CDF), so they are exact sample values.
    """
    ids = anchors.post_ids
    x = np.unique(np.fromiter((int(p) for p in post_ids), np.int64))
    if ids.size < 2 or x.size == 0:
        return GapStats(0, 0.0, 0.0, 0.0)
    x = x[(x > ids[0]) & (x < ids[-1])]
    x = x[~np.isin(x, ids)]
    if x.size == 0:
        return GapStats(0, 0.0, 0.0, 0.0)
    right = np.unique(np.searchsorted(ids, x, side="right"))
    gaps = anchors.timestamps[right] - anchors.timestamps[right - 1]
    return GapStats(
        int(gaps.size),
        float(gaps.mean()),
        float(np.quantile(gaps, 0.95, method="inverted_cdf")),
        float(np.quantile(gaps, 0.99, method="inverted_cdf")),
    )


def _parse_iso(text: str) -> float:
    ts = dt.datetime.fromisoformat(text.strip().replace("Z", "+00:00"))
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=dt.timezone.utc)
    return ts.timestamp()


def format_iso(ts: float) -> str:
    return dt.datetime.fromtimestamp(ts, dt.timezone.utc).isoformat().replace("+00:00", "Z")


def read_anchors(path: str | Path) -> AnchorSet:
    with open(path, newline="") as fh:
        rows = csv.DictReader(line for line in fh if not line.startswith("#"))
        return AnchorSet.from_pairs((int(r["post_id"]), _parse_iso(r["timestamp_iso8601"])) for r in rows)


def write_anchors(anchors: AnchorSet, path: str | Path, header: Sequence[str] = ()) -> None:
    with open(path, "w", newline="") as fh:
        for line in header:
            fh.write(f"# {line}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["post_id", "timestamp_iso8601"])
        for pid, ts in zip(anchors.post_ids.tolist(), anchors.timestamps.tolist()):
            w.writerow([pid, format_iso(ts)])
