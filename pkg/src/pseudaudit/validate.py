"""Falsification checks and ground-truth scoring.

Bogon containment, Pearson chi-squared uniformity of username histograms,
and precision/recall of an assignment run against synthetic ground truth.
"""

from __future__ import annotations

import datetime as dt
import ipaddress
import json
import math
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy.special import gammaincc
from scipy.stats import chi2

HEAVY_TOPICS = 12
HEAVY_SPAN_DAYS = 7


class ParseError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class DataError(KeyError):
    pass


@dataclass(frozen=True, order=True)
class CidrRange:
    base: int
    prefix: int

    def __post_init__(self):
        if not 0 <= self.prefix <= 32:
            raise ValueError(f"prefix length {self.prefix} outside [0, 32]")
        if not 0 <= self.base < 1 << 32:
            raise ValueError(f"base {self.base} outside the address space")
        if self.base & ((1 << (32 - self.prefix)) - 1):
            raise ValueError(f"base has bits set below /{self.prefix}")

    @classmethod
    def parse(cls, text: str) -> "CidrRange":
        net = ipaddress.IPv4Network(text.strip(), strict=True)
        return cls(int(net.network_address), net.prefixlen)

    @property
    def first(self) -> int:
        return self.base

    @property
    def last(self) -> int:
        return self.base + (1 << (32 - self.prefix)) - 1

    @property
    def size(self) -> int:
        return 1 << (32 - self.prefix)

    def __contains__(self, address: int) -> bool:
        return self.first <= address <= self.last

    def __str__(self) -> str:
        return f"{ipaddress.IPv4Address(self.base)}/{self.prefix}"


def parse_cidr_lines(lines: Iterable[str], source: str = "<input>") -> list[CidrRange]:
    out = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(CidrRange.parse(line))
        except ValueError as exc:
            raise ParseError(f"{source}:{lineno}: bad CIDR {line!r} ({exc})") from None
    return out


class CidrSet:
    """Union of CIDR ranges with vectorized membership by interval search."""

    def __init__(self, ranges: Sequence[CidrRange]):
        self.ranges = sorted(ranges)
        merged: list[list[int]] = []
        for r in self.ranges:
            if merged and r.first <= merged[-1][1] + 1:
                merged[-1][1] = max(merged[-1][1], r.last)
            else:
                merged.append([r.first, r.last])
        self.starts = np.array([m[0] for m in merged], np.int64)
        self.ends = np.array([m[1] for m in merged], np.int64)

    def __len__(self) -> int:
        return len(self.ranges)

    @property
    def coverage(self) -> int:
        """Number of addresses covered."""
        return int((self.ends - self.starts + 1).sum())

    def contains(self, addresses) -> np.ndarray:
        a = np.asarray(addresses, np.int64)
        i = np.searchsorted(self.starts, a, side="right") - 1
        ok = i >= 0
        out = np.zeros(a.shape, bool)
        out[ok] = a[ok] <= self.ends[i[ok]]
        return out

    def __contains__(self, address: int) -> bool:
        return bool(self.contains([address])[0])


def load_cidr_file(path: str | Path) -> CidrSet:
    with open(path) as fh:
        return CidrSet(parse_cidr_lines(fh, str(path)))


def default_bogons() -> CidrSet:
    text = resources.files("pseudaudit").joinpath("data/bogons.txt").read_text()
    return CidrSet(parse_cidr_lines(text.splitlines(), "bogons.txt"))


def bogon_check(addresses: Iterable[int], bogons: CidrSet | None = None) -> int:
    """Number of assigned addresses that fall inside a bogon range."""
    bogons = bogons if bogons is not None else default_bogons()
    a = np.fromiter((int(x) for x in addresses), np.int64)
    return int(bogons.contains(a).sum())


# --------------------------------------------------------------------------
# uniformity


@dataclass(frozen=True)
class Chi2Result:
    statistic: float
    dof: int
    p_value: float
    log_p: float

    def rejects(self, alpha: float = 0.01) -> bool:
        return self.log_p < math.log(alpha)


def uniformity_chi2(hist) -> Chi2Result:
    """Pearson chi-squared test of a histogram against the uniform law.

    Requires an expected count of at least 5 per cell.  The log p-value is
    taken from the chi-squared log survival so extreme statistics stay finite.
    """
    h = np.asarray(hist, np.float64)
    cells = h.size
    total = h.sum()
    if cells < 2:
        raise PreconditionError("need at least two cells")
    expected = total / cells
    if expected < 5:
        raise PreconditionError(f"expected count per cell {expected:.3g} < 5")
    stat = float(((h - expected) ** 2).sum() / expected)
    dof = cells - 1
    p = float(gammaincc(dof / 2.0, stat / 2.0))
    log_p = float(chi2.logsf(stat, dof))
    if not math.isfinite(log_p):
        log_p = _log_gammaincc_cf(dof / 2.0, stat / 2.0)
    return Chi2Result(stat, dof, p, log_p)


def _log_gammaincc_cf(a: float, x: float) -> float:
    # log Q(a, x) via the Lentz continued fraction; valid for x > a + 1,
    # which is the only regime where the double-precision sf underflows.
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10_000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        d = tiny if abs(d) < tiny else d
        c = b + an / c
        c = tiny if abs(c) < tiny else c
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-15:
            break
    return -x + a * math.log(x) - math.lgamma(a) + math.log(h)


# --------------------------------------------------------------------------
# scoring


@dataclass(frozen=True)
class ScoreReport:
    posts: int
    assigned: int
    correct: int
    precision: float | None
    recall: float
    heavy_posts: int
    heavy_correct: int
    heavy_recall: float | None
    stolen: int
    stealing_rate: float | None
    heavy_addresses: int

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=1, sort_keys=True)


def heavy_addresses(
    post_address: Mapping[int, int],
    post_topic: Mapping[int, int],
    post_day: Mapping[int, dt.date],
    min_topics: int = HEAVY_TOPICS,
    span_days: int = HEAVY_SPAN_DAYS,
) -> set[int]:
    """Addresses with at least ``min_topics`` distinct topics within some
    window of ``span_days`` consecutive days."""
    by_addr: dict[int, list[tuple[int, int]]] = {}
    for pid, addr in post_address.items():
        by_addr.setdefault(addr, []).append((post_day[pid].toordinal(), post_topic[pid]))
    heavy = set()
    for addr, items in by_addr.items():
        if len({t for _, t in items}) < min_topics:
            continue
        items.sort()
        # sliding window over days; a topic's count is its number of posts inside
        seen: dict[int, int] = {}
        j = 0
        for day, topic in items:
            seen[topic] = seen.get(topic, 0) + 1
            while items[j][0] <= day - span_days:
                t = items[j][1]
                seen[t] -= 1
                if not seen[t]:
                    del seen[t]
                j += 1
            if len(seen) >= min_topics:
                heavy.add(addr)
                break
    return heavy


def score(
    assignments: Mapping[int, int],
    truth: Mapping[int, int],
    post_topic: Mapping[int, int] | None = None,
    post_day: Mapping[int, dt.date] | None = None,
) -> ScoreReport:
    """Score ``post_id -> address`` assignments against ground truth.

    Heavy-poster recall needs topics and dates for every post; without them
    it is reported as absent.
    """
    correct = stolen = 0
    active = set(truth.values())
    for pid, addr in assignments.items():
        if pid not in truth:
            raise DataError(f"post {pid} has no ground truth")
        if truth[pid] == addr:
            correct += 1
        elif addr in active:
            stolen += 1
    n, k = len(truth), len(assignments)
    heavy_posts = heavy_correct = 0
    heavy: set[int] = set()
    heavy_recall = None
    if post_topic is not None and post_day is not None:
        heavy = heavy_addresses(truth, post_topic, post_day)
        for pid, addr in truth.items():
            if addr in heavy:
                heavy_posts += 1
                heavy_correct += assignments.get(pid) == addr
        heavy_recall = heavy_correct / heavy_posts if heavy_posts else None
    return ScoreReport(
        posts=n,
        assigned=k,
        correct=correct,
        precision=correct / k if k else None,
        recall=correct / n if n else 0.0,
        heavy_posts=heavy_posts,
        heavy_correct=heavy_correct,
        heavy_recall=heavy_recall,
        stolen=stolen,
        stealing_rate=stolen / k if k else None,
        heavy_addresses=len(heavy),
    )
