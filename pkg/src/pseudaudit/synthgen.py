"""Synthetic forum generator with hidden ground truth.

Randomness comes from one ``numpy`` PCG64 stream per concern, spawned from a
single ``SeedSequence(seed)`` in this order: population, forum.  Draws inside
each stream happen in a fixed documented order (see ``generate``), so a seed
fully determines the dump.
"""

from __future__ import annotations

import csv
import datetime as dt
import io
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from .scheme import (
    ConfigError,
    RangeError,
    Regime,
    SchemeConfig,
    SliceRegime,
    parse_dotted,
    regime_slice_for,
    render_dotted,
    username_for,
)
from .validate import CidrSet, default_bogons

EPOCH = dt.datetime(1970, 1, 1, tzinfo=dt.timezone.utc)
DAY = 86400
DEFAULT_START = dt.date(2015, 3, 2)


@dataclass(frozen=True)
class PopulationModel:
    """Who posts and how much.

    ``activity_law`` is ``"stretched"`` (weight of rank r is
    ``exp(a - b * r**c)`` with ``a`` chosen so the last rank has weight 1) or
    ``"uniform"``.
    """

    n_addresses: int = 300
    activity_law: str = "stretched"
    b: float = 0.9
    c: float = 0.45
    churn_rate: float = 0.0
    bogons: CidrSet | None = None  # None -> shipped list

    def weights(self) -> np.ndarray:
        r = np.arange(1, self.n_addresses + 1, dtype=np.float64)
        if self.activity_law == "uniform":
            return np.ones_like(r)
        if self.activity_law != "stretched":
            raise ConfigError(f"unknown activity law {self.activity_law!r}")
        a = self.b * self.n_addresses**self.c
        return np.exp(a - self.b * r**self.c)


@dataclass(frozen=True)
class ForumConfig:
    days: int = 60
    start: dt.date = DEFAULT_START
    topics_per_day: float = 25 / 3
    posts_per_topic: float = 20.0
    lifetime_days: float = 1.0
    first_topic: int = 1_000_001
    regimes: SliceRegime | None = None  # None -> one regime at slice 9 over the span
    hour_weights: tuple[float, ...] = (1.0,) * 24
    seed: int = 20240101
    scheme: SchemeConfig = field(default_factory=lambda: SchemeConfig(address_space_bits=24, high_octet=172))

    def __post_init__(self):
        if self.days < 0:
            raise ConfigError("days must be non-negative")
        if not (math.isfinite(self.topics_per_day) and self.topics_per_day >= 0):
            raise ConfigError("topics_per_day must be finite and non-negative")
        if not (math.isfinite(self.posts_per_topic) and self.posts_per_topic >= 1):
            raise ConfigError("posts_per_topic must be finite and at least 1")
        if not (math.isfinite(self.lifetime_days) and self.lifetime_days >= 0):
            raise ConfigError("lifetime_days must be finite and non-negative")
        if len(self.hour_weights) != 24 or min(self.hour_weights) < 0 or sum(self.hour_weights) <= 0:
            raise ConfigError("hour_weights needs 24 non-negative entries with positive sum")
        if not 0 <= self.seed < 1 << 64:
            raise ConfigError("seed must be a 64-bit unsigned integer")

    @property
    def end(self) -> dt.date:
        return self.start + dt.timedelta(days=max(self.days, 1) - 1)

    def regime_table(self) -> SliceRegime:
        if self.regimes is not None:
            return self.regimes
        return SliceRegime.single(self.start, self.end, self.scheme.slice_start)


@dataclass(frozen=True, order=True)
class Post:
    post_id: int
    topic: int
    username: str
    timestamp: int

    @property
    def date(self) -> dt.date:
        return dt.date(1970, 1, 1) + dt.timedelta(days=self.timestamp // DAY)


@dataclass
class Forum:
    posts: list[Post]
    truth: dict[int, int]  # post_id -> address
    slices: dict[int, int]  # post_id -> slice actually used
    addresses: np.ndarray  # every address ever active, in activation order


def _sample_addresses(rng: np.random.Generator, n: int, scheme: SchemeConfig, bogons: CidrSet, taken: set) -> list[int]:
    # Uniform over the configured space, rejecting bogons and repeats.
    out: list[int] = []
    base, size = scheme.space_base, scheme.space_size
    tries = 0
    while len(out) < n:
        batch = rng.integers(0, size, size=max(16, 2 * (n - len(out))), dtype=np.int64) + base
        bad = bogons.contains(batch)
        for a, b in zip(batch.tolist(), bad.tolist()):
            if not b and a not in taken:
                taken.add(a)
                out.append(a)
                if len(out) == n:
                    break
        tries += 1
        if tries > 1000:
            raise ConfigError("address space too small for the requested population")
    return out


def generate(population: PopulationModel, forum: ForumConfig) -> Forum:
    """Simulate a forum.

    Draw order.  Population stream: the initial ``n_addresses`` addresses,
    then for each day after the first, one uniform per slot for churn and a
    replacement address for every churned slot.  Forum stream, per day: the
    Poisson topic count; per topic: the Poisson extra-post count; per post:
    the Poisson day offset (none for the opening post), the hour and the
    second within the hour, then, for posts inside the span, the author slot
    (redrawn while its username would collide with a different address
    already posting in that topic).  Cutoff-day posts use the earlier slice
    before 12:00 UTC and the later one after.
    """
    if forum.days == 0:
        return Forum([], {}, {}, np.empty(0, np.uint32))
    if population.n_addresses < 1:
        raise ConfigError("positive posting rate needs at least one address")
    scheme = forum.scheme
    regimes = forum.regime_table()
    if regimes.start > forum.start or regimes.end < forum.end:
        raise ConfigError("regime table does not cover the simulation span")
    bogons = population.bogons if population.bogons is not None else default_bogons()
    pop_rng, forum_rng = (np.random.Generator(np.random.PCG64(s)) for s in np.random.SeedSequence(forum.seed).spawn(2))

    taken: set[int] = set()
    slots = _sample_addresses(pop_rng, population.n_addresses, scheme, bogons, taken)
    activated = list(slots)
    roster = [list(slots)]  # roster[d][slot] -> address on day d
    for _ in range(1, forum.days):
        cur = list(roster[-1])
        if population.churn_rate > 0:
            churn = pop_rng.random(len(cur)) < population.churn_rate
            for i in np.flatnonzero(churn).tolist():
                (cur[i],) = _sample_addresses(pop_rng, 1, scheme, bogons, taken)
                activated.append(cur[i])
        roster.append(cur)

    w = population.weights()
    if not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise ConfigError("activity weights must be positive and finite")
    cdf = np.cumsum(w / w.sum())
    hours = np.asarray(forum.hour_weights, np.float64)
    hours = hours / hours.sum()
    start_ts = int((dt.datetime.combine(forum.start, dt.time(), dt.timezone.utc) - EPOCH).total_seconds())

    raw = []  # (timestamp, seq, topic, username, address, slice)
    topic = forum.first_topic
    seq = 0
    for day in range(forum.days):
        for _ in range(int(forum_rng.poisson(forum.topics_per_day))):
            n_posts = 1 + int(forum_rng.poisson(forum.posts_per_topic - 1))
            names: dict[tuple[int, str], int] = {}
            for i in range(n_posts):
                offset = 0 if i == 0 else int(forum_rng.poisson(forum.lifetime_days))
                hour = int(forum_rng.choice(24, p=hours))
                sec = int(forum_rng.integers(0, 3600))
                pday = day + offset
                if pday >= forum.days:
                    continue  # past the span: dropped before the author draw
                ts = start_ts + pday * DAY + hour * 3600 + sec
                date = forum.start + dt.timedelta(days=pday)
                allowed = regime_slice_for(date, regimes)
                s = allowed[0] if len(allowed) > 1 and hour < 12 else allowed[-1]
                for _attempt in range(1000):
                    slot = int(np.searchsorted(cdf, forum_rng.random(), side="right"))
                    addr = roster[pday][min(slot, len(cdf) - 1)]
                    u = username_for(topic, addr, scheme.with_slice(s))
                    owner = names.setdefault((s, u), addr)
                    if owner == addr:
                        break
                else:
                    raise ConfigError("could not draw a collision-free author")
                raw.append((ts, seq, topic, u, addr, s))
                seq += 1
            topic += 1
    raw.sort()
    posts, truth, slices = [], {}, {}
    for pid, (ts, _, t, u, addr, s) in enumerate(raw, 1):
        posts.append(Post(pid, t, u, ts))
        truth[pid] = addr
        slices[pid] = s
    return Forum(posts, truth, slices, np.array(activated, np.uint32))


def inject_regime_switch(forum: ForumConfig, switch_date: dt.date | int) -> ForumConfig:
    """Split the regime table at ``switch_date``; the earlier part uses one slice less.

    An integer is read as a day offset from the forum start.
    """
    if isinstance(switch_date, int):
        switch_date = forum.start + dt.timedelta(days=switch_date)
    table = forum.regime_table()
    if not table.start <= switch_date <= table.end:
        raise RangeError(f"switch date {switch_date} outside {table.start}..{table.end}")
    regimes = []
    for r in table.regimes:
        if r.end < switch_date:
            regimes.append(Regime(r.start, r.end, r.slice_start - 1))
        elif r.start >= switch_date:
            regimes.append(r)
        else:
            regimes.append(Regime(r.start, switch_date - dt.timedelta(days=1), r.slice_start - 1))
            regimes.append(Regime(switch_date, r.end, r.slice_start))
    for r in regimes:
        if r.slice_start < 0:
            raise ConfigError("switch would move the slice before the digest start")
    return replace(forum, regimes=SliceRegime(tuple(regimes)))


# --------------------------------------------------------------------------
# files


def format_timestamp(ts: int) -> str:
    return str(int(ts))


def write_dump(posts: Sequence[Post], path: str | Path, header: Sequence[str] = ()) -> None:
    buf = io.StringIO()
    for line in header:
        buf.write(f"# {line}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["post_id", "topic_id", "username", "timestamp"])
    for p in posts:
        w.writerow([p.post_id, p.topic, p.username, p.timestamp])
    Path(path).write_text(buf.getvalue())


def write_truth(truth: dict[int, int], path: str | Path, header: Sequence[str] = ()) -> None:
    buf = io.StringIO()
    for line in header:
        buf.write(f"# {line}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["post_id", "address"])
    for pid in sorted(truth):
        w.writerow([pid, render_dotted(truth[pid])])
    Path(path).write_text(buf.getvalue())


def _data_lines(path: str | Path):
    with open(path, newline="") as fh:
        yield from csv.DictReader(line for line in fh if not line.startswith("#"))


def read_dump(path: str | Path) -> list[Post]:
    posts = [
        Post(int(r["post_id"]), int(r["topic_id"]), r["username"], int(r["timestamp"])) for r in _data_lines(path)
    ]
    return posts


def read_truth(path: str | Path) -> dict[int, int]:
    return {int(r["post_id"]): parse_dotted(r["address"]) for r in _data_lines(path)}
