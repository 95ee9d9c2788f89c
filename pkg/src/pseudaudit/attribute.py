"""Windowed attribution of posts to addresses.

For a target day and a window of 7, 31 or 91 days centred on it, every
address is counted once per topic whose candidate sets (for the usernames
seen in the window) contain it.  Each target-day post goes to the candidate
with the smallest null survival probability, provided it beats the window's
calibrated threshold.
"""

from __future__ import annotations

import csv
import datetime as dt
import io
import json
import math
import threading
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .enumeration import CandidateStore
from .pbnull import NullTable, default_c_max, pmf_from_probs
from .scheme import SchemeConfig, SliceRegime, regime_slice_for, render_dotted, parse_dotted
from .synthgen import Post

WINDOW_HALF = {7: 3, 31: 15, 91: 45}
WINDOW_KINDS = (7, 31, 91)
DENSE_MAX_BITS = 26
LN10 = math.log(10.0)


class CalibrationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Window:
    kind: int
    target: dt.date

    def __post_init__(self):
        if self.kind not in WINDOW_HALF:
            raise ValueError(f"window kind must be one of {WINDOW_KINDS}")

    @property
    def half(self) -> int:
        return WINDOW_HALF[self.kind]

    @property
    def first(self) -> dt.date:
        return self.target - dt.timedelta(days=self.half)

    @property
    def last(self) -> dt.date:
        return self.target + dt.timedelta(days=self.half)

    def __contains__(self, day: dt.date) -> bool:
        return self.first <= day <= self.last


@dataclass(frozen=True)
class Thresholds:
    """Per-window log-probability cutoffs; a post is assigned iff log p < cutoff."""

    log_p7: float
    log_p31: float
    log_p91: float

    def __post_init__(self):
        for k in WINDOW_KINDS:
            v = self.log(k)
            if math.isnan(v) or v > 0 or v == -math.inf:
                raise ValueError(f"threshold for {k}-day window must be in (0, 1], got log {v}")

    def log(self, kind: int) -> float:
        return {7: self.log_p7, 31: self.log_p31, 91: self.log_p91}[kind]

    @property
    def p7(self) -> float:
        return math.exp(self.log_p7)

    @property
    def p31(self) -> float:
        return math.exp(self.log_p31)

    @property
    def p91(self) -> float:
        return math.exp(self.log_p91)

    @classmethod
    def from_p(cls, p7: float, p31: float, p91: float) -> "Thresholds":
        return cls(*(math.log(p) if p > 0 else math.nan for p in (p7, p31, p91)))


@dataclass(frozen=True, order=True)
class AssignmentRecord:
    post_id: int
    address: int
    log_p: float  # natural log
    window: int
    slice_start: int

    @property
    def log10_p(self) -> float:
        return self.log_p / LN10


@dataclass(frozen=True)
class Scored:
    """Best candidate of one target-day post in one window."""

    post_id: int
    address: int
    log_p: float
    slice_start: int
    n_candidates: int = 0
    # the window's log survival table, shared by every post of that window
    log_sf: np.ndarray | None = field(default=None, compare=False, repr=False)


# --------------------------------------------------------------------------
# post index


class PostIndex:
    """Posts grouped by UTC day, with the slice(s) each post may carry."""

    def __init__(self, posts: Sequence[Post], regimes: SliceRegime | None = None, position: int | None = None):
        if (regimes is None) == (position is None):
            raise ValueError("give exactly one of regimes or a fixed position")
        self.posts = sorted(posts)
        self.by_day: dict[dt.date, list[Post]] = defaultdict(list)
        for p in self.posts:
            self.by_day[p.date].append(p)
        self.days = sorted(self.by_day)
        self.position = position
        self.regimes = regimes
        self._allowed: dict[dt.date, tuple[int, ...]] = {}

    def allowed(self, day: dt.date) -> tuple[int, ...]:
        if self.position is not None:
            return (self.position,)
        if day not in self._allowed:
            self._allowed[day] = regime_slice_for(day, self.regimes)
        return self._allowed[day]

    def cutoff(self, day: dt.date) -> bool:
        return len(self.allowed(day)) > 1

    def in_span(self, first: dt.date, last: dt.date) -> Iterable[Post]:
        for d in self.days:
            if first <= d <= last:
                yield from self.by_day[d]

    def slices_needed(self) -> list[int]:
        return sorted({s for d in self.days for s in self.allowed(d)})


# --------------------------------------------------------------------------
# counting


class CountTable:
    """Per-address topic counts for one window, dense or sparse."""

    def __init__(self, base: int, dense: np.ndarray | None, keys: np.ndarray | None, vals: np.ndarray | None,
                 probs: list[float], max_count: int):
        self.base = base
        self._dense = dense
        self._keys = keys
        self._vals = vals
        self.probs = probs  # per-topic match probability
        self.max_count = max_count

    @property
    def n_topics(self) -> int:
        return len(self.probs)

    def lookup(self, addresses: np.ndarray) -> np.ndarray:
        if self._dense is not None:
            return self._dense[addresses.astype(np.int64) - self.base].astype(np.int64)
        if not self._keys.size:
            return np.zeros(addresses.shape, np.int64)
        i = np.minimum(np.searchsorted(self._keys, addresses), self._keys.size - 1)
        return np.where(self._keys[i] == addresses, self._vals[i], 0).astype(np.int64)

    def __getitem__(self, address: int) -> int:
        return int(self.lookup(np.array([address], np.uint32))[0])

    def as_dict(self) -> dict[int, int]:
        if self._dense is not None:
            nz = np.flatnonzero(self._dense)
            return {int(a) + self.base: int(self._dense[a]) for a in nz}
        return {int(a): int(v) for a, v in zip(self._keys, self._vals)}


_local = threading.local()


def _dense_buffer(bits: int) -> np.ndarray:
    buf = getattr(_local, "buf", None)
    if buf is None or buf.size != 1 << bits:
        buf = np.zeros(1 << bits, np.int32)
        _local.buf = buf
    return buf


def count_window(
    entries: Iterable[tuple[int, int, str]],
    store: CandidateStore,
    scheme: SchemeConfig,
    detach: bool = True,
) -> CountTable:
    """Count addresses over the candidate sets of ``(topic, slice, username)`` entries.

    Entries are deduplicated; an address is counted at most once per topic
    even when the topic carries usernames at two slice positions.  Raises
    ``MissingCandidates`` when the store lacks a needed file.
    """
    per_topic: dict[int, dict[int, set[str]]] = defaultdict(lambda: defaultdict(set))
    for topic, s, u in entries:
        per_topic[topic][s].add(u)
    space = 1 << scheme.username_bits
    probs: list[float] = []
    arrays: list[np.ndarray] = []
    for topic in sorted(per_topic):
        by_slice = per_topic[topic]
        parts = [store.candidates(topic, s, u) for s in sorted(by_slice) for u in sorted(by_slice[s])]
        if len(by_slice) == 1:
            (k,) = (len(v) for v in by_slice.values())
            probs.append(k / space)
            union = np.concatenate(parts) if len(parts) > 1 else parts[0]
        else:
            miss = 1.0
            for v in by_slice.values():
                miss *= 1.0 - len(v) / space
            probs.append(1.0 - miss)
            union = np.unique(np.concatenate(parts))
        arrays.append(union)
    base = scheme.space_base
    if scheme.address_space_bits <= DENSE_MAX_BITS:
        buf = _dense_buffer(scheme.address_space_bits)
        touched = []
        for arr in arrays:
            idx = arr.astype(np.int64) - base
            buf[idx] += 1  # unique within a topic, so fancy increment is exact
            touched.append(idx)
        max_count = int(max((buf[i].max() for i in touched if i.size), default=0))
        if detach:
            allidx = np.unique(np.concatenate(touched)) if touched else np.empty(0, np.int64)
            keys = (allidx + base).astype(np.uint32)
            vals = buf[allidx].astype(np.int32)
            for i in touched:
                buf[i] = 0
            return CountTable(base, None, keys, vals, probs, max_count)
        table = CountTable(base, buf, None, None, probs, max_count)
        table._touched = touched  # type: ignore[attr-defined]
        return table
    if arrays:
        keys, vals = np.unique(np.concatenate(arrays), return_counts=True)
    else:
        keys, vals = np.empty(0, np.uint32), np.empty(0, np.int64)
    return CountTable(base, None, keys.astype(np.uint32), vals, probs, int(vals.max(initial=0)))


def _release(table: CountTable) -> None:
    touched = getattr(table, "_touched", None)
    if touched is not None and table._dense is not None:
        for i in touched:
            table._dense[i] = 0
        table._touched = None  # type: ignore[attr-defined]


def null_for(table: CountTable, window: str = "") -> NullTable:
    c_max = default_c_max(table.max_count, max(1, table.n_topics))
    return pmf_from_probs(table.probs, c_max, grouped=True, window=window)


def best_candidate(cands: np.ndarray, table: CountTable, null: NullTable) -> tuple[int, float]:
    """Candidate with the smallest log survival; ties go to the smallest address."""
    counts = table.lookup(cands)
    sf = null.log_sf
    logp = sf[np.minimum(counts, sf.size - 1)]
    i = int(np.argmin(logp))  # first minimum; candidates are sorted ascending
    return int(cands[i]), float(logp[i])


def assign_day(
    window: Window,
    table: CountTable,
    null: NullTable,
    threshold: float,
    posts: Sequence[Post],
    store: CandidateStore,
    slice_start: int,
) -> list[AssignmentRecord]:
    """Records for target-day ``posts`` whose best log p beats ``threshold`` (a log value)."""
    out = []
    for p in posts:
        addr, logp = best_candidate(store.candidates(p.topic, slice_start, p.username), table, null)
        if logp < threshold:
            out.append(AssignmentRecord(p.post_id, addr, logp, window.kind, slice_start))
    return out


# --------------------------------------------------------------------------
# per-window evaluation


def _entries(posts: Iterable[Post], index: PostIndex, cutoff_slice: int | None) -> set[tuple[int, int, str]]:
    out = set()
    for p in posts:
        allowed = index.allowed(p.date)
        s = allowed[-1] if len(allowed) == 1 else (cutoff_slice if cutoff_slice is not None else allowed[-1])
        out.add((p.topic, s, p.username))
    return out


def evaluate_window(
    window: Window,
    index: PostIndex,
    store: CandidateStore,
    scheme: SchemeConfig,
    targets: Sequence[Post] | None = None,
) -> list[Scored]:
    """Best candidate and log p for each target-day post (all of them by default).

    Cutoff-day posts elsewhere in the window are counted at the later
    slice.  When the target day is itself a cutoff date, the window is
    evaluated once per allowed slice and each post keeps its lower p.
    """
    day = window.target
    if targets is None:
        targets = index.by_day.get(day, [])
    if not targets:
        return []
    span = list(index.in_span(window.first, window.last))
    best: dict[int, Scored] = {}
    variants = index.allowed(day) if index.cutoff(day) else (None,)
    for variant in variants:
        s_target = variant if variant is not None else index.allowed(day)[0]
        table = count_window(_entries(span, index, variant), store, scheme, detach=False)
        try:
            null = null_for(table, f"{window.kind}d:{day.isoformat()}")
            for p in targets:
                cands = store.candidates(p.topic, s_target, p.username)
                addr, logp = best_candidate(cands, table, null)
                cur = best.get(p.post_id)
                if cur is None or logp < cur.log_p:
                    best[p.post_id] = Scored(p.post_id, addr, logp, s_target, int(cands.size), null.log_sf)
        finally:
            _release(table)
    return [best[p.post_id] for p in targets]


def _map_days(fn: Callable[[dt.date], list], days: Sequence[dt.date], workers: int) -> list:
    if workers > 1 and len(days) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, days))
    return [fn(d) for d in days]


def run_pipeline(
    index: PostIndex,
    store: CandidateStore,
    scheme: SchemeConfig,
    thresholds: Thresholds,
    kinds: Sequence[int] = WINDOW_KINDS,
    workers: int = 1,
) -> list[AssignmentRecord]:
    """Sequential passes over ``kinds``; each pass retries only unassigned posts."""
    assigned: dict[int, AssignmentRecord] = {}
    for kind in kinds:
        cut = thresholds.log(kind)

        def one_day(day: dt.date, kind=kind, cut=cut) -> list[AssignmentRecord]:
            todo = [p for p in index.by_day[day] if p.post_id not in assigned]
            if not todo:
                return []
            scored = evaluate_window(Window(kind, day), index, store, scheme, todo)
            return [AssignmentRecord(s.post_id, s.address, s.log_p, kind, s.slice_start) for s in scored if s.log_p < cut]

        for recs in _map_days(one_day, index.days, workers):
            for r in recs:
                assigned[r.post_id] = r
    return [assigned[k] for k in sorted(assigned)]


def min_log_p(
    index: PostIndex,
    store: CandidateStore,
    scheme: SchemeConfig,
    kinds: Sequence[int] = WINDOW_KINDS,
    workers: int = 1,
) -> dict[int, list[Scored]]:
    """Every post's best candidate in every window kind (no thresholding)."""
    out = {}
    for kind in kinds:
        parts = _map_days(lambda d, k=kind: evaluate_window(Window(k, d), index, store, scheme), index.days, workers)
        out[kind] = sorted((s for part in parts for s in part), key=lambda s: s.post_id)
    return out


# --------------------------------------------------------------------------
# calibration


DEFAULT_FAMILY_ALPHA = 0.01


@dataclass(frozen=True)
class Calibration:
    """Calibrated thresholds plus the evidence they were derived from.

    ``empirical_log_p[k]`` is the next float below the smallest noise log p
    of window kind ``k``; ``floor_log_p[k]`` is the family-wise cap (see
    ``calibrate``).  The threshold is the smaller of the two.
    """

    thresholds: Thresholds
    min_noise_log_p: dict[int, float]
    empirical_log_p: dict[int, float]
    floor_log_p: dict[int, float] | None
    family_alpha: float | None
    hypotheses: int
    noise_positions: tuple[int, ...]
    noise_posts: int

    def to_json(self, header: Mapping | None = None) -> str:
        windows = {}
        for k in WINDOW_KINDS:
            th = self.thresholds.log(k)
            windows[str(k)] = {
                "min_noise_ln_p": self.min_noise_log_p[k],
                "min_noise_log10_p": self.min_noise_log_p[k] / LN10,
                "empirical_ln_p": self.empirical_log_p[k],
                "floor_ln_p": None if self.floor_log_p is None else self.floor_log_p[k],
                "threshold_ln_p": th,
                "threshold_log10_p": th / LN10,
                "threshold_p": math.exp(th),
            }
        body = {
            "family_alpha": self.family_alpha,
            "hypotheses": self.hypotheses,
            "noise_positions": list(self.noise_positions),
            "noise_posts": self.noise_posts,
            "windows": windows,
        }
        if header:
            body["_header"] = dict(header)
        return json.dumps(body, indent=1, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Calibration":
        body = json.loads(text)
        w = body["windows"]
        floor = None
        if body.get("family_alpha") is not None:
            floor = {k: float(w[str(k)]["floor_ln_p"]) for k in WINDOW_KINDS}
        return cls(
            Thresholds(*(float(w[str(k)]["threshold_ln_p"]) for k in WINDOW_KINDS)),
            {k: float(w[str(k)]["min_noise_ln_p"]) for k in WINDOW_KINDS},
            {k: float(w[str(k)]["empirical_ln_p"]) for k in WINDOW_KINDS},
            floor,
            body.get("family_alpha"),
            int(body["hypotheses"]),
            tuple(body["noise_positions"]),
            int(body["noise_posts"]),
        )


def _step_floor(tables: Iterable[np.ndarray], bound: float) -> float:
    # Every candidate of a post matches in the post's own topic, so under a
    # wrong scheme its count is 1 plus a draw that is stochastically below
    # the window's null: Pr(count >= c) <= sf(c - 1).  The returned log
    # threshold t guarantees that log_sf(c) < t implies sf(c - 1) < bound
    # in every table.
    out = 0.0
    for sf in tables:
        below = np.flatnonzero(sf < bound)
        out = min(out, float(sf[below[0]]) if below.size else float(sf[-1]))
    return out


def calibrate(
    noise_runs: Mapping[int, Mapping[int, Sequence[Scored]]],
    family_alpha: float | None = DEFAULT_FAMILY_ALPHA,
) -> Calibration:
    """Thresholds from one or more noise-position runs.

    ``noise_runs`` maps a noise slice position to the output of ``min_log_p``
    for that position.  The empirical threshold of each window kind is the
    next float below the smallest noise p-value over every position, so
    re-running any of them assigns nothing.

    With ``family_alpha`` set, each threshold is further capped so that a
    fresh pure-noise run of the same shape assigns anything with
    probability at most ``alpha`` (union bound over the ``H`` (post,
    candidate, window kind) hypotheses of the noise run, each held to
    ``alpha / H``).  Since a post's candidates always match its own topic,
    the cap is taken one count step beyond the first count whose survival
    drops below ``alpha / H``, separately in every window.  The empirical
    minimum alone only guarantees zero assignments for the runs it was
    computed from.
    """
    if family_alpha is not None and not 0 < family_alpha < 1:
        raise ValueError("family_alpha must be in (0, 1)")
    mins: dict[int, float] = {}
    tables: dict[int, dict[int, np.ndarray]] = defaultdict(dict)
    n_posts = 0
    hyp = 0
    for pos in sorted(noise_runs):
        run = noise_runs[pos]
        for kind in WINDOW_KINDS:
            vals = run.get(kind, [])
            if vals:
                mins[kind] = min(mins.get(kind, math.inf), min(s.log_p for s in vals))
            for sc in vals:
                if sc.log_sf is not None:
                    tables[kind][id(sc.log_sf)] = sc.log_sf
        n_posts = max(n_posts, max((len(v) for v in run.values()), default=0))
        hyp = max(hyp, sum(s.n_candidates for k in WINDOW_KINDS for s in run.get(k, [])))
    if not noise_runs or n_posts == 0 or set(mins) != set(WINDOW_KINDS):
        raise CalibrationError("noise run is empty")
    empirical = {k: float(np.nextafter(mins[k], -np.inf)) for k in WINDOW_KINDS}
    floor = None
    chosen = dict(empirical)
    if family_alpha is not None:
        bound = math.log(family_alpha) - math.log(max(hyp, 1))
        floor = {k: min(bound, _step_floor(tables[k].values(), bound)) for k in WINDOW_KINDS}
        chosen = {k: min(empirical[k], floor[k]) for k in WINDOW_KINDS}
    th = Thresholds(*(chosen[k] for k in WINDOW_KINDS))
    return Calibration(th, mins, empirical, floor, family_alpha, hyp, tuple(sorted(noise_runs)), n_posts)


# --------------------------------------------------------------------------
# slice-position scan


@dataclass(frozen=True)
class WeekPoint:
    week: int
    start: dt.date
    posts: int
    mean_p: dict[int, float]  # position -> mean over posts of min p
    mean_log10_p: dict[int, float]


def scan_positions(
    posts: Sequence[Post],
    store: CandidateStore,
    scheme: SchemeConfig,
    positions: Sequence[int],
    workers: int = 1,
) -> list[WeekPoint]:
    """Weekly mean of each post's minimal 7-day p-value at each fixed position."""
    if not posts:
        return []
    first = min(p.date for p in posts)
    per_pos: dict[int, dict[int, float]] = {}
    for pos in positions:
        index = PostIndex(posts, position=pos)
        per_pos[pos] = {s.post_id: s.log_p for s in min_log_p(index, store, scheme, (7,), workers)[7]}
    weeks: dict[int, list[int]] = defaultdict(list)
    for p in posts:
        weeks[(p.date - first).days // 7].append(p.post_id)
    out = []
    for w in sorted(weeks):
        ids = weeks[w]
        mean_p = {pos: float(np.mean(np.exp([per_pos[pos][i] for i in ids]))) for pos in positions}
        mean_l = {pos: float(np.mean([per_pos[pos][i] for i in ids])) / LN10 for pos in positions}
        out.append(WeekPoint(w, first + dt.timedelta(days=7 * w), len(ids), mean_p, mean_l))
    return out


def detect_crossing(series: Sequence[WeekPoint], a: int, b: int) -> WeekPoint | None:
    """Week at which position ``b`` takes over from ``a`` as the lower mean p.

    Fits a single step to the sign of ``mean_p[a] - mean_p[b]``: weeks
    before the step should favour ``a``, weeks from it on should favour
    ``b``.  Returns ``None`` when no interior step beats the no-switch fit.
    """
    n = len(series)
    if n < 2:
        return None
    a_low = np.array([pt.mean_p[a] < pt.mean_p[b] for pt in series])
    # agreement of step k: weeks < k with a lower, weeks >= k with b lower
    pre = np.concatenate([[0], np.cumsum(a_low)])
    post_b = np.concatenate([np.cumsum((~a_low)[::-1])[::-1], [0]])
    agree = pre + post_b
    k = int(np.argmax(agree))
    no_switch = max(agree[0], agree[n])
    if 0 < k < n and agree[k] > no_switch:
        return series[k]
    return None


# --------------------------------------------------------------------------
# files


def write_assignments(records: Sequence[AssignmentRecord], path: str | Path, header: Sequence[str] = ()) -> None:
    buf = io.StringIO()
    for line in header:
        buf.write(f"# {line}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["post_id", "address", "log10_p", "window", "slice_start"])
    for r in sorted(records):
        w.writerow([r.post_id, render_dotted(r.address), f"{r.log10_p:.6f}", r.window, r.slice_start])
    Path(path).write_text(buf.getvalue())


def read_assignments(path: str | Path) -> list[AssignmentRecord]:
    out = []
    with open(path, newline="") as fh:
        for r in csv.DictReader(line for line in fh if not line.startswith("#")):
            out.append(
                AssignmentRecord(
                    int(r["post_id"]),
                    parse_dotted(r["address"]),
                    float(r["log10_p"]) * LN10,
                    int(r["window"]),
                    int(r["slice_start"]),
                )
            )
    return out
