"""Brute-force candidate enumeration.

For each topic the whole configured address space is hashed once; every
requested slice position is read out of the same digest, so the true
position and the noise position cost a single pass.  Work is split into
chunks of outer blocks (the top 16 address bits) and merged by sorting, so
output does not depend on worker count or chunk size.
"""

from __future__ import annotations

import json
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .scheme import (
    HASHES,
    SchemeConfig,
    hash_message,
    render_dotted,
    validate_topic,
    validate_username,
)

MAGIC = b"PFC1"
# Prefix bytes (topic + salt + "o1.o2.") must leave room for the 8-byte tail
# and the length words inside one 64-byte block.
_MAX_OUTER_PREFIX = 47
# Prefix words are always passed big-endian; the MD5 kernels swap internally.
_FAST = {"sha1": (_kernels.scan_sha1, _kernels.hist_sha1), "md5": (_kernels.scan_md5, _kernels.hist_md5)}


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class CandidateSet:
    topic: int
    username: str
    slice_start: int
    addresses: np.ndarray  # sorted uint32

    def __len__(self) -> int:
        return int(self.addresses.size)

    def __contains__(self, address: int) -> bool:
        i = np.searchsorted(self.addresses, address)
        return bool(i < self.addresses.size and self.addresses[i] == address)


@dataclass(frozen=True)
class TopicWorkOrder:
    topic: int
    usernames: tuple[str, ...]
    slice_starts: tuple[int, ...]

    @classmethod
    def build(cls, topic: int, usernames: Iterable[str], slice_starts: Iterable[int]) -> "TopicWorkOrder":
        return cls(validate_topic(topic), tuple(sorted(set(usernames))), tuple(sorted(set(slice_starts))))


# --------------------------------------------------------------------------
# message tables


def _octet_tail_tables() -> tuple[np.ndarray, np.ndarray]:
    # tail[i] = big-endian bytes of "o3.o4" + 0x80, zero padded to 8 bytes.
    tail = np.zeros(65536, np.uint64)
    slen = np.zeros(65536, np.int64)
    for i in range(65536):
        s = f"{i >> 8}.{i & 255}".encode()
        tail[i] = int.from_bytes((s + b"\x80").ljust(8, b"\0"), "big")
        slen[i] = len(s)
    return tail, slen


_TAIL_CACHE: dict[object, tuple[np.ndarray, np.ndarray]] = {}


def _tails(last_octet: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    if last_octet not in _TAIL_CACHE:
        if last_octet is None:
            _TAIL_CACHE[None] = _octet_tail_tables()
        else:
            tail = np.zeros(256, np.uint64)
            slen = np.zeros(256, np.int64)
            for i in range(256):
                s = f"{i}.{last_octet}".encode()
                tail[i] = int.from_bytes((s + b"\x80").ljust(8, b"\0"), "big")
                slen[i] = len(s)
            _TAIL_CACHE[last_octet] = (tail, slen)
    return _TAIL_CACHE[last_octet]


def _prefix_words(prefix: bytes, outers: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    pw = np.zeros((outers.size, 16), np.uint32)
    qs = np.zeros(outers.size, np.int64)
    for i, o in enumerate(outers.tolist()):
        msg = prefix + f"{o >> 8}.{o & 255}.".encode()
        qs[i] = len(msg)
        pw[i] = np.frombuffer(msg.ljust(64, b"\0"), ">u4")
    return pw, qs


def _slice_geometry(slice_starts: Sequence[int], bits: int) -> tuple[np.ndarray, np.ndarray]:
    wis = np.empty(len(slice_starts), np.int64)
    shs = np.empty(len(slice_starts), np.uint64)
    for p, s in enumerate(slice_starts):
        b = 4 * s
        wis[p] = b // 32
        shs[p] = 64 - b % 32 - bits
    return wis, shs


def _space_blocks(config: SchemeConfig) -> tuple[np.ndarray, int, int]:
    """Outer block ids (address >> 16) and the inner index range."""
    base, size = config.space_base, config.space_size
    if size >= 65536:
        return np.arange(base >> 16, (base + size) >> 16, dtype=np.int64), 0, 65536
    lo = base & 0xFFFF
    return np.array([base >> 16], np.int64), lo, lo + size


def fast_path_ok(config: SchemeConfig, topic: int) -> bool:
    prefix_len = len(str(topic)) + len(config.salt) + len("255.255.")
    return config.hash_algorithm in _FAST and prefix_len <= _MAX_OUTER_PREFIX and config.username_bits <= 32


# --------------------------------------------------------------------------
# scanning


def _scan_chunks(
    config: SchemeConfig,
    prefix: bytes,
    outers: np.ndarray,
    lo: int,
    hi: int,
    tables: np.ndarray,
    slice_starts: Sequence[int],
    tail: np.ndarray,
    slen: np.ndarray,
    workers: int,
    chunk_outers: int,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    scan, _ = _FAST[config.hash_algorithm]
    wis, shs = _slice_geometry(slice_starts, config.username_bits)
    umask = np.uint64((1 << config.username_bits) - 1)
    hits_per_outer = (hi - lo) * max(1, int((tables >= 0).sum())) / float(1 << config.username_bits)

    def run(chunk: np.ndarray):
        pw, qs = _prefix_words(prefix, chunk)
        bases = (chunk << 16).astype(np.uint32)
        cap = int(2 * hits_per_outer * chunk.size) + 1024
        while True:
            pos = np.empty(cap, np.int32)
            bucket = np.empty(cap, np.int32)
            addr = np.empty(cap, np.uint32)
            n = scan(pw, qs, bases, lo, hi, tail, slen, tables, wis, shs, umask, pos, bucket, addr)
            if n <= cap:
                return pos[:n], bucket[:n], addr[:n]
            cap = n

    chunks = [outers[i : i + chunk_outers] for i in range(0, outers.size, chunk_outers)]
    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, chunks))
    else:
        parts = [run(c) for c in chunks]
    if not parts:
        empty = np.empty(0, np.int32)
        return empty, empty, np.empty(0, np.uint32)
    return tuple(np.concatenate(x) for x in zip(*parts))  # type: ignore[return-value]


def _scan_python(config: SchemeConfig, topic: int, targets: dict[tuple[int, str], int]):
    # Reference path for hashes without a compiled kernel.  Slow; meant for
    # small address spaces and negative controls.
    fn = HASHES[config.hash_algorithm]
    starts = sorted({s for s, _ in targets})
    L = config.username_len
    pos, bucket, addr = [], [], []
    for a in range(config.space_base, config.space_base + config.space_size):
        hexd = fn(hash_message(topic, a, config.salt)).hex()
        for s in starts:
            b = targets.get((s, hexd[s : s + L]))
            if b is not None:
                pos.append(starts.index(s))
                bucket.append(b)
                addr.append(a)
    return np.array(pos, np.int32), np.array(bucket, np.int32), np.array(addr, np.uint32)


def candidates_for_topic(
    order: TopicWorkOrder,
    config: SchemeConfig,
    workers: int = 1,
    chunk_outers: int = 16,
) -> list[CandidateSet]:
    """Candidate sets for every (username, slice_start) pair of a topic.

    Output is sorted by slice start, then username; each address list is
    sorted ascending.
    """
    if not order.usernames or not order.slice_starts:
        return []
    L = config.username_len
    for u in order.usernames:
        validate_username(u, L)
    starts = list(order.slice_starts)
    for s in starts:
        config.with_slice(s)  # bounds check
    names = list(order.usernames)
    if fast_path_ok(config, order.topic):
        tables = np.full((len(starts), 1 << config.username_bits), -1, np.int32)
        for b, u in enumerate(names):
            tables[:, int(u, 16)] = b
        outers, lo, hi = _space_blocks(config)
        tail, slen = _tails()
        prefix = str(order.topic).encode() + config.salt
        pos, bucket, addr = _scan_chunks(
            config, prefix, outers, lo, hi, tables, starts, tail, slen, workers, chunk_outers
        )
    else:
        targets = {(s, u): b for s in starts for b, u in enumerate(names)}
        pos, bucket, addr = _scan_python(config, order.topic, targets)

    idx = np.lexsort((addr, bucket, pos))
    pos, bucket, addr = pos[idx], bucket[idx], addr[idx]
    key = pos.astype(np.int64) * len(names) + bucket
    bounds = np.searchsorted(key, np.arange(len(starts) * len(names) + 1))
    out = []
    for p, s in enumerate(starts):
        for b, u in enumerate(names):
            k = p * len(names) + b
            out.append(CandidateSet(order.topic, u, s, addr[bounds[k] : bounds[k + 1]].copy()))
    return out


def username_histogram(topic: int, config: SchemeConfig, workers: int = 1) -> np.ndarray:
    """Counts of every username value over the whole address space for one topic."""
    topic = validate_topic(topic)
    bits = config.username_bits
    hist = np.zeros(1 << bits, np.int64)
    if not fast_path_ok(config, topic):
        fn = HASHES[config.hash_algorithm]
        s, L = config.slice_start, config.username_len
        for a in range(config.space_base, config.space_base + config.space_size):
            hist[int(fn(hash_message(topic, a, config.salt)).hex()[s : s + L], 16)] += 1
        return hist
    _, histk = _FAST[config.hash_algorithm]
    outers, lo, hi = _space_blocks(config)
    tail, slen = _tails()
    (wi,), (sh,) = _slice_geometry([config.slice_start], bits)
    prefix = str(topic).encode() + config.salt
    umask = np.uint64((1 << bits) - 1)
    for i in range(0, outers.size, 64):
        chunk = outers[i : i + 64]
        pw, qs = _prefix_words(prefix, chunk)
        histk(pw, qs, (chunk << 16).astype(np.uint32), lo, hi, tail, slen, int(wi), sh, umask, hist)
    return hist


def intersect(sets: Sequence[CandidateSet | np.ndarray]) -> np.ndarray:
    """Addresses present in every input set."""
    if not sets:
        raise UsageError("intersect needs at least one set")
    arrays = [s.addresses if isinstance(s, CandidateSet) else np.asarray(s, np.uint32) for s in sets]
    out = arrays[0]
    for a in arrays[1:]:
        out = np.intersect1d(out, a, assume_unique=True)
    return out.astype(np.uint32)


def find_suffix_preimages(prefix: str, digest: str, fixed_last_octet: int) -> list[int]:
    """All addresses ``x.y.z.<fixed_last_octet>`` whose SHA-1 of ``prefix + dotted`` equals ``digest``.

    Scans the 2**24 candidates with the kernel, filtering on digest
    characters 0-3, then confirms survivors with a full hashlib digest.
    """
    if not 0 <= fixed_last_octet < 256:
        raise ValueError("fixed_last_octet must be in [0, 256)")
    digest = digest.lower()
    pre = prefix.encode("ascii")
    outers = np.arange(65536, dtype=np.int64)
    tables = np.full((1, 65536), -1, np.int32)
    tables[0, int(digest[:4], 16)] = 0
    tail, slen = _tails(fixed_last_octet)
    config = SchemeConfig("sha1", username_len=4, slice_start=0)
    if len(pre) + len("255.255.") > _MAX_OUTER_PREFIX:
        raise ValueError("prefix too long for a single-block scan")
    _, _, addr = _scan_chunks(config, pre, outers, 0, 256, tables, [0], tail, slen, 1, 4096)
    out = []
    for a in addr.tolist():
        full = (a & 0xFFFF0000) | ((a & 0xFF) << 8) | fixed_last_octet
        if HASHES["sha1"](pre + render_dotted(full).encode()).hex() == digest:
            out.append(full)
    return sorted(out)


def candidate_stats(sets: Sequence[CandidateSet | int]) -> dict:
    """Exact min/max and rational mean of candidate-set sizes."""
    if not sets:
        raise UsageError("candidate_stats needs at least one set")
    sizes = [len(s) if isinstance(s, CandidateSet) else int(s) for s in sets]
    n = len(sizes)
    mean = Fraction(sum(sizes), n)
    var = sum((x - mean) ** 2 for x in sizes) / (n - 1) if n > 1 else Fraction(0)
    return {
        "count": n,
        "min": min(sizes),
        "max": max(sizes),
        "mean": mean,
        "std_error": float(var / n) ** 0.5,
    }


# --------------------------------------------------------------------------
# on-disk store


def topic_filename(topic: int, slice_start: int) -> str:
    return f"t{topic:09d}_s{slice_start:02d}.pfc"


def write_topic_file(path: Path, topic: int, slice_start: int, sets: Sequence[CandidateSet]) -> None:
    """Binary layout: b"PFC1", topic u64, slice u8, count u32, then per username
    its ASCII hex chars, a u32 size and the sorted u32 addresses (all little-endian)."""
    buf = bytearray(MAGIC)
    buf += struct.pack("<QBI", topic, slice_start, len(sets))
    for cs in sets:
        buf += cs.username.encode("ascii")
        buf += struct.pack("<I", len(cs))
        buf += cs.addresses.astype("<u4").tobytes()
    tmp = path.with_suffix(".tmp")
    tmp.write_bytes(bytes(buf))
    tmp.replace(path)


def read_topic_file(path: Path, username_len: int = 4) -> tuple[int, int, dict[str, np.ndarray]]:
    data = Path(path).read_bytes()
    if data[:4] != MAGIC:
        raise ValueError(f"{path}: bad magic")
    topic, slice_start, count = struct.unpack_from("<QBI", data, 4)
    off = 4 + struct.calcsize("<QBI")
    out: dict[str, np.ndarray] = {}
    for _ in range(count):
        u = data[off : off + username_len].decode("ascii")
        off += username_len
        (n,) = struct.unpack_from("<I", data, off)
        off += 4
        out[u] = np.frombuffer(data, "<u4", n, off).astype(np.uint32)
        off += 4 * n
    if off != len(data):
        raise ValueError(f"{path}: trailing bytes")
    return topic, slice_start, out


class MissingCandidates(KeyError):
    """A topic needed for attribution has no candidate file."""


class CandidateStore:
    """Directory of per-(topic, slice) candidate files plus a JSON-lines index."""

    INDEX = "index.jsonl"
    MANIFEST = "store.json"

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self._cache: dict[tuple[int, int], dict[str, np.ndarray]] = {}
        manifest = self.root / self.MANIFEST
        self.meta = json.loads(manifest.read_text()) if manifest.exists() else {}

    @property
    def username_len(self) -> int:
        return int(self.meta.get("username_len", 4))

    def has(self, topic: int, slice_start: int) -> bool:
        return (topic, slice_start) in self._cache or (self.root / topic_filename(topic, slice_start)).exists()

    def get(self, topic: int, slice_start: int) -> dict[str, np.ndarray]:
        key = (topic, slice_start)
        if key not in self._cache:
            path = self.root / topic_filename(topic, slice_start)
            if not path.exists():
                raise MissingCandidates(f"no candidates for topic {topic} at slice {slice_start}")
            _, _, sets = read_topic_file(path, self.username_len)
            self._cache[key] = sets
        return self._cache[key]

    def candidates(self, topic: int, slice_start: int, username: str) -> np.ndarray:
        sets = self.get(topic, slice_start)
        try:
            return sets[username]
        except KeyError:
            raise MissingCandidates(f"topic {topic} slice {slice_start} lacks username {username}") from None

    def index(self) -> list[dict]:
        path = self.root / self.INDEX
        if not path.exists():
            return []
        rows = []
        for line in path.read_text().splitlines():
            row = json.loads(line)
            if "_header" not in row:
                rows.append(row)
        return rows


def enumerate_store(
    work: Sequence[TopicWorkOrder],
    config: SchemeConfig,
    root: str | Path,
    workers: int = 1,
    header: dict | None = None,
    progress=None,
) -> CandidateStore:
    """Enumerate every work order into ``root`` and write the index and manifest."""
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    manifest = {
        "format": MAGIC.decode(),
        "hash_algorithm": config.hash_algorithm,
        "salt_hex": config.salt.hex(),
        "username_len": config.username_len,
        "address_space_bits": config.address_space_bits,
        "high_octet": config.high_octet,
    }
    if header:
        manifest["_header"] = header
    (root / CandidateStore.MANIFEST).write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n")
    lines = []
    if header:
        lines.append(json.dumps({"_header": header}, sort_keys=True))
    for n, order in enumerate(sorted(work, key=lambda o: o.topic)):
        sets = candidates_for_topic(order, config, workers=workers)
        for s in order.slice_starts:
            group = [c for c in sets if c.slice_start == s]
            fname = topic_filename(order.topic, s)
            write_topic_file(root / fname, order.topic, s, group)
            lines.append(
                json.dumps(
                    {
                        "topic": order.topic,
                        "slice_start": s,
                        "usernames": [c.username for c in group],
                        "sizes": [len(c) for c in group],
                        "file": fname,
                    }
                )
            )
        if progress:
            progress(n + 1, len(work))
    (root / CandidateStore.INDEX).write_text("\n".join(lines) + ("\n" if lines else ""))
    return CandidateStore(root)
