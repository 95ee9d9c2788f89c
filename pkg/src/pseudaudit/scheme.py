"""Hash-slice username scheme.

A username is a fixed-width slice of the hex digest of
``decimal(topic) + salt + dotted(address)``.  Slice starts are 0-based
character offsets into the hex digest (PHP ``substr`` semantics), so the
post-July-2013 scheme that shows 1-based characters 10-13 is stored here as
``slice_start=9``.
"""

from __future__ import annotations

import datetime as dt
import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable

ADDRESS_MAX = 1 << 32
HEX_CHARS = frozenset("0123456789abcdef")


class ConfigError(ValueError):
    """Raised for an invalid or unsupported scheme configuration."""


class RangeError(ValueError):
    """Raised when a date falls outside a regime table's span."""


# --------------------------------------------------------------------------
# addresses


def render_dotted(address: int) -> str:
    """Dotted-decimal rendering of a 32-bit address, most significant octet first."""
    if not 0 <= address < ADDRESS_MAX:
        raise ValueError(f"address out of range: {address}")
    return f"{address >> 24}.{(address >> 16) & 255}.{(address >> 8) & 255}.{address & 255}"


def parse_dotted(text: str) -> int:
    parts = text.strip().split(".")
    if len(parts) != 4:
        raise ValueError(f"not a dotted-decimal IPv4 address: {text!r}")
    value = 0
    for part in parts:
        if not part.isdigit() or (len(part) > 1 and part[0] == "0"):
            raise ValueError(f"bad octet {part!r} in {text!r}")
        octet = int(part)
        if octet > 255:
            raise ValueError(f"bad octet {part!r} in {text!r}")
        value = (value << 8) | octet
    return value


def validate_topic(topic: int) -> int:
    if isinstance(topic, bool) or int(topic) != topic or topic < 1:
        raise ValueError(f"topic id must be a positive integer, got {topic!r}")
    return int(topic)


def validate_username(username: str, length: int) -> str:
    if len(username) != length or not set(username) <= HEX_CHARS:
        raise ValueError(f"username must be {length} lowercase hex chars, got {username!r}")
    return username


# --------------------------------------------------------------------------
# hash registry


def _first_letter(message: bytes) -> bytes:
    # Toy non-avalanching hash: index of the first ASCII letter, else 0.
    for b in message:
        if 65 <= b <= 90 or 97 <= b <= 122:
            return bytes([(b | 32) - 96]).rjust(20, b"\0")
    return bytes(20)


def _byte_sum(message: bytes) -> bytes:
    # Toy non-avalanching hash: byte sum, repeated to fill a 160-bit digest.
    return (sum(message) & 0xFFFFFFFF).to_bytes(4, "big") * 5


def _hashlib(name: str) -> Callable[[bytes], bytes]:
    return lambda message: hashlib.new(name, message).digest()


HASHES: dict[str, Callable[[bytes], bytes]] = {
    "sha1": _hashlib("sha1"),
    "md5": _hashlib("md5"),
    "sha256": _hashlib("sha256"),
    "first_letter": _first_letter,
    "byte_sum": _byte_sum,
}

# Digest length in hex characters for each registered hash.
DIGEST_HEX_LEN = {"sha1": 40, "md5": 32, "sha256": 64, "first_letter": 40, "byte_sum": 40}


# --------------------------------------------------------------------------
# configuration


@dataclass(frozen=True)
class SchemeConfig:
    """The (hash, mix, slice, salt) quadruple that defines username generation.

    ``address_space_bits`` below 32 restricts enumeration to ``2**A`` addresses
    whose bits above ``A`` come from ``high_octet << 24``; the hash input is
    still the full dotted-decimal rendering.
    """

    hash_algorithm: str = "sha1"
    salt: bytes = b""
    slice_start: int = 9
    username_len: int = 4
    address_space_bits: int = 32
    high_octet: int = 0

    def __post_init__(self):
        if self.hash_algorithm not in HASHES:
            raise ConfigError(f"unsupported hash algorithm {self.hash_algorithm!r}")
        if self.username_len < 1:
            raise ConfigError("username_len must be positive")
        if self.slice_start < 0 or self.slice_start + self.username_len > self.digest_len:
            raise ConfigError(
                f"slice [{self.slice_start}, {self.slice_start + self.username_len}) "
                f"exceeds the {self.digest_len}-char digest"
            )
        if not 1 <= self.address_space_bits <= 32:
            raise ConfigError("address_space_bits must be in [1, 32]")
        if not 0 <= self.high_octet < 256:
            raise ConfigError("high_octet must be in [0, 256)")
        if not isinstance(self.salt, bytes):
            raise ConfigError("salt must be bytes")

    @property
    def username_bits(self) -> int:
        return 4 * self.username_len

    @property
    def digest_len(self) -> int:
        return DIGEST_HEX_LEN[self.hash_algorithm]

    @property
    def space_base(self) -> int:
        """First address of the enumerated space."""
        if self.address_space_bits == 32:
            return 0
        return (self.high_octet << 24) & ~((1 << self.address_space_bits) - 1) & 0xFFFFFFFF

    @property
    def space_size(self) -> int:
        return 1 << self.address_space_bits

    def in_space(self, address: int) -> bool:
        return self.space_base <= address < self.space_base + self.space_size

    def with_slice(self, slice_start: int) -> "SchemeConfig":
        return SchemeConfig(
            self.hash_algorithm,
            self.salt,
            slice_start,
            self.username_len,
            self.address_space_bits,
            self.high_octet,
        )


def hash_message(topic: int, address: int, salt: bytes = b"") -> bytes:
    """The ASCII hash input: decimal topic, salt, dotted address, no separators."""
    return str(validate_topic(topic)).encode("ascii") + salt + render_dotted(address).encode("ascii")


def digest_for(topic: int, address: int, config: SchemeConfig) -> str:
    """Lowercase hex digest of the hash input for ``(topic, address)``."""
    try:
        fn = HASHES[config.hash_algorithm]
    except KeyError:
        raise ConfigError(f"unsupported hash algorithm {config.hash_algorithm!r}") from None
    return fn(hash_message(topic, address, config.salt)).hex()


def username_for(topic: int, address: int, config: SchemeConfig) -> str:
    start = config.slice_start
    return digest_for(topic, address, config)[start : start + config.username_len]


# --------------------------------------------------------------------------
# slice regimes


@dataclass(frozen=True)
class Regime:
    start: dt.date
    end: dt.date  # inclusive
    slice_start: int


@dataclass(frozen=True)
class SliceRegime:
    """Contiguous, non-overlapping date ranges mapped to slice starts.

    A date equal to the start of any regime after the first is a cutoff date:
    posts on it may carry either adjacent slice.
    """

    regimes: tuple[Regime, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.regimes:
            raise ConfigError("regime table is empty")
        for r in self.regimes:
            if r.end < r.start:
                raise ConfigError(f"regime ends before it starts: {r}")
        for prev, cur in zip(self.regimes, self.regimes[1:]):
            if cur.start != prev.end + dt.timedelta(days=1):
                raise ConfigError(f"regimes not contiguous at {prev.end} / {cur.start}")

    @property
    def start(self) -> dt.date:
        return self.regimes[0].start

    @property
    def end(self) -> dt.date:
        return self.regimes[-1].end

    @property
    def cutoffs(self) -> list[dt.date]:
        return [r.start for r in self.regimes[1:]]

    def slices(self) -> list[int]:
        return sorted({r.slice_start for r in self.regimes})

    @classmethod
    def single(cls, start: dt.date, end: dt.date, slice_start: int) -> "SliceRegime":
        return cls((Regime(start, end, slice_start),))

    @classmethod
    def parse(cls, lines: Iterable[str]) -> "SliceRegime":
        regimes = []
        for lineno, line in enumerate(lines, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                start, end, start_idx = (x.strip() for x in line.split(","))
                regimes.append(
                    Regime(dt.date.fromisoformat(start), dt.date.fromisoformat(end), int(start_idx))
                )
            except ValueError as exc:
                raise ConfigError(f"regime line {lineno}: {exc}") from None
        return cls(tuple(regimes))

    @classmethod
    def load(cls, path: str | Path) -> "SliceRegime":
        with open(path) as fh:
            return cls.parse(fh)

    def dumps(self) -> str:
        return "".join(f"{r.start.isoformat()},{r.end.isoformat()},{r.slice_start}\n" for r in self.regimes)


# Historical table: 1-based positions 9-12 before 2013-07-08, 10-13 through 2023-05-17.
DEFAULT_REGIMES = SliceRegime(
    (
        Regime(dt.date(2010, 12, 21), dt.date(2013, 7, 7), 8),
        Regime(dt.date(2013, 7, 8), dt.date(2023, 5, 17), 9),
    )
)
NOISE_SLICE = 10


def regime_slice_for(date: dt.date, regimes: SliceRegime) -> tuple[int, ...]:
    """Slice start(s) in effect on ``date``.

    Returns one value, or both adjacent values (earlier regime first) on a
    cutoff date.
    """
    if not regimes.start <= date <= regimes.end:
        raise RangeError(f"{date} outside regime span {regimes.start}..{regimes.end}")
    for i, r in enumerate(regimes.regimes):
        if r.start <= date <= r.end:
            if i > 0 and date == r.start:
                prev = regimes.regimes[i - 1].slice_start
                if prev != r.slice_start:
                    return (prev, r.slice_start)
            return (r.slice_start,)
    raise RangeError(f"{date} not covered")  # unreachable for contiguous tables

