"""Null distribution of an address's candidate count across a window of topics.

Under the null an address lands in topic ``t``'s candidate sets with
probability ``q(k_t) = k_t / 2**U`` independently across topics, so its
count is Poisson-binomial.  Tables are built in the log domain and carry the
mass cut off above ``c_max`` as an explicit remainder.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.special import gammaln, logsumexp

NEG_INF = -np.inf
LOG_HALF = float(np.log(0.5))


class DomainError(ValueError):
    pass


def match_prob(k: int, bits: int = 16) -> Fraction:
    """Probability that a random address matches one of ``k`` distinct usernames.

    ``1 - C(2^U - 1, k) / C(2^U, k)`` telescopes to ``k / 2^U``.
    """
    n = 1 << bits
    if not 1 <= k <= n:
        raise DomainError(f"k={k} outside [1, {n}]")
    return Fraction(k, n)


@dataclass(frozen=True)
class NullTable:
    """Log PMF over counts ``0..c_max`` plus the log mass above ``c_max``."""

    log_pmf: np.ndarray
    log_remainder: float
    window: str = ""

    def __post_init__(self):
        sf = np.empty(self.log_pmf.size + 1)
        sf[-1] = self.log_remainder
        acc = self.log_remainder
        for n in range(self.log_pmf.size - 1, -1, -1):
            acc = np.logaddexp(acc, self.log_pmf[n])
            sf[n] = acc
        # Near 1 the tail sum loses relative accuracy in the log; the
        # complement 1 - Pr(N < n) keeps it while Pr(N < n) is small.
        cdf = -np.inf
        for n in range(1, sf.size):
            cdf = np.logaddexp(cdf, self.log_pmf[n - 1])
            if cdf > LOG_HALF:
                break
            sf[n] = np.log1p(-np.exp(cdf))
        sf[0] = 0.0
        # guard against rounding making the tail non-monotone
        np.minimum.accumulate(sf, out=sf)
        object.__setattr__(self, "_log_sf", sf)

    @property
    def c_max(self) -> int:
        return self.log_pmf.size - 1

    @property
    def log_sf(self) -> np.ndarray:
        """``log Pr(N >= n)`` for n in ``0..c_max + 1``."""
        return self._log_sf  # type: ignore[attr-defined]

    def to_json(self, loads_digest: str = "") -> str:
        return json.dumps(
            {
                "window": self.window,
                "loads_digest": loads_digest,
                "log_survival": [float(x) for x in self.log_sf],
            }
        )


def _bernoulli_step(log_pmf: np.ndarray, log_rem: float, q: float) -> tuple[np.ndarray, float]:
    lq, l1q = math.log(q), math.log1p(-q) if q < 1 else NEG_INF
    out = np.empty_like(log_pmf)
    out[0] = log_pmf[0] + l1q
    out[1:] = np.logaddexp(log_pmf[1:] + l1q, log_pmf[:-1] + lq)
    return out, float(np.logaddexp(log_rem, log_pmf[-1] + lq))


def _binomial_log_pmf(m: int, q: float) -> np.ndarray:
    i = np.arange(m + 1)
    lq = math.log(q)
    l1q = math.log1p(-q) if q < 1 else NEG_INF
    with np.errstate(invalid="ignore"):
        tail = np.where(m - i > 0, (m - i) * l1q, 0.0)
    return gammaln(m + 1) - gammaln(i + 1) - gammaln(m - i + 1) + i * lq + tail


def _convolve_log(a: np.ndarray, a_rem: float, b: np.ndarray) -> tuple[np.ndarray, float]:
    # b is a full distribution (no remainder); a is truncated at c_max.
    c = a.size - 1
    out = np.full(a.size, NEG_INF)
    over = [a_rem]  # mass above c_max stays above
    for j in range(b.size):
        if b[j] == NEG_INF:
            continue
        if j <= c:
            out[j:] = np.logaddexp(out[j:], a[: a.size - j] + b[j])
        if j >= 1:
            lo = max(0, c - j + 1)
            over.append(float(logsumexp(a[lo:] + b[j])))
    return out, float(logsumexp(over))


def pmf_from_probs(probs: Sequence[float], c_max: int, grouped: bool = True, window: str = "") -> NullTable:
    """Poisson-binomial table for arbitrary per-topic match probabilities."""
    if c_max < 1:
        raise DomainError("c_max must be at least 1")
    log_pmf = np.full(c_max + 1, NEG_INF)
    log_pmf[0] = 0.0
    rem = NEG_INF
    if grouped:
        for q, m in sorted(Counter(float(p) for p in probs).items()):
            log_pmf, rem = _convolve_log(log_pmf, rem, _binomial_log_pmf(m, q))
    else:
        for q in probs:
            log_pmf, rem = _bernoulli_step(log_pmf, rem, float(q))
    return NullTable(log_pmf, rem, window)


def window_pmf(
    loads: Iterable[int], c_max: int, bits: int = 16, grouped: bool = True, window: str = ""
) -> NullTable:
    """Null table for a window whose topics have ``k_t`` distinct usernames each."""
    probs = [float(match_prob(k, bits)) for k in loads]
    return pmf_from_probs(probs, c_max, grouped=grouped, window=window)


def default_c_max(max_observed: int, n_topics: int) -> int:
    """``4 * max + 64``, capped at the number of topics (beyond which mass is zero)."""
    return max(1, min(n_topics, 4 * max_observed + 64))


def log_survival(table: NullTable, n: int) -> float:
    """``log Pr(N >= n)``; above ``c_max`` this is the remainder bound."""
    if n < 0:
        raise DomainError("n must be non-negative")
    sf = table.log_sf
    return float(sf[min(n, sf.size - 1)])
