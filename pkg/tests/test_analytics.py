import datetime as dt
from fractions import Fraction

import numpy as np
import pytest

from pseudaudit import synthgen
from pseudaudit.analytics import (
    InvalidFit,
    LabelTable,
    StretchedExpFit,
    UsageError,
    concentration,
    extrapolate_population,
    fit_stretched_exponential,
    label_aggregate,
    rank_counts,
    time_profile,
)
from pseudaudit.scheme import parse_dotted
from pseudaudit.validate import ParseError



def test_concentration_basic():
    assert concentration([50, 30, 20], Fraction(1, 3)) == Fraction(1, 2)
    assert concentration([20, 50, 30], 1) == 1
    assert concentration([3, 1], 0.01) == Fraction(3, 4)
    with pytest.raises(UsageError):
        concentration([], 0.5)
    with pytest.raises(UsageError):
        concentration([1], 0)


def test_concentration_monotone_and_oracle(small):
    _, _, forum = small
    counts = rank_counts(forum.truth.values())
    shares = [concentration(counts, Fraction(k, 20)) for k in range(1, 21)]
    assert shares == sorted(shares) and shares[-1] == 1
    top = int(np.ceil(0.05 * counts.size))
    by_addr = sorted(np.bincount(np.unique(list(forum.truth.values()), return_inverse=True)[1]), reverse=True)
    assert concentration(counts, 0.05) == Fraction(sum(by_addr[:top]), len(forum.truth))


def test_exact_model_recovery():
    r = np.arange(1, 2001)
    y = np.exp(10 - 0.5 * r**0.4)
    fit = fit_stretched_exponential(y)
    assert abs(fit.a - 10) < 1e-6 and abs(fit.b - 0.5) < 1e-6 and abs(fit.c - 0.4) < 1e-6
    assert fit.rss < 1e-9


def test_pure_exponential_boundary():
    y = np.exp(5 - 0.01 * np.arange(1, 300))
    assert abs(fit_stretched_exponential(y).c - 1) < 1e-3


def test_fit_errors():
    with pytest.raises(UsageError):
        fit_stretched_exponential([3, 2], 2)
    with pytest.raises(UsageError):
        fit_stretched_exponential([3, 2, 1], 5)
    with pytest.raises(UsageError):
        fit_stretched_exponential([3, 0, 1])


def test_extrapolation():
    assert extrapolate_population(StretchedExpFit(2.0, 2.0, 0.5, 3, 0.0))[0] == 1
    n1 = extrapolate_population(StretchedExpFit(5.0, 0.5, 0.4, 3, 0.0))[0]
    n2 = extrapolate_population(StretchedExpFit(5.1, 0.5, 0.4, 3, 0.0))[0]
    assert n2 > n1
    with pytest.raises(InvalidFit):
        extrapolate_population(StretchedExpFit(5.0, 0.0, 0.4, 3, 0.0))


def test_population_from_generator_weights():
    pop = synthgen.PopulationModel(n_addresses=1000)
    w = pop.weights()
    fit = fit_stretched_exponential(w, 200)
    n, total = extrapolate_population(fit)
    assert abs(n - 1000) <= 50
    assert total == pytest.approx(w[:n].sum(), rel=1e-6)


def test_label_lookup():
    t = LabelTable.parse(["cidr,label", "10.0.0.0/8,big", "10.5.0.0/16,inner", "11.0.0.0/16,other"])
    got = t.lookup([parse_dotted(s) for s in ("10.5.1.1", "10.6.0.0", "11.0.2.2", "12.0.0.1", "9.255.255.255")])
    assert got == ["inner", "big", "other", "unlabeled", "unlabeled"]


def test_label_parse_error():
    with pytest.raises(ParseError, match=":3:"):
        LabelTable.parse(["cidr,label", "10.0.0.0/8,a", "10.0.0.0/33,b"])
    with pytest.raises(ParseError):
        LabelTable.parse(["cidr,label", "10.0.0.0/8,a", "10.0.0.0/8,b"])


def test_label_aggregate_partition(small):
    _, _, forum = small
    addrs = sorted(set(forum.truth.values()))
    half = addrs[len(addrs) // 2]
    table = LabelTable.parse(["cidr,label", f"{_dotted(half & ~0xFF)}/24,planted"])
    agg = label_aggregate(forum.truth.values(), table)
    assert sum(c for c, _ in agg.values()) == len(forum.truth)
    assert sum(s for _, s in agg.values()) == pytest.approx(1.0)
    truth_planted = sum(1 for a in forum.truth.values() if a >> 8 == half >> 8)
    assert agg["planted"][0] == truth_planted


def _dotted(a):
    from pseudaudit.scheme import render_dotted

    return render_dotted(a)


def test_time_profile_noon():
    base = int(dt.datetime(2020, 3, 1, tzinfo=dt.timezone.utc).timestamp())
    prof = time_profile([base + 12 * 3600 + 86400 * d for d in range(10)], 60)
    (year, arr), = prof.items()
    assert year == 2020 and np.count_nonzero(arr) == 1 and arr[12] == pytest.approx(10 / (60 * 10))


def test_time_profile_rotation():
    rng = np.random.default_rng(2)
    base = int(dt.datetime(2021, 2, 1, tzinfo=dt.timezone.utc).timestamp())
    ts = base + rng.integers(0, 86400 * 20, 3000)
    a = time_profile(ts, 30)[2021]
    b = time_profile(ts, 30, tz_offset_minutes=120)[2021]
    np.testing.assert_allclose(np.roll(a, 4), b)
    with pytest.raises(UsageError):
        time_profile(ts, 7)


def test_time_profile_flat(small):
    _, _, forum = small
    prof = time_profile([p.timestamp for p in forum.posts], 240)
    arr = np.concatenate(list(prof.values()))
    assert arr.std() / arr.mean() < 0.15
