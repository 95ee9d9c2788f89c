import datetime as dt

import numpy as np
import pytest

from pseudaudit.scheme import SchemeConfig, parse_dotted
from pseudaudit.enumeration import username_histogram
from pseudaudit.validate import (
    CidrRange,
    CidrSet,
    DataError,
    ParseError,
    PreconditionError,
    bogon_check,
    default_bogons,
    heavy_addresses,
    load_cidr_file,
    parse_cidr_lines,
    score,
    uniformity_chi2,
)


def test_cidr_range():
    r = CidrRange.parse("10.0.0.0/8")
    assert r.first == parse_dotted("10.0.0.0") and r.last == parse_dotted("10.255.255.255")
    assert parse_dotted("10.1.2.3") in r
    assert str(r) == "10.0.0.0/8"
    with pytest.raises(ValueError):
        CidrRange(parse_dotted("10.0.0.1"), 8)
    with pytest.raises(ValueError):
        CidrRange(0, 33)


def test_parse_error_has_line_number(tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("# header\n10.0.0.0/8\n10.0.0.1/8\n")
    with pytest.raises(ParseError, match=":3:"):
        load_cidr_file(p)


def test_bogon_check_counts():
    bogons = CidrSet(parse_cidr_lines(["10.0.0.0/8"]))
    assert bogon_check([parse_dotted("10.1.2.3"), parse_dotted("11.0.0.1")], bogons) == 1
    assert bogon_check([], bogons) == 0


def test_nested_and_adjacent_ranges():
    s = CidrSet(parse_cidr_lines(["10.0.0.0/8", "10.5.0.0/16", "11.0.0.0/8"]))
    assert s.coverage == 2 << 24
    assert s.contains([parse_dotted("11.255.255.255"), parse_dotted("12.0.0.0")]).tolist() == [True, False]


def test_default_bogon_coverage():
    b = default_bogons()
    assert round(100 * b.coverage / 2**32, 2) == 13.80
    rng = np.random.default_rng(0)
    sample = rng.integers(0, 1 << 32, 400_000, dtype=np.int64)
    frac = b.contains(sample).mean()
    assert abs(frac - 0.1380) < 4 * np.sqrt(0.138 * 0.862 / sample.size)


def test_chi2_true_scheme_not_rejected():
    hist = username_histogram(227259, SchemeConfig(username_len=2, address_space_bits=16, high_octet=131))
    assert not uniformity_chi2(hist).rejects(0.01)


def test_chi2_degenerate_rejected():
    h = np.zeros(256)
    h[3] = 5000
    res = uniformity_chi2(h)
    assert res.p_value < 1e-300 and res.rejects()
    assert np.isfinite(res.log_p)


@pytest.mark.parametrize("alg", ["first_letter", "byte_sum"])
def test_chi2_non_avalanching_rejected(alg):
    hist = username_histogram(1234, SchemeConfig(alg, username_len=2, slice_start=38, address_space_bits=12, high_octet=9))
    assert uniformity_chi2(hist).rejects(0.01)


def test_chi2_precondition():
    with pytest.raises(PreconditionError):
        uniformity_chi2(np.ones(256))


def _day(n):
    return dt.date(2020, 1, 1) + dt.timedelta(days=n)


def test_heavy_addresses_window():
    truth, topic, day = {}, {}, {}
    pid = 0
    # address 1: 12 topics within 7 days; address 2: 12 topics spread over 24 days
    for i in range(12):
        for addr, d in ((1, i // 2), (2, 2 * i)):
            pid += 1
            truth[pid], topic[pid], day[pid] = addr, 100 + i, _day(d)
    assert heavy_addresses(truth, topic, day) == {1}


def test_score_counts():
    truth = {1: 10, 2: 10, 3: 20, 4: 30}
    topic = {1: 1, 2: 2, 3: 3, 4: 4}
    day = {k: _day(0) for k in truth}
    rep = score({1: 10, 3: 10, 4: 99}, truth, topic, day)
    assert (rep.assigned, rep.correct, rep.stolen) == (3, 1, 1)
    assert rep.precision == pytest.approx(1 / 3)
    assert rep.recall == pytest.approx(1 / 4)
    assert rep.stealing_rate == pytest.approx(1 / 3)
    assert score({1: 10, 2: 10}, truth).precision == 1.0
    empty = score({}, truth)
    assert empty.precision is None and empty.recall == 0.0
    with pytest.raises(DataError):
        score({9: 10}, truth)


def test_score_order_invariant():
    truth = {i: i % 7 for i in range(1, 50)}
    a = {i: (i % 7 if i % 5 else 3) for i in range(1, 50, 2)}
    b = dict(reversed(list(a.items())))
    assert score(a, truth) == score(b, truth)
