import datetime as dt
import hashlib

import pytest

from pseudaudit.scheme import (
    DEFAULT_REGIMES,
    NOISE_SLICE,
    ConfigError,
    RangeError,
    Regime,
    SchemeConfig,
    SliceRegime,
    digest_for,
    parse_dotted,
    regime_slice_for,
    render_dotted,
    username_for,
)

ADDR = parse_dotted("131.111.5.175")


@pytest.mark.parametrize(
    "value,text",
    [(2189728028, "130.132.153.28"), (0, "0.0.0.0"), (4294967295, "255.255.255.255")],
)
def test_render_dotted(value, text):
    assert render_dotted(value) == text
    assert parse_dotted(text) == value


@pytest.mark.parametrize("bad", ["1.2.3", "1.2.3.256", "01.2.3.4", "a.b.c.d", "1.2.3.4.5"])
def test_parse_dotted_rejects(bad):
    with pytest.raises(ValueError):
        parse_dotted(bad)


def test_render_rejects_out_of_range():
    with pytest.raises(ValueError):
        render_dotted(1 << 32)


def test_known_digest():
    assert digest_for(227259, ADDR, SchemeConfig()) == "e8b5eae32c2b197a0ac4cb889a9bbb8f417f3bff"


def test_sha1_reference_vector():
    assert hashlib.sha1(b"abc").hexdigest() == "a9993e364706816aba3e25717850c26c9cd0d89d"


@pytest.mark.parametrize("start,name", [(8, "2c2b"), (9, "c2b1"), (10, "2b19")])
def test_known_usernames(start, name):
    assert username_for(227259, ADDR, SchemeConfig(slice_start=start)) == name


def test_salt_changes_digest():
    assert digest_for(227259, ADDR, SchemeConfig(salt=b"x")) != digest_for(227259, ADDR, SchemeConfig())


def test_config_validation():
    with pytest.raises(ConfigError):
        SchemeConfig(hash_algorithm="sha3")
    with pytest.raises(ConfigError):
        SchemeConfig(slice_start=37)
    with pytest.raises(ConfigError):
        SchemeConfig(hash_algorithm="md5", slice_start=29)
    with pytest.raises(ConfigError):
        SchemeConfig(address_space_bits=33)
    assert SchemeConfig(slice_start=36).username_bits == 16


def test_space_base():
    c = SchemeConfig(address_space_bits=24, high_octet=172)
    assert c.space_base == parse_dotted("172.0.0.0")
    assert c.space_size == 1 << 24
    assert c.in_space(parse_dotted("172.255.255.255"))
    assert not c.in_space(parse_dotted("173.0.0.0"))
    assert SchemeConfig().space_base == 0


def test_default_regimes():
    assert regime_slice_for(dt.date(2012, 1, 1), DEFAULT_REGIMES) == (8,)
    assert regime_slice_for(dt.date(2015, 6, 1), DEFAULT_REGIMES) == (9,)
    assert regime_slice_for(dt.date(2013, 7, 8), DEFAULT_REGIMES) == (8, 9)
    assert regime_slice_for(dt.date(2013, 7, 7), DEFAULT_REGIMES) == (8,)
    assert NOISE_SLICE == 10
    with pytest.raises(RangeError):
        regime_slice_for(dt.date(2024, 1, 1), DEFAULT_REGIMES)


def test_regime_table_roundtrip():
    text = DEFAULT_REGIMES.dumps()
    assert SliceRegime.parse(text.splitlines()) == DEFAULT_REGIMES
    assert DEFAULT_REGIMES.cutoffs == [dt.date(2013, 7, 8)]


def test_regime_table_rejects_gaps():
    with pytest.raises(ConfigError):
        SliceRegime(
            (Regime(dt.date(2020, 1, 1), dt.date(2020, 1, 5), 8), Regime(dt.date(2020, 1, 7), dt.date(2020, 2, 1), 9))
        )
    with pytest.raises(ConfigError):
        SliceRegime.parse(["2020-01-01,2020-01-05"])
