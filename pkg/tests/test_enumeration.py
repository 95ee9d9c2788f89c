import hashlib
from fractions import Fraction

import numpy as np
import pytest

from pseudaudit.enumeration import (
    CandidateSet,
    MissingCandidates,
    TopicWorkOrder,
    UsageError,
    candidate_stats,
    candidates_for_topic,
    enumerate_store,
    find_suffix_preimages,
    intersect,
    read_topic_file,
    username_histogram,
)
from pseudaudit.scheme import HASHES, SchemeConfig, hash_message, parse_dotted, render_dotted, username_for


def naive(topic, names, starts, config):
    fn = HASHES[config.hash_algorithm]
    L = config.username_len
    out = {(s, u): [] for s in starts for u in names}
    for a in range(config.space_base, config.space_base + config.space_size):
        h = fn(hash_message(topic, a, config.salt)).hex()
        for s in starts:
            key = (s, h[s : s + L])
            if key in out:
                out[key].append(a)
    return out


def check_against_naive(topic, config, starts, n_names=6, seed=0, **kw):
    rng = np.random.default_rng(seed)
    names = sorted({f"{int(x):0{config.username_len}x}" for x in rng.integers(0, 1 << config.username_bits, n_names)})
    got = candidates_for_topic(TopicWorkOrder.build(topic, names, starts), config, **kw)
    want = naive(topic, names, starts, config)
    assert [(c.slice_start, c.username) for c in got] == sorted(want)
    for c in got:
        assert c.addresses.dtype == np.uint32
        assert c.addresses.tolist() == want[(c.slice_start, c.username)]
    return got


@pytest.mark.parametrize("alg", ["sha1", "md5"])
@pytest.mark.parametrize("topic", [7, 227259, 123456789012])
def test_kernel_matches_naive_small_space(alg, topic):
    config = SchemeConfig(alg, username_len=2, address_space_bits=14, high_octet=200)
    check_against_naive(topic, config, [0, 9, 10, 25])


def test_kernel_matches_naive_multi_block():
    # A=17 spans two outer blocks of 2**16 addresses
    config = SchemeConfig(username_len=3, address_space_bits=17, high_octet=9)
    check_against_naive(42, config, [9, 37], n_names=20)


def test_salted_and_long_slices():
    config = SchemeConfig(salt=b"pepper", username_len=2, address_space_bits=12, high_octet=77)
    check_against_naive(99, config, [3, 38])


@pytest.mark.parametrize("alg", ["first_letter", "byte_sum", "sha256"])
def test_reference_path_hashes(alg):
    config = SchemeConfig(alg, username_len=2, address_space_bits=10, high_octet=5)
    check_against_naive(31, config, [0, 30 if alg != "sha256" else 50])


def test_invariant_to_workers_and_chunks():
    config = SchemeConfig(username_len=3, address_space_bits=19, high_octet=66)
    order = TopicWorkOrder.build(5151, ["abc", "000", "fff", "123"], [9, 10])
    a = candidates_for_topic(order, config, workers=1, chunk_outers=16)
    b = candidates_for_topic(order, config, workers=3, chunk_outers=1)
    for x, y in zip(a, b):
        assert (x.topic, x.username, x.slice_start) == (y.topic, y.username, y.slice_start)
        assert np.array_equal(x.addresses, y.addresses)


def test_members_rehash_to_username():
    config = SchemeConfig(address_space_bits=20, high_octet=172)
    sets = candidates_for_topic(TopicWorkOrder.build(227259, ["c2b1"], [9]), config)
    (cs,) = sets
    assert len(cs) > 0
    assert np.all(np.diff(cs.addresses.astype(np.int64)) > 0)
    for a in cs.addresses[:50].tolist():
        assert username_for(227259, a, config) == "c2b1"


def test_empty_order():
    assert candidates_for_topic(TopicWorkOrder.build(3, [], [9]), SchemeConfig()) == []


def test_order_dedups():
    o = TopicWorkOrder.build(3, ["b", "a", "b"], [10, 9, 9])
    assert o.usernames == ("a", "b") and o.slice_starts == (9, 10)


def test_histogram_matches_naive():
    config = SchemeConfig(username_len=2, address_space_bits=13, high_octet=1, slice_start=9)
    hist = username_histogram(17, config)
    want = np.zeros(256, np.int64)
    for a in range(config.space_base, config.space_base + config.space_size):
        want[int(username_for(17, a, config), 16)] += 1
    assert np.array_equal(hist, want)


def test_intersect():
    a = np.array([1, 3, 5, 7], np.uint32)
    b = np.array([3, 4, 5], np.uint32)
    assert intersect([a, b]).tolist() == [3, 5]
    assert intersect([a, a]).tolist() == a.tolist()
    assert intersect([a, np.array([2, 4], np.uint32)]).tolist() == []
    with pytest.raises(UsageError):
        intersect([])


def test_suffix_preimage_roundtrip():
    addr = parse_dotted("50.201.194.42")
    digest = hashlib.sha1(b"6234" + render_dotted(addr).encode()).hexdigest()
    assert find_suffix_preimages("6234", digest, 42) == [addr]


def test_suffix_preimage_absent():
    digest = hashlib.sha1(b"not-an-address").hexdigest()
    assert find_suffix_preimages("6234", digest, 42) == []


def test_candidate_stats():
    s = candidate_stats([CandidateSet(1, "aaaa", 9, np.array([5], np.uint32))])
    assert (s["min"], s["max"], s["mean"]) == (1, 1, Fraction(1))
    s = candidate_stats([3, 4, 8])
    assert s["mean"] == Fraction(5) and s["min"] == 3 and s["max"] == 8
    with pytest.raises(UsageError):
        candidate_stats([])


def test_store_roundtrip(tmp_path):
    config = SchemeConfig(username_len=2, address_space_bits=12, high_octet=3)
    work = [TopicWorkOrder.build(11, ["0a", "ff"], [9, 10]), TopicWorkOrder.build(12, ["7c"], [9, 10])]
    store = enumerate_store(work, config, tmp_path, header={"seed": "1"})
    assert store.username_len == 2
    direct = candidates_for_topic(work[0], config)
    for c in direct:
        assert np.array_equal(store.candidates(11, c.slice_start, c.username), c.addresses)
    topic, s, sets = read_topic_file(tmp_path / "t000000011_s09.pfc", 2)
    assert (topic, s, sorted(sets)) == (11, 9, ["0a", "ff"])
    index = store.index()
    assert [(r["topic"], r["slice_start"]) for r in index] == [(11, 9), (11, 10), (12, 9), (12, 10)]
    with pytest.raises(MissingCandidates):
        store.get(13, 9)
    with pytest.raises(MissingCandidates):
        store.candidates(12, 9, "00")


def test_store_file_layout(tmp_path):
    config = SchemeConfig(username_len=2, address_space_bits=10, high_octet=3)
    enumerate_store([TopicWorkOrder.build(5, ["ab"], [9])], config, tmp_path)
    data = (tmp_path / "t000000005_s09.pfc").read_bytes()
    assert data[:4] == b"PFC1"
    assert int.from_bytes(data[4:12], "little") == 5
    assert data[12] == 9
    assert int.from_bytes(data[13:17], "little") == 1
    assert data[17:19] == b"ab"
    n = int.from_bytes(data[19:23], "little")
    assert len(data) == 23 + 4 * n
