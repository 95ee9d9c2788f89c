import datetime as dt

import pytest

from pseudaudit import synthgen
from pseudaudit.scheme import SchemeConfig

# A 2**16-address space keeps every hash pass to a fraction of a second.
SMALL_SCHEME = SchemeConfig(address_space_bits=16, high_octet=172)


def small_forum(**kw) -> synthgen.ForumConfig:
    base = dict(days=14, topics_per_day=6, posts_per_topic=10, seed=7, scheme=SMALL_SCHEME, start=dt.date(2016, 5, 2))
    base.update(kw)
    return synthgen.ForumConfig(**base)


@pytest.fixture(scope="session")
def small():
    cfg = small_forum()
    pop = synthgen.PopulationModel(n_addresses=40)
    return cfg, pop, synthgen.generate(pop, cfg)


# Two-character usernames over a /16 give ~257 candidates per username,
# the same ratio as the full-scale scheme, at a tiny fraction of the cost.
TINY_SCHEME = SchemeConfig(username_len=2, address_space_bits=16, high_octet=172)


def build_store(posts, scheme, positions, root):
    from collections import defaultdict

    from pseudaudit.enumeration import TopicWorkOrder, enumerate_store

    topics = defaultdict(set)
    for p in posts:
        topics[p.topic].add(p.username)
    work = [TopicWorkOrder.build(t, u, positions) for t, u in sorted(topics.items())]
    return enumerate_store(work, scheme, root)


@pytest.fixture(scope="session")
def tiny(tmp_path_factory):
    """Small forum under TINY_SCHEME with sha1 (slices 9, 10) and md5 (slice 9) stores."""
    import dataclasses

    cfg = small_forum(scheme=TINY_SCHEME, days=21)
    forum = synthgen.generate(synthgen.PopulationModel(n_addresses=40), cfg)
    root = tmp_path_factory.mktemp("tiny")
    sha = build_store(forum.posts, TINY_SCHEME, [9, 10], root / "sha1")
    md5 = build_store(forum.posts, dataclasses.replace(TINY_SCHEME, hash_algorithm="md5"), [9], root / "md5")
    return cfg, forum, sha, md5


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
