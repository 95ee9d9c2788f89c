"""End-to-end acceptance checks, one test per criterion.

Each test records a ``criterion N: PASS|FAIL`` line that is printed
immediately and repeated in the pytest terminal summary.  The default-forum
criteria share CLI runs built once per module (about 15 minutes on one core
in total, most of it address-space enumeration).  Set
``PSEUDAUDIT_SKIP_FULL_SCALE=1`` to skip the 2**32 scan of criterion 2.
"""

import datetime as dt
import math
import os
import random
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from pseudaudit import attribute, synthgen
from pseudaudit.analytics import extrapolate_population, fit_stretched_exponential
from pseudaudit.cli import main, strip_run_timestamp
from pseudaudit.enumeration import (
    CandidateStore,
    TopicWorkOrder,
    candidates_for_topic,
    find_suffix_preimages,
    intersect,
    username_histogram,
)
from pseudaudit.pbnull import log_survival, match_prob, window_pmf
from pseudaudit.scheme import SchemeConfig, SliceRegime, digest_for, parse_dotted, render_dotted
from pseudaudit.textnorm import Normalizer
from pseudaudit.validate import bogon_check, default_bogons, uniformity_chi2

from conftest import ACCEPTANCE
from test_pbnull import exact_pmf, flog

FIXTURES = Path(__file__).parent / "fixtures"


def record(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE.append(line)
    print(line)
    assert ok, line


def cli(*args) -> int:
    return main([str(a) for a in args])


# --------------------------------------------------------------------------
# shared runs on the default synthetic forum (A = 24, 60 days, 300 addresses)


def _pipeline(wd: Path) -> None:
    forum = synthgen.ForumConfig()
    noise = wd / "noise_regimes.csv"
    noise.write_text(SliceRegime.single(forum.start, forum.end, 10).dumps())
    for cmd in ("simulate", "enumerate", "calibrate", "assign"):
        assert cli(cmd, "--workdir", wd) == 0, cmd
    assert cli("assign", "--workdir", wd, "--regimes", noise, "--assignments", wd / "noise_assignments.csv") == 0


@pytest.fixture(scope="module")
def default_run(tmp_path_factory):
    wd = tmp_path_factory.mktemp("default")
    t = time.time()
    _pipeline(wd)
    return wd, time.time() - t


@pytest.fixture(scope="module")
def md5_run(default_run):
    wd, _ = default_run
    out = wd / "md5"
    out.mkdir()
    args = ["--workdir", wd, "--hash", "md5", "--store", out / "store", "--calibration", out / "calibration.json"]
    for cmd in ("enumerate", "calibrate"):
        assert cli(cmd, *args) == 0, cmd
    assert cli("assign", *args, "--assignments", out / "assignments.csv") == 0
    return out


@pytest.fixture(scope="module")
def switch_run(tmp_path_factory):
    wd = tmp_path_factory.mktemp("switch")
    for cmd in ("simulate", "enumerate"):
        assert cli(cmd, "--workdir", wd, "--switch-day", 30) == 0, cmd
    assert cli("scan-positions", "--workdir", wd, "--switch-day", 30, "--scan-positions", "8,9,10") == 0
    return wd


# --------------------------------------------------------------------------


def test_c01_digest_reproduction():
    t = time.perf_counter()
    addr = parse_dotted("131.111.5.175")
    d = digest_for(227259, addr, SchemeConfig())
    slices = [d[s : s + 4] for s in (8, 9, 10)]
    ms = 1000 * (time.perf_counter() - t)
    ok = d == "e8b5eae32c2b197a0ac4cb889a9bbb8f417f3bff" and slices == ["2c2b", "c2b1", "2b19"] and ms < 1
    record(1, ok, f"digest={d} slices={slices} ({ms:.3f} ms)")


@pytest.mark.slow
@pytest.mark.skipif(os.environ.get("PSEUDAUDIT_SKIP_FULL_SCALE") == "1", reason="full 2**32 scan disabled")
def test_c02_full_scale_candidates():
    cfg = SchemeConfig(address_space_bits=32)
    t = time.time()
    a = candidates_for_topic(TopicWorkOrder.build(227259, ["c2b1"], [9]), cfg)[0]
    b = candidates_for_topic(TopicWorkOrder.build(227279, ["91c2"], [9]), cfg)[0]
    both = [render_dotted(x) for x in intersect([a, b])]
    ok = len(a) == 65028 and len(b) == 65635 and both == ["131.111.5.175"]
    record(2, ok, f"|c2b1|={len(a)} |91c2|={len(b)} intersection={both} ({time.time() - t:.0f} s, 1 core)")


def test_c03_suffix_preimage():
    t = time.time()
    got = find_suffix_preimages("6234", "5e20ae8b8d359278fcb3a160ddd74986e7b1db02", 42)
    el = time.time() - t
    record(3, len(got) == 1 and el < 120, f"preimages={[render_dotted(a) for a in got]} ({el:.1f} s)")


def test_c04_null_oracle():
    rng = random.Random(4)
    worst = 0.0
    for _ in range(200):
        T = rng.randint(1, 12)
        loads = [rng.choice((rng.randint(1, 8), rng.randint(1, 1 << 16))) for _ in range(T)]
        pmf = exact_pmf(loads)
        table = window_pmf(loads, c_max=T)
        for n in range(T + 1):
            for got, want in ((table.log_pmf[n], flog(pmf[n])), (log_survival(table, n), flog(sum(pmf[n:], Fraction(0))))):
                if want == 0.0 or want == -math.inf:
                    err = 0.0 if got == want else math.inf
                else:
                    err = abs(got - want) / abs(want)
                worst = max(worst, err)
    record(4, worst <= 1e-12, f"max relative log error {worst:.2e} over 200 loads")


def test_c05_match_prob_identity():
    bad = [k for k in range(1, 65537) if match_prob(k, 16) * 65536 != k]
    record(5, not bad, f"{65536 - len(bad)}/65536 exact")


def test_c06_noise_zero(default_run):
    wd, secs = default_run
    n = len(attribute.read_assignments(wd / "noise_assignments.csv"))
    cal = attribute.Calibration.from_json((wd / "calibration.json").read_text())
    th = {k: round(cal.thresholds.log(k) / math.log(10), 2) for k in attribute.WINDOW_KINDS}
    in_range = all(cal.thresholds.log(k) < math.log(1e-6) for k in attribute.WINDOW_KINDS)
    record(6, n == 0 and in_range, f"noise-position assignments={n}, log10 thresholds={th} (pipeline {secs:.0f} s)")


def test_c07_wrong_hash(md5_run):
    n = len(attribute.read_assignments(md5_run / "assignments.csv"))
    record(7, n == 0, f"md5 assignments={n}")


def test_c08_bogons(default_run, md5_run):
    wd, _ = default_run
    files = [wd / "assignments.csv", wd / "noise_assignments.csv", md5_run / "assignments.csv"]
    bogons = default_bogons()
    counts = [bogon_check([r.address for r in attribute.read_assignments(f)], bogons) for f in files]
    ok = sum(counts) == 0 and cli("validate", "--workdir", wd) == 0
    record(8, ok, f"bogon assignments per output={counts}")


def test_c09_ground_truth(default_run):
    wd, _ = default_run
    assert cli("validate", "--workdir", wd) in (0, 1)
    import json

    s = json.loads((wd / "score.json").read_text())["score"]
    ok = s["precision"] >= 0.999 and s["heavy_recall"] >= 0.99
    record(
        9,
        ok,
        f"precision={s['precision']:.5f} heavy_recall={s['heavy_recall']:.4f} "
        f"recall={s['recall']:.4f} heavy_addresses={s['heavy_addresses']}",
    )


def test_c10_regime_switch(switch_run):
    line = next(l for l in (switch_run / "scan.csv").read_text().splitlines() if l.startswith("# crossings:"))
    hit = dict(x.split(":") for x in line.split(": ", 1)[1].split())["8->9"]
    switch = synthgen.ForumConfig().start + dt.timedelta(days=30)
    ok = hit != "none" and abs((dt.date.fromisoformat(hit) - switch).days) <= 7
    record(10, ok, f"switch {switch}, detected week starting {hit}")


def test_c11_uniformity():
    true = uniformity_chi2(username_histogram(227259, SchemeConfig(address_space_bits=24, high_octet=131)))
    degenerate = np.zeros(1 << 16)
    degenerate[7] = 1 << 24
    deg = uniformity_chi2(degenerate)
    toys = [
        uniformity_chi2(username_histogram(227259, SchemeConfig(alg, username_len=2, slice_start=38, address_space_bits=16, high_octet=131)))
        for alg in ("first_letter", "byte_sum")
    ]
    ok = not true.rejects(0.01) and deg.rejects(0.01) and all(t.rejects(0.01) for t in toys)
    record(
        11,
        ok,
        f"sha1 p={true.p_value:.3f}; degenerate log p={deg.log_p:.3g}; "
        f"first_letter/byte_sum log p={toys[0].log_p:.3g}/{toys[1].log_p:.3g}",
    )


def test_c12_candidate_sizes(default_run):
    wd, _ = default_run
    store = CandidateStore(wd / "store")
    posts = synthgen.read_dump(wd / "dump.csv")
    pairs = sorted({(p.topic, p.username) for p in posts})
    sizes = np.array([store.candidates(t, 9, u).size for t, u in pairs], np.float64)
    se = sizes.std(ddof=1) / math.sqrt(sizes.size)
    z = (sizes.mean() - 257) / se
    record(12, abs(z) <= 3, f"mean={sizes.mean():.3f} over {sizes.size} sets, se={se:.3f}, z={z:+.2f}")


def test_c13_stretched_exponential():
    r = np.arange(1, 5001)
    fit = fit_stretched_exponential(np.exp(10 - 0.5 * r**0.4))
    err = max(abs(fit.a - 10), abs(fit.b - 0.5), abs(fit.c - 0.4))
    pop = synthgen.PopulationModel()
    n_star, _ = extrapolate_population(fit_stretched_exponential(pop.weights()))
    rel = abs(n_star - pop.n_addresses) / pop.n_addresses
    record(13, err < 1e-6 and rel <= 0.05, f"max param error {err:.1e}; N*={n_star} vs {pop.n_addresses}")


def test_c14_textnorm():
    norm = Normalizer()
    cases = {
        "d4mn j3ws": "damn jews",
        "fa//g//g//ot": "faggot",
        "a$$h01e": "asshole",
        "yt": "yt",
    }
    got = {k: norm(k) for k in cases}
    corpus = (FIXTURES / "corpus.txt").read_text().splitlines()
    unstable = [p for p in corpus if norm(norm(p)) != norm(p)]
    ok = got == cases and "faggot" in norm.lexicon and not unstable
    record(14, ok, f"{got}; idempotent on {len(corpus) - len(unstable)}/{len(corpus)} corpus posts")


def test_c15_determinism(default_run, tmp_path_factory):
    wd, _ = default_run
    again = tmp_path_factory.mktemp("repeat")
    _pipeline(again)
    same = {
        name: strip_run_timestamp((wd / name).read_text()) == strip_run_timestamp((again / name).read_text())
        for name in ("assignments.csv", "noise_assignments.csv")
    }
    record(15, all(same.values()), f"byte-identical after dropping run_timestamp: {same}")
