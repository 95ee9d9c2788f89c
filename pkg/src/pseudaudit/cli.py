"""Command-line front end.

Commands compose as a pipeline: simulate, enumerate, calibrate, assign,
scan-positions, validate, normalize-text, report.  Settings come from a flat
``section.key = value`` config file; every flag overrides its key.  Exit
codes: 0 success, 1 validation failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import datetime as dt
import hashlib
import json
import logging
import math
import sys
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import __version__
from . import analytics, attribute, chrono, synthgen, textnorm, validate
from .enumeration import CandidateStore, MissingCandidates, TopicWorkOrder, enumerate_store
from .scheme import DEFAULT_REGIMES, ConfigError, RangeError, SchemeConfig, SliceRegime

log = logging.getLogger("pseudaudit")

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2

DEFAULTS: dict[str, str] = {
    "run.seed": "20240101",
    "run.workers": "1",
    "paths.workdir": ".",
    "paths.dump": "{workdir}/dump.csv",
    "paths.truth": "{workdir}/truth.csv",
    "paths.regimes": "{workdir}/regimes.csv",
    "paths.store": "{workdir}/store",
    "paths.calibration": "{workdir}/calibration.json",
    "paths.assignments": "{workdir}/assignments.csv",
    "paths.score": "{workdir}/score.json",
    "paths.scan": "{workdir}/scan.csv",
    "paths.report": "{workdir}/report.json",
    "paths.anchors": "",
    "paths.bogons": "",
    "paths.labels": "",
    "paths.lexicon": "",
    "paths.profanity": "",
    "paths.skiplist": "",
    "paths.canon": "",
    "paths.leet": "",
    "scheme.hash": "sha1",
    "scheme.salt_hex": "",
    "scheme.slice_start": "9",
    "scheme.username_len": "4",
    "scheme.address_space_bits": "24",
    "scheme.high_octet": "172",
    "forum.days": "60",
    "forum.start": synthgen.DEFAULT_START.isoformat(),
    "forum.topics_per_day": repr(25 / 3),
    "forum.posts_per_topic": "20",
    "forum.lifetime_days": "1",
    "forum.first_topic": "1000001",
    "forum.switch_day": "",
    "population.n_addresses": "300",
    "population.activity_law": "stretched",
    "population.b": "0.9",
    "population.c": "0.45",
    "population.churn_rate": "0",
    "enumerate.positions": "",
    "windows.kinds": "7,31,91",
    "windows.noise_positions": "",
    "windows.family_alpha": "0.01",
    "windows.p7": "",
    "windows.p31": "",
    "windows.p91": "",
    "scan.positions": "",
    "validate.min_precision": "0.999",
    "report.top_fraction": "0.05",
    "report.fit_ranks": "",
    "report.bucket_minutes": "60",
    "report.tz_offset_minutes": "0",
    "text.column": "text",
    "text.in": "",
    "text.out": "",
}

# keys that locate files rather than define the experiment
_LOCATION_PREFIXES = ("paths.", "text.in", "text.out")


class UsageFailure(Exception):
    """Raised for problems that map to exit code 2."""


def parse_config_text(text: str, source: str = "<config>") -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageFailure(f"{source}:{lineno}: expected 'section.key = value'")
        key, value = (x.strip() for x in line.split("=", 1))
        if key not in DEFAULTS:
            raise UsageFailure(f"{source}:{lineno}: unknown key {key!r}")
        out[key] = value
    return out


@dataclass
class RunConfig:
    values: dict[str, str] = field(default_factory=lambda: dict(DEFAULTS))

    @classmethod
    def build(cls, config_path: str | None, overrides: dict[str, str]) -> "RunConfig":
        values = dict(DEFAULTS)
        if config_path:
            p = Path(config_path)
            if not p.exists():
                raise UsageFailure(f"config file not found: {p}")
            values.update(parse_config_text(p.read_text(), str(p)))
        for k, v in overrides.items():
            if k not in DEFAULTS:
                raise UsageFailure(f"unknown key {k!r}")
            values[k] = v
        return cls(values)

    def raw(self, key: str) -> str:
        return self.values[key]

    def str(self, key: str) -> str:
        return self.values[key].replace("{workdir}", self.values["paths.workdir"])

    def path(self, key: str) -> Path | None:
        v = self.str(key)
        return Path(v) if v else None

    def int(self, key: str) -> int:
        try:
            return int(self.values[key])
        except ValueError:
            raise UsageFailure(f"{key} must be an integer, got {self.values[key]!r}") from None

    def float(self, key: str) -> float:
        try:
            return float(self.values[key])
        except ValueError:
            raise UsageFailure(f"{key} must be a number, got {self.values[key]!r}") from None

    def ints(self, key: str) -> list[int]:
        v = self.values[key].strip()
        try:
            return [int(x) for x in v.split(",") if x.strip()] if v else []
        except ValueError:
            raise UsageFailure(f"{key} must be a comma-separated list of integers") from None

    def digest(self) -> str:
        items = sorted((k, v) for k, v in self.values.items() if not k.startswith(_LOCATION_PREFIXES))
        return hashlib.sha256(json.dumps(items).encode()).hexdigest()[:16]

    def header(self) -> list[str]:
        now = dt.datetime.now(dt.timezone.utc).replace(microsecond=0).isoformat()
        return [
            f"tool: pseudaudit {__version__}",
            f"seed: {self.raw('run.seed')}",
            f"config_digest: {self.digest()}",
            f"run_timestamp: {now}",
        ]

    def header_dict(self) -> dict:
        return dict(line.split(": ", 1) for line in self.header())

    def scheme(self) -> SchemeConfig:
        try:
            return SchemeConfig(
                hash_algorithm=self.raw("scheme.hash"),
                salt=bytes.fromhex(self.raw("scheme.salt_hex")),
                slice_start=self.int("scheme.slice_start"),
                username_len=self.int("scheme.username_len"),
                address_space_bits=self.int("scheme.address_space_bits"),
                high_octet=self.int("scheme.high_octet"),
            )
        except ValueError as exc:
            raise UsageFailure(f"scheme: {exc}") from None


def require(path: Path | None, what: str) -> Path:
    if path is None or not path.exists():
        raise UsageFailure(f"missing {what}: {path}")
    return path


def strip_run_timestamp(text: str) -> str:
    """Drop the only line allowed to differ between identical runs."""
    return "".join(l for l in text.splitlines(True) if "run_timestamp" not in l)


# --------------------------------------------------------------------------
# shared loaders


def _regimes(cfg: RunConfig) -> SliceRegime:
    p = cfg.path("paths.regimes")
    if p is not None and p.exists():
        try:
            return SliceRegime.load(p)
        except ConfigError as exc:
            raise UsageFailure(str(exc)) from None
    return DEFAULT_REGIMES


def _posts(cfg: RunConfig) -> list[synthgen.Post]:
    return synthgen.read_dump(require(cfg.path("paths.dump"), "dump"))


def _noise_positions(cfg: RunConfig, regimes: SliceRegime) -> list[int]:
    return cfg.ints("windows.noise_positions") or [max(regimes.slices()) + 1]


def _store(cfg: RunConfig, scheme: SchemeConfig) -> CandidateStore:
    root = require(cfg.path("paths.store"), "candidate store")
    store = CandidateStore(root)
    meta = store.meta
    for key, want in (
        ("hash_algorithm", scheme.hash_algorithm),
        ("address_space_bits", scheme.address_space_bits),
        ("high_octet", scheme.high_octet),
        ("username_len", scheme.username_len),
    ):
        if key in meta and meta[key] != want:
            raise UsageFailure(f"store {root} was built with {key}={meta[key]!r}, config says {want!r}")
    return store


def _bogons(cfg: RunConfig) -> validate.CidrSet:
    p = cfg.path("paths.bogons")
    return validate.load_cidr_file(require(p, "bogon list")) if p else validate.default_bogons()


# --------------------------------------------------------------------------
# commands


def cmd_simulate(cfg: RunConfig) -> int:
    scheme = cfg.scheme()
    forum = synthgen.ForumConfig(
        days=cfg.int("forum.days"),
        start=dt.date.fromisoformat(cfg.raw("forum.start")),
        topics_per_day=cfg.float("forum.topics_per_day"),
        posts_per_topic=cfg.float("forum.posts_per_topic"),
        lifetime_days=cfg.float("forum.lifetime_days"),
        first_topic=cfg.int("forum.first_topic"),
        seed=cfg.int("run.seed"),
        scheme=scheme,
    )
    if cfg.raw("forum.switch_day"):
        forum = synthgen.inject_regime_switch(forum, cfg.int("forum.switch_day"))
    pop = synthgen.PopulationModel(
        n_addresses=cfg.int("population.n_addresses"),
        activity_law=cfg.raw("population.activity_law"),
        b=cfg.float("population.b"),
        c=cfg.float("population.c"),
        churn_rate=cfg.float("population.churn_rate"),
        bogons=_bogons(cfg),
    )
    result = synthgen.generate(pop, forum)
    header = cfg.header()
    for key in ("paths.dump", "paths.truth", "paths.regimes"):
        cfg.path(key).parent.mkdir(parents=True, exist_ok=True)
    synthgen.write_dump(result.posts, cfg.path("paths.dump"), header)
    synthgen.write_truth(result.truth, cfg.path("paths.truth"), header)
    cfg.path("paths.regimes").write_text("".join(f"# {h}\n" for h in header) + forum.regime_table().dumps())
    log.info("simulated %d posts in %d topics", len(result.posts), len({p.topic for p in result.posts}))
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    scheme = cfg.scheme()
    posts = _posts(cfg)
    regimes = _regimes(cfg)
    positions = cfg.ints("enumerate.positions")
    if not positions:
        index = attribute.PostIndex(posts, regimes=regimes)
        positions = sorted(set(index.slices_needed()) | set(_noise_positions(cfg, regimes)))
    by_topic: dict[int, set[str]] = defaultdict(set)
    for p in posts:
        by_topic[p.topic].add(p.username)
    work = [TopicWorkOrder.build(t, us, positions) for t, us in sorted(by_topic.items())]

    def progress(done: int, total: int) -> None:
        if done == total or done % 50 == 0:
            log.info("enumerated %d/%d topics", done, total)

    enumerate_store(work, scheme, cfg.path("paths.store"), cfg.int("run.workers"), cfg.header_dict(), progress)
    return EXIT_OK


def cmd_calibrate(cfg: RunConfig) -> int:
    scheme = cfg.scheme()
    posts = _posts(cfg)
    regimes = _regimes(cfg)
    store = _store(cfg, scheme)
    alpha = cfg.raw("windows.family_alpha")
    runs = {}
    for pos in _noise_positions(cfg, regimes):
        index = attribute.PostIndex(posts, position=pos)
        runs[pos] = attribute.min_log_p(index, store, scheme, attribute.WINDOW_KINDS, cfg.int("run.workers"))
    try:
        cal = attribute.calibrate(runs, float(alpha) if alpha else None)
    except attribute.CalibrationError as exc:
        raise UsageFailure(f"calibration failed: {exc}") from None
    out = cfg.path("paths.calibration")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(cal.to_json(cfg.header_dict()))
    for k in attribute.WINDOW_KINDS:
        log.info("%d-day threshold p* = %.3e", k, math.exp(cal.thresholds.log(k)))
    return EXIT_OK


def _thresholds(cfg: RunConfig) -> attribute.Thresholds:
    over = [cfg.raw(f"windows.p{k}") for k in attribute.WINDOW_KINDS]
    if all(over):
        try:
            return attribute.Thresholds.from_p(*(float(x) for x in over))
        except ValueError as exc:
            raise UsageFailure(str(exc)) from None
    p = cfg.path("paths.calibration")
    if p is None or not p.exists():
        raise UsageFailure(f"missing thresholds: run 'calibrate' first (no {p}) or set windows.p7/p31/p91")
    th = attribute.Calibration.from_json(p.read_text()).thresholds
    # individual overrides for sensitivity studies
    logs = [math.log(float(o)) if o else th.log(k) for o, k in zip(over, attribute.WINDOW_KINDS)]
    return attribute.Thresholds(*logs)


def cmd_assign(cfg: RunConfig) -> int:
    scheme = cfg.scheme()
    thresholds = _thresholds(cfg)
    posts = _posts(cfg)
    store = _store(cfg, scheme)
    kinds = cfg.ints("windows.kinds")
    if not kinds or any(k not in attribute.WINDOW_HALF for k in kinds):
        raise UsageFailure("windows.kinds must list some of 7, 31, 91")
    index = attribute.PostIndex(posts, regimes=_regimes(cfg))
    recs = attribute.run_pipeline(index, store, scheme, thresholds, kinds, cfg.int("run.workers"))
    out = cfg.path("paths.assignments")
    out.parent.mkdir(parents=True, exist_ok=True)
    attribute.write_assignments(recs, out, cfg.header())
    log.info("assigned %d of %d posts", len(recs), len(posts))
    return EXIT_OK


def cmd_scan_positions(cfg: RunConfig) -> int:
    scheme = cfg.scheme()
    posts = _posts(cfg)
    store = _store(cfg, scheme)
    positions = cfg.ints("scan.positions")
    if len(positions) < 2:
        raise UsageFailure("scan.positions needs at least two positions")
    series = attribute.scan_positions(posts, store, scheme, positions, cfg.int("run.workers"))
    out = cfg.path("paths.scan")
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as fh:
        for h in cfg.header():
            fh.write(f"# {h}\n")
        crossings = []
        for a, b in zip(positions, positions[1:]):
            pt = attribute.detect_crossing(series, a, b)
            crossings.append(f"{a}->{b}:{pt.start.isoformat() if pt else 'none'}")
        fh.write(f"# crossings: {' '.join(crossings)}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["week", "week_start", "posts"] + [f"mean_p_{p}" for p in positions] + [f"mean_log10_p_{p}" for p in positions])
        for pt in series:
            w.writerow(
                [pt.week, pt.start.isoformat(), pt.posts]
                + [f"{pt.mean_p[p]:.6e}" for p in positions]
                + [f"{pt.mean_log10_p[p]:.6f}" for p in positions]
            )
    for c in crossings:
        log.info("crossing %s", c)
    return EXIT_OK


def cmd_validate(cfg: RunConfig) -> int:
    recs = attribute.read_assignments(require(cfg.path("paths.assignments"), "assignments"))
    bad = validate.bogon_check([r.address for r in recs], _bogons(cfg))
    status = EXIT_OK
    body: dict = {"_header": cfg.header_dict(), "bogon_assignments": bad}
    if bad:
        log.error("%d assignments fall in bogon ranges", bad)
        status = EXIT_INVALID
    truth_path = cfg.path("paths.truth")
    if truth_path is not None and truth_path.exists():
        truth = synthgen.read_truth(truth_path)
        posts = _posts(cfg)
        try:
            rep = validate.score(
                {r.post_id: r.address for r in recs},
                truth,
                {p.post_id: p.topic for p in posts},
                {p.post_id: p.date for p in posts},
            )
        except validate.DataError as exc:
            raise UsageFailure(str(exc)) from None
        body["score"] = json.loads(rep.to_json())
        floor = cfg.float("validate.min_precision")
        if rep.precision is not None and rep.precision < floor:
            log.error("precision %.5f below %.5f", rep.precision, floor)
            status = EXIT_INVALID
        log.info("precision=%s recall=%.4f heavy_recall=%s", rep.precision, rep.recall, rep.heavy_recall)
    out = cfg.path("paths.score")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(body, indent=1, sort_keys=True) + "\n")
    return status


def cmd_normalize_text(cfg: RunConfig) -> int:
    src = require(cfg.path("text.in"), "input text CSV (--in)")
    dst = cfg.path("text.out")
    if dst is None:
        raise UsageFailure("missing output path (--out)")
    norm = textnorm.Normalizer(
        textnorm.Lexicon.load(cfg.path("paths.lexicon"), cfg.path("paths.profanity")),
        textnorm.SubstitutionTable.load(cfg.path("paths.leet")),
        textnorm.CanonMap.load(cfg.path("paths.canon")),
        textnorm.load_skiplist(cfg.path("paths.skiplist")),
    )
    column = cfg.raw("text.column")
    with open(src, newline="") as fh:
        reader = csv.DictReader(line for line in fh if not line.startswith("#"))
        if reader.fieldnames is None or column not in reader.fieldnames:
            raise UsageFailure(f"{src} has no column {column!r}")
        fields = list(reader.fieldnames)
        rows = [dict(r, **{column: norm(r[column])}) for r in reader]
    with open(dst, "w", newline="") as fh:
        for h in cfg.header():
            fh.write(f"# {h}\n")
        w = csv.DictWriter(fh, fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    return EXIT_OK


def cmd_report(cfg: RunConfig) -> int:
    recs = attribute.read_assignments(require(cfg.path("paths.assignments"), "assignments"))
    posts = _posts(cfg)
    body: dict = {"_header": cfg.header_dict(), "assigned_posts": len(recs), "posts": len(posts)}
    if recs:
        counts = analytics.rank_counts(r.address for r in recs)
        body["addresses"] = int(counts.size)
        body["concentration"] = {
            "top_fraction": cfg.float("report.top_fraction"),
            "share": float(analytics.concentration(counts, cfg.float("report.top_fraction"))),
        }
        R = cfg.int("report.fit_ranks") if cfg.raw("report.fit_ranks") else int(counts.size)
        if counts.size >= 3:
            fit = analytics.fit_stretched_exponential(counts, min(R, int(counts.size)))
            body["stretched_exponential"] = {"a": fit.a, "b": fit.b, "c": fit.c, "R": fit.R, "rss": fit.rss}
            try:
                n_star, total = analytics.extrapolate_population(fit)
                body["stretched_exponential"].update(n_star=n_star, predicted_posts=total)
            except analytics.InvalidFit as exc:
                body["stretched_exponential"]["error"] = str(exc)
    labels = cfg.path("paths.labels")
    if labels is not None:
        table = analytics.LabelTable.load(require(labels, "label table"))
        agg = analytics.label_aggregate([r.address for r in recs], table)
        body["labels"] = {k: {"posts": n, "share": s} for k, (n, s) in agg.items()}
    prof = analytics.time_profile(
        (p.timestamp for p in posts), cfg.int("report.bucket_minutes"), cfg.int("report.tz_offset_minutes")
    )
    body["time_profile"] = {str(y): [round(float(x), 9) for x in v] for y, v in prof.items()}
    anchors = cfg.path("paths.anchors")
    if anchors is not None:
        a = chrono.read_anchors(require(anchors, "anchors"))
        g = chrono.gap_stats(a, (p.post_id for p in posts))
        body["anchor_gaps"] = {"pairs": g.n, "mean_s": g.mean, "p95_s": g.p95, "p99_s": g.p99}
    out = cfg.path("paths.report")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(body, indent=1, sort_keys=True) + "\n")
    return EXIT_OK


COMMANDS = {
    "simulate": cmd_simulate,
    "enumerate": cmd_enumerate,
    "calibrate": cmd_calibrate,
    "assign": cmd_assign,
    "scan-positions": cmd_scan_positions,
    "validate": cmd_validate,
    "normalize-text": cmd_normalize_text,
    "report": cmd_report,
}

# flag -> config key
FLAGS = {
    "--workdir": "paths.workdir",
    "--seed": "run.seed",
    "--workers": "run.workers",
    "--dump": "paths.dump",
    "--truth": "paths.truth",
    "--regimes": "paths.regimes",
    "--store": "paths.store",
    "--calibration": "paths.calibration",
    "--assignments": "paths.assignments",
    "--score": "paths.score",
    "--scan": "paths.scan",
    "--report": "paths.report",
    "--anchors": "paths.anchors",
    "--bogons": "paths.bogons",
    "--labels": "paths.labels",
    "--hash": "scheme.hash",
    "--address-bits": "scheme.address_space_bits",
    "--high-octet": "scheme.high_octet",
    "--days": "forum.days",
    "--switch-day": "forum.switch_day",
    "--positions": "enumerate.positions",
    "--noise-positions": "windows.noise_positions",
    "--family-alpha": "windows.family_alpha",
    "--p7": "windows.p7",
    "--p31": "windows.p31",
    "--p91": "windows.p91",
    "--scan-positions": "scan.positions",
    "--min-precision": "validate.min_precision",
    "--in": "text.in",
    "--out": "text.out",
    "--column": "text.column",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pseudaudit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"pseudaudit {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat 'section.key = value' config file")
    common.add_argument("--set", action="append", default=[], metavar="KEY=VALUE", help="override any config key")
    common.add_argument("-v", "--verbose", action="store_true")
    for flag, key in FLAGS.items():
        common.add_argument(flag, dest=key, default=None, help=f"overrides {key}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    overrides = {}
    for item in args.set:
        if "=" not in item:
            print(f"pseudaudit: --set expects KEY=VALUE, got {item!r}", file=sys.stderr)
            return EXIT_USAGE
        k, v = item.split("=", 1)
        overrides[k.strip()] = v.strip()
    for key in FLAGS.values():
        v = getattr(args, key)
        if v is not None:
            overrides[key] = v
    try:
        cfg = RunConfig.build(args.config, overrides)
        return COMMANDS[args.command](cfg)
    except (UsageFailure, ConfigError, RangeError, MissingCandidates) as exc:
        msg = exc.args[0] if isinstance(exc, MissingCandidates) and exc.args else exc
        print(f"pseudaudit {args.command}: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
