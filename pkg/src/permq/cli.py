"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error,
3 resource refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import cache
from .engine import (
    CLASS_CAP,
    DEFAULT_N_LIMIT,
    ClassPartition,
    ResourceError,
    census,
    class_of,
    enumerate_partition,
    resolve_workers,
)
from .permcore import (
    N_MAX,
    InvalidInputError,
    PatternSet,
    format_permutation,
    inversion_parity,
    parse_pattern_set,
    parse_permutation,
    rank,
)
from . import verify as V

log = logging.getLogger("permq")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# smallest n each check is claimed for
CHECK_MIN_N = {
    "closed-form": 7,
    "recurrence": 3,
    "b-count": 7,
    "leader-classes": 7,
    "parity": 1,
    "parity-moves": 4,
    "primary-classes": 7,
    "creating-primary": 5,
    "creating-primary-call-site": 5,
    "assembly": 7,
}
# checks that only make sense for the {1234, 3412} pattern set
STANDARD_ONLY = set(CHECK_MIN_N) - {"parity", "parity-moves"}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    n_values: list[int]
    patterns: PatternSet
    workers: int
    cache_dir: Path | None
    allow_big_n: bool = False
    seed: int = V.DEFAULT_SEED
    output_format: str = "json"
    samples: int = 100_000
    out: io.TextIOBase = field(default=sys.stdout, repr=False)

    def emit(self, line: str):
        self.out.write(line + "\n")


def parse_range(text: str) -> list[int]:
    """``"7"`` or ``"4..6"``; ``"9..7"`` is the empty range."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad --n value {text!r}; expected N or A..B") from None
    values = list(range(lo, hi + 1))
    for n in values:
        if not 2 <= n <= N_MAX:
            raise UsageError(f"n = {n} is outside the supported range 2..{N_MAX}")
    return values


def build_config(args, out) -> RunConfig:
    try:
        patterns = parse_pattern_set(args.patterns)
        workers = resolve_workers(args.workers)
    except (InvalidInputError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    env_cache = os.environ.get(cache.ENV_VAR)
    if args.no_cache:
        cache_dir = None
    elif env_cache:
        cache_dir = Path(env_cache)
    elif args.cache:
        cache_dir = Path(args.cache)
    else:
        cache_dir = cache.default_cache_dir()
    n_values = parse_range(args.n) if getattr(args, "n", None) is not None else []
    for n in n_values:
        if n > DEFAULT_N_LIMIT and not args.allow_big_n:
            raise ResourceError(f"n = {n} needs --allow-big-n")
    return RunConfig(
        n_values=n_values,
        patterns=patterns,
        workers=workers,
        cache_dir=cache_dir,
        allow_big_n=args.allow_big_n,
        seed=args.seed,
        output_format=args.format,
        samples=getattr(args, "samples", 100_000),
        out=out,
    )


def get_partition(cfg: RunConfig, n: int, patterns: PatternSet | None = None) -> ClassPartition:
    patterns = patterns or cfg.patterns
    if cfg.cache_dir is not None:
        part = cache.load_partition(cfg.cache_dir, n, patterns)
        if part is not None:
            log.info("cache hit: n=%d patterns=%s", n, patterns.canonical())
            return part
        log.info("cache miss: n=%d patterns=%s", n, patterns.canonical())
    part = enumerate_partition(n, patterns, workers=cfg.workers, allow_big_n=cfg.allow_big_n)
    if cfg.cache_dir is not None:
        path = cache.save_partition(cfg.cache_dir, part)
        log.info("cached partition at %s", path)
    return part


def _hist_text(hist: dict[str, int]) -> str:
    return ";".join(f"{k}:{v}" for k, v in hist.items())


def cmd_enumerate(cfg: RunConfig) -> int:
    fields = ["n", "patterns", "total_classes", "nontrivial_classes", "b_count",
              "size_histogram", "workers"]
    writer = None
    if cfg.output_format == "csv":
        writer = csv.DictWriter(cfg.out, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
    for n in cfg.n_values:
        rec = census(get_partition(cfg, n)).to_record()
        rec["workers"] = cfg.workers
        if cfg.output_format == "json":
            cfg.emit(json.dumps(rec, sort_keys=True))
        elif writer is not None:
            writer.writerow({**rec, "size_histogram": _hist_text(rec["size_histogram"])})
        else:
            cfg.emit(f"n={n} patterns={rec['patterns']} total={rec['total_classes']} "
                     f"nontrivial={rec['nontrivial_classes']} b={rec['b_count']}")
    return EXIT_OK


def _run_check(cfg: RunConfig, name: str, n: int) -> V.CheckReport:
    if name == "recurrence":
        cs = [census(get_partition(cfg, m)) for m in (n, n - 1, n - 2)]
        return V.check_recurrence(n, cs)
    if name == "b-count":
        return V.check_b_count(n, census(get_partition(cfg, n)))
    if name == "parity-moves":
        return V.check_parity_moves(n, cfg.samples, cfg.seed, cfg.patterns)
    if name in ("creating-primary", "creating-primary-call-site"):
        mode = "lemma" if name == "creating-primary" else "call-site"
        return V.check_creating_primary(n, samples=cfg.samples, seed=cfg.seed, mode=mode)
    fn = {
        "closed-form": V.check_closed_form,
        "leader-classes": V.check_leader_classes,
        "parity": V.check_parity,
        "primary-classes": V.check_primary_classes,
        "assembly": V.check_assembly,
    }[name]
    return fn(n, get_partition(cfg, n))


def cmd_verify(cfg: RunConfig, checks: list[str] | str) -> int:
    standard = cfg.patterns == V.STANDARD_PATTERNS
    if checks == "all":
        plan = [(name, n) for n in cfg.n_values for name in CHECK_MIN_N
                if n >= CHECK_MIN_N[name] and (standard or name not in STANDARD_ONLY)]
    else:
        unknown = [c for c in checks if c not in CHECK_MIN_N]
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(unknown)}; "
                             f"choose from {', '.join(CHECK_MIN_N)}")
        for name in checks:
            if not standard and name in STANDARD_ONLY:
                raise UsageError(f"check {name} applies only to patterns 1234,3412")
            for n in cfg.n_values:
                if n < CHECK_MIN_N[name]:
                    raise UsageError(f"check {name} needs n >= {CHECK_MIN_N[name]}")
        plan = [(name, n) for n in cfg.n_values for name in checks]
    failed = 0
    for name, n in plan:
        report = _run_check(cfg, name, n)
        failed += not report.passed
        if cfg.output_format == "json":
            cfg.emit(report.to_json())
        elif cfg.output_format == "csv":
            cfg.emit(f"{report.check},{n},{report.passed},{report.elapsed_ms:.3f}")
        else:
            cfg.emit(f"{'PASS' if report.passed else 'FAIL'} {report.check} n={n}"
                     + ("" if report.passed else f" {json.dumps(report.counterexample)}"))
    return EXIT_FAIL if failed else EXIT_OK


def cmd_sequence(cfg: RunConfig) -> int:
    """Nontrivial-class counts as OEIS b-file lines, always from enumeration."""
    for n in cfg.n_values:
        value = census(get_partition(cfg, n)).nontrivial_classes
        cfg.emit(f"{n} {value}")
    return EXIT_OK


def cmd_class(cfg: RunConfig, perm_text: str, cap: int = CLASS_CAP) -> int:
    try:
        perm = parse_permutation(perm_text)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None
    members = sorted(class_of(perm, cfg.patterns, cap=cap), key=rank)
    parity = {str(inversion_parity(q)) for q in members}
    tags = sorted(str(t) for t in V.tag_class(set(members)))
    rec = {
        "perm": format_permutation(perm),
        "patterns": cfg.patterns.canonical(),
        "size": len(members),
        "parity": parity.pop() if len(parity) == 1 else "mixed",
        "tags": tags,
        "members": [format_permutation(q) for q in members],
    }
    if cfg.output_format == "json":
        cfg.emit(json.dumps(rec, sort_keys=True))
    elif cfg.output_format == "csv":
        cfg.emit("member,parity")
        for q in members:
            cfg.emit(f"\"{format_permutation(q)}\",{inversion_parity(q)}")
    else:
        cfg.emit(f"class of {rec['perm']}: size={rec['size']} parity={rec['parity']} "
                 f"tags={','.join(tags)}")
        for m in rec["members"]:
            cfg.emit(m)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--patterns", default="1234,3412",
                        help="pattern set, e.g. 1234,3412 (default)")
    common.add_argument("--workers", default="auto", help="worker count or 'auto'")
    common.add_argument("--cache", default=None,
                        help="cache directory (the PERMQ_CACHE variable takes precedence)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("--seed", type=int, default=V.DEFAULT_SEED)
    common.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    common.add_argument("--allow-big-n", action="store_true",
                        help=f"permit n > {DEFAULT_N_LIMIT} (about 2 GB at n = 12)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="permq", description="Pattern-replacement equivalence classes of permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="census of S_n for each n")
    p.add_argument("--n", required=True, help="N or A..B")

    p = sub.add_parser("verify", parents=[common], help="run the structural checks")
    p.add_argument("--n", required=True, help="N or A..B")
    p.add_argument("--checks", default="all",
                   help=f"comma list from: {', '.join(CHECK_MIN_N)}; or 'all'")
    p.add_argument("--samples", type=int, default=100_000,
                   help="draws for the sampled checks")

    p = sub.add_parser("sequence", parents=[common], help="nontrivial-class counts, b-file format")
    p.add_argument("--n", required=True, help="N or A..B")

    p = sub.add_parser("class", parents=[common], help="list one equivalence class")
    p.add_argument("--perm", required=True, help="e.g. 7162435 or 7,1,6,2,4,3,5")
    p.add_argument("--max-class-size", type=int, default=CLASS_CAP)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        cfg = build_config(args, out)
        if args.command == "enumerate":
            return cmd_enumerate(cfg)
        if args.command == "verify":
            checks = "all" if args.checks == "all" else [c.strip() for c in args.checks.split(",") if c.strip()]
            return cmd_verify(cfg, checks)
        if args.command == "sequence":
            return cmd_sequence(cfg)
        return cmd_class(cfg, args.perm, cap=args.max_class_size)
    except (UsageError, InvalidInputError) as exc:
        print(f"permq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceError, MemoryError) as exc:
        print(f"permq: refused: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
