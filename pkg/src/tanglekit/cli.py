"""Command-line front end: ``tanglekit check|batch|gen``."""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import genlab
from .diagram import DiagramError, Mode, parse, serialize
from .graph8 import cap_tangle, excise_vertex
from .report import SCHEMA, build_report

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def load(path: Path, *, as_mode: str | None = None, research: bool = False):
    d = parse(path.read_text(encoding="utf-8"), multivertex=research)
    if as_mode == "tangle" and d.mode is Mode.GRAPH8:
        d = excise_vertex(d)
    elif as_mode == "graph8" and d.mode is Mode.TANGLE:
        d = cap_tangle(d)
    elif as_mode is not None and d.mode.value != as_mode:
        raise DiagramError(f"cannot view a {d.mode.value} diagram as {as_mode}")
    return d


def _summary_lines(report: dict) -> list[str]:
    lines = [f"{report['mode']}: {report['crossings']} crossing(s)"]
    for key in ("connected", "reduced", "alternating", "positive", "strongly_alternating",
                "prime_projection", "mof", "sawollek_reduced_alternating"):
        if key in report:
            lines.append(f"  {key}: {report[key]}")
    if "status" in report:
        lines.append(f"  status: {report['status']}")
    for c in report["certificates"]:
        tag = "" if c["certified"] else " [UNCERTIFIED]"
        lines.append(f"  certificate {c['conclusion']} ({c['rule']}){tag}")
    return lines


def cmd_check(args) -> int:
    mode = "tangle" if args.tangle else "graph8" if args.graph8 else None
    try:
        d = load(Path(args.file), as_mode=mode, research=args.research)
    except DiagramError as exc:
        print(f"{args.file}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"{args.file}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = build_report(d, research=args.research)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(_summary_lines(report)))
    return EXIT_OK


def _check_one(job: tuple[str, bool]) -> tuple[str, dict | None, str | None]:
    path, research = job
    try:
        d = load(Path(path), research=research)
        return path, build_report(d, research=research), None
    except (DiagramError, OSError) as exc:
        return path, None, str(exc)


def batch(directory: Path, *, jobs: int = 1, research: bool = False) -> dict:
    files = sorted(str(p) for p in directory.glob("*.pd"))
    work = [(f, research) for f in files]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_one, work))
    else:
        results = [_check_one(w) for w in work]
    counts: Counter = Counter()
    per_file = {}
    failed = {}
    for path, report, err in sorted(results):
        name = Path(path).name
        if report is None:
            failed[name] = err
            continue
        certs = sorted(f"{c['conclusion']} ({c['rule']})" for c in report["certificates"])
        counts.update(c["conclusion"] for c in report["certificates"])
        per_file[name] = {"mode": report["mode"], "certificates": certs}
    return {
        "schema": SCHEMA.replace("report", "batch"),
        "diagrams": len(files),
        "failed": failed,
        "certificate_counts": dict(sorted(counts.items())),
        "files": per_file,
    }


def cmd_batch(args) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        print(f"{args.dir}: error: not a directory", file=sys.stderr)
        return EXIT_INPUT
    summary = batch(directory, jobs=args.jobs, research=args.research)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return EXIT_FAIL if summary["failed"] else EXIT_OK


def _params(items: list[str]) -> dict[str, str]:
    out = {}
    for i, item in enumerate(items):
        key, sep, value = item.partition("=")
        if not sep:
            key, value = str(i), item
        out[key] = value
    return out


def _generate(family: str, p: dict[str, str], seed: int, count: int):
    def num(*keys, default=None):
        for k in keys:
            if k in p:
                return int(p[k])
        if default is None:
            raise ValueError(f"{family} needs parameter {keys[0]}")
        return default

    if family == "torus2":
        n = num("n", "0")
        yield f"torus2_n{n}", genlab.gen_torus2(n)
    elif family == "pretzel":
        if "0" in p and "," in p["0"]:
            a, b, c = (int(x) for x in p["0"].split(","))
        else:
            a, b, c = num("p", "0"), num("q", "1"), num("r", "2")
        yield f"pretzel_{a}_{b}_{c}", genlab.gen_pretzel(a, b, c)
    elif family in ("alternating-tangle", "positive-tangle"):
        size = num("size", "0")
        gen = genlab.gen_alternating_tangle if family == "alternating-tangle" else genlab.gen_positive_tangle
        for s in range(seed, seed + count):
            yield f"{family}_size{size}_seed{s}", gen(s, size)
    elif family == "local-knot":
        knot = p.get("knot", p.get("0", "trefoil"))
        split = {"split": True, "composite": False}.get(p.get("variant", ""), None)
        for s in range(seed, seed + count):
            sample = genlab.gen_local_knot_graph8(s, knot, split)
            yield f"local-knot_{knot}_{sample.route}_seed{s}", sample.graph
    else:
        raise ValueError(f"unknown family {family!r}")


FAMILIES = ("torus2", "pretzel", "alternating-tangle", "positive-tangle", "local-knot")


def cmd_gen(args) -> int:
    seed = genlab.default_seed() if args.seed is None else args.seed
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    try:
        for name, d in _generate(args.family, _params(args.params), seed, args.count):
            path = out / f"{name}.pd"
            path.write_text(serialize(d) + "\n", encoding="utf-8")
            print(path)
    except (ValueError, genlab.GenerationError) as exc:
        print(f"gen: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tanglekit", description="Analyse and certify link, tangle and figure-eight diagrams.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="analyse one diagram file")
    c.add_argument("file")
    view = c.add_mutually_exclusive_group()
    view.add_argument("--tangle", action="store_true", help="analyse a graph8 file through its excised tangle")
    view.add_argument("--graph8", action="store_true", help="cap a tangle file with a vertex")
    c.add_argument("--json", action="store_true", help="print the full JSON report")
    c.add_argument("--research", action="store_true", help="accept multi-vertex graphs (output UNCERTIFIED)")
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("batch", help="analyse every *.pd file of a directory")
    b.add_argument("dir")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--research", action="store_true")
    b.set_defaults(func=cmd_batch)

    g = sub.add_parser("gen", help="write generated diagrams")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("params", nargs="*", help="key=value parameters, e.g. n=5 or size=6")
    g.add_argument("-o", "--output", required=True)
    g.add_argument("--seed", type=int, default=None, help="default: $TANGLEKIT_SEED or 0")
    g.add_argument("--count", type=int, default=1)
    g.set_defaults(func=cmd_gen)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
