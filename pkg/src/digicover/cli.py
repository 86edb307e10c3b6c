"""Command-line front end.

    digicover gen {cycle,cycle-rect,interval,window,window-map,doubling-map} ...
    digicover check MAP --classes covering,wl-iso
    digicover lift MAP --path c0,c3 --start 0
    digicover verify-paper [--n N --q Q]
    digicover harness --max-points 4 --samples 500 --seed 1

MAP is a map file or the name of a built-in map (window-map, doubling-map)
built from --n/--q.  Exit codes: 0 pass, 1 a checked property fails,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .classifiers import Kind, check_pak_pseudocover, classify
from .formats import (
    FormatError,
    dumps,
    image_to_json,
    lift_to_json,
    map_to_json,
    read_map,
    ulp_to_json,
    verdict_to_json,
)
from .harness import run_equivalence_harness
from .image import DigitalTopologyError, gen_cycle, gen_cycle_rect, gen_interval, gen_window
from .lifting import check_unique_path_lifting, enumerate_lifts
from .paper_suite import DEFAULT_GRID, build_doubling_map, build_window_map
from .report import harness_text, harness_to_json, report_text, report_to_json, verify_paper

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
BUILTIN_MAPS = ("window-map", "doubling-map")


class UsageError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("DIGICOVER_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"DIGICOVER_SEED must be an integer, got {raw!r}") from None


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required here")


def _emit(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_map(args):
    source = args.input or args.map
    if source is None:
        raise UsageError("give a map file (-i FILE) or a built-in map name")
    if source == "window-map":
        _need(args, "n", "q")
        return build_window_map(args.n, args.q)
    if source == "doubling-map":
        _need(args, "n")
        return build_doubling_map(args.n)
    return read_map(source)


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "cycle":
        _need(args, "n")
        doc = image_to_json(gen_cycle(args.n))
    elif kind == "cycle-rect":
        _need(args, "n")
        doc = image_to_json(gen_cycle_rect(args.n))
    elif kind == "interval":
        _need(args, "a", "b")
        doc = image_to_json(gen_interval(args.a, args.b))
    elif kind == "window":
        _need(args, "n", "q")
        doc = image_to_json(gen_window(args.q, args.n))
    elif kind == "window-map":
        _need(args, "n", "q")
        doc = map_to_json(build_window_map(args.n, args.q))
    else:
        _need(args, "n")
        doc = map_to_json(build_doubling_map(args.n))
    _emit(args, dumps(doc))
    return EXIT_OK


def _parse_classes(raw: str) -> list[str]:
    names = [c.strip() for c in raw.split(",") if c.strip()]
    valid = {k.value for k in Kind} | {"ulp"}
    for c in names:
        if c not in valid:
            raise UsageError(f"unknown class {c!r}; choose from {', '.join(sorted(valid))}")
    if not names:
        raise UsageError("--classes is empty")
    return names


def cmd_check(args) -> int:
    classes = _parse_classes(args.classes)
    p = _load_map(args)
    kinds = [Kind(c) for c in classes if c != "ulp"]
    verdicts = classify(p, kinds)
    if Kind.PAK_PSEUDO in verdicts and args.exhaustive_sheets:
        verdicts[Kind.PAK_PSEUDO] = check_pak_pseudocover(p, exhaustive=True)
    doc: dict = {k.value: verdict_to_json(v, p) for k, v in verdicts.items()}
    ok = all(v.holds for v in verdicts.values())
    if "ulp" in classes:
        L = args.lmax if args.lmax is not None else 2 * max(len(p.source), len(p.target))
        ulp = check_unique_path_lifting(p, L)
        doc["ulp"] = ulp_to_json(ulp, p)
        ok = ok and ulp.holds is True
    if args.format == "json":
        _emit(args, dumps(doc))
    else:
        lines = []
        for name, v in doc.items():
            lines.append(f"{name}: {v['holds']}")
            w = v.get("witness") or v.get("counterexample")
            if w and not v["holds"]:
                lines.append("  witness: " + json.dumps(w, sort_keys=True))
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lift(args) -> int:
    p = _load_map(args)
    if not args.path:
        raise UsageError("--path is required")
    try:
        base = [p.target.resolve(t.strip()) for t in args.path.split(",")]
        start = p.source.resolve(args.start)
    except DigitalTopologyError as exc:
        raise UsageError(str(exc)) from None
    lifts = enumerate_lifts(p, base, start)
    if args.format == "json":
        _emit(args, dumps({
            "base_path": [p.target.index(b) for b in base],
            "start": p.source.index(start),
            "lift_count": len(lifts),
            "lifts": [lift_to_json(L, p) for L in lifts],
        }))
    else:
        lines = [f"{len(lifts)} lift" + ("" if len(lifts) == 1 else "s")]
        for L in lifts:
            lines.append("  " + ",".join(p.source.label(x) for x in L.lift))
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    if args.n is not None or args.q is not None:
        _need(args, "n", "q")
        grid = [(args.n, args.q)]
    else:
        grid = DEFAULT_GRID
    seed = args.seed if args.seed is not None else _default_seed()
    report = verify_paper(grid, args.max_points, args.samples, seed)
    if args.format == "json":
        _emit(args, dumps(report_to_json(report)))
    else:
        _emit(args, report_text(report))
    return EXIT_OK if report.reproduced else EXIT_FAIL


def cmd_harness(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    summary = run_equivalence_harness(args.max_points, args.samples, seed)
    if args.format == "json":
        _emit(args, dumps(harness_to_json(summary)))
    else:
        _emit(args, "\n".join(harness_text(summary)) + "\n")
    return EXIT_OK if not summary.divergences else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "text"),
                        help="output format (default json; text for lift)")
    common.add_argument("--n", type=int)
    common.add_argument("--q", type=int)

    mapin = argparse.ArgumentParser(add_help=False)
    mapin.add_argument("map", nargs="?", help="map file or built-in map name")
    mapin.add_argument("-i", "--input", help="map file")

    parser = argparse.ArgumentParser(prog="digicover", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a generated image or map")
    g.add_argument("kind", choices=("cycle", "cycle-rect", "interval", "window") + BUILTIN_MAPS)
    g.add_argument("--a", type=int)
    g.add_argument("--b", type=int)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", parents=[common, mapin], help="classify a map")
    c.add_argument("--classes", default=",".join(k.value for k in Kind),
                   help="comma list of " + ",".join(k.value for k in Kind) + ",ulp")
    c.add_argument("--lmax", type=int)
    c.add_argument("--exhaustive-sheets", action="store_true")
    c.set_defaults(func=cmd_check)

    lf = sub.add_parser("lift", parents=[common, mapin], help="enumerate path lifts")
    lf.add_argument("--path", help="comma list of target points (labels or indices)")
    lf.add_argument("--start", default="0", help="source point (label or index)")
    lf.set_defaults(func=cmd_lift)

    v = sub.add_parser("verify-paper", parents=[common], help="run the reproduction suite")
    v.add_argument("--max-points", type=int, default=3)
    v.add_argument("--samples", type=int, default=0)
    v.add_argument("--seed", type=int)
    v.set_defaults(func=cmd_verify_paper)

    h = sub.add_parser("harness", parents=[common], help="run the equivalence harness")
    h.add_argument("--max-points", type=int, default=3)
    h.add_argument("--samples", type=int, default=0)
    h.add_argument("--seed", type=int)
    h.set_defaults(func=cmd_harness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.format is None:
        # parent-parser actions are shared, so per-command defaults live here
        args.format = "text" if args.command == "lift" else "json"
    try:
        return args.func(args)
    except (UsageError, FormatError, DigitalTopologyError) as exc:
        print(f"digicover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
