"""Command-line interface.

Subcommands: ``eval``, ``check``, ``scan``, ``sample``, ``clusters``,
``errata``, ``serve``. Exit codes: 0 success (and "physical" for
eval/check), 3 unphysical point, 2 usage error -- so ``check`` works as
a shell predicate. All file and JSON output is byte-deterministic for
fixed inputs.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .clusters import (
    CLUSTER_IDS,
    cluster_cases,
    lookup,
    region_to_csv,
    region_to_svg,
    scan_region,
)
from .documents import (
    catalog_document,
    dumps_canonical,
    errata_document,
    sample_document,
    scene_document,
)
from .errors import InvalidParameterError, QutritBlochError
from .sampling import METHODS, SamplerConfig
from .state_core import PARAM_NAMES, ParamVector

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNPHYSICAL = 3


def _parse_assignments(pairs: Sequence[str], allowed: Sequence[str], what: str) -> dict[str, float]:
    out: dict[str, float] = {}
    for item in pairs:
        key, sep, raw = item.partition("=")
        if not sep:
            raise InvalidParameterError(f"{what} {item!r} is not of the form name=value")
        if key not in allowed:
            raise InvalidParameterError(f"unknown {what} name {key!r}; expected one of {list(allowed)}")
        try:
            out[key] = float(raw)
        except ValueError:
            raise InvalidParameterError(f"{what} {key!r} has unparsable value {raw!r}") from None
    return out


def _params_from_sets(sets: Sequence[str]) -> ParamVector:
    return ParamVector.from_mapping(_parse_assignments(sets, PARAM_NAMES, "parameter"))


def _scene_text(doc: dict) -> str:
    inv = doc["invariants_block"]
    lines = [
        "params: " + " ".join(f"{k}={dumps_canonical(v)}" for k, v in doc["params"].items()),
        f"lhs1={inv['lhs1']:.12g}  lhs2={inv['lhs2']:.12g}  purity={inv['purity']:.12g}",
        "eigenvalues: " + "  ".join(f"{v:.12g}" for v in inv["eigenvalues"]),
        f"e2={inv['e2']:.12g}  e3={inv['e3']:.12g}",
        "verdict: " + ("physical" if inv["physical"] else "unphysical"),
    ]
    for label in ("u", "v", "w"):
        vec = doc["bloch"][label]
        flags = "".join("-" if neg else "." for neg in vec["negative_components"])
        squares = "  ".join(f"{v:.12g}" for v in vec["squares"])
        lines.append(f"{label}: squares=({squares})  length={vec['length']:.12g}  neg=[{flags}]")
    return "\n".join(lines)


def _cmd_eval(args: argparse.Namespace) -> int:
    doc = scene_document(_params_from_sets(args.set))
    if args.json:
        print(dumps_canonical(doc))
    else:
        print(_scene_text(doc))
    return EXIT_OK if doc["invariants_block"]["physical"] else EXIT_UNPHYSICAL


def _cmd_check(args: argparse.Namespace) -> int:
    doc = scene_document(_params_from_sets(args.set))
    physical = doc["invariants_block"]["physical"]
    print("physical" if physical else "unphysical")
    return EXIT_OK if physical else EXIT_UNPHYSICAL


def _cmd_scan(args: argparse.Namespace) -> int:
    case = lookup(args.cluster, args.sub)
    fixed = _parse_assignments(args.fix, ("p", "q"), "fixed slot") if args.fix else None
    grid = scan_region(case, (args.min, args.max), (args.min, args.max), args.step, fixed=fixed)
    Path(args.out).write_text(region_to_csv(grid), encoding="utf-8")
    written = [args.out]
    if args.svg:
        Path(args.svg).write_text(region_to_svg(grid), encoding="utf-8")
        written.append(args.svg)
    print(f"wrote {len(grid.cells)} cells to {', '.join(written)}")
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace) -> int:
    doc = sample_document(SamplerConfig(method=args.method, seed=args.seed, count=args.count))
    if args.json:
        print(dumps_canonical(doc))
    else:
        for i, record in enumerate(doc["records"]):
            inv = record["scene"]["invariants_block"]
            pstr = " ".join(f"{k}={v:.6g}" for k, v in record["params"].items())
            print(f"[{i}] purity={inv['purity']:.6g} physical={inv['physical']} {pstr}")
    return EXIT_OK


def _cmd_clusters(args: argparse.Namespace) -> int:
    if args.json:
        print(dumps_canonical(catalog_document()))
        return EXIT_OK
    for cid in CLUSTER_IDS:
        cases = cluster_cases(cid)
        names = ", ".join(c.sub_case for c in cases)
        print(f"{cid}: {names}")
    return EXIT_OK


def _cmd_errata(args: argparse.Namespace) -> int:
    doc = errata_document()
    if args.json:
        print(dumps_canonical(doc))
        return EXIT_OK
    for entry in doc["entries"]:
        print(f"[{entry['verdict']:8s}] table {entry['table']:4s} {entry['row']}"
              f"  (max deviation {entry['discrepancy']:.3g})")
    for note in doc["notes"]:
        print(f"note: {note}")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def _add_output_mode(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit canonical JSON")
    group.add_argument("--text", dest="json", action="store_false", help="emit readable text (default)")
    parser.set_defaults(json=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qutrit-bloch",
        description="Evaluate qutrit trace inequalities and Bloch-like vectors.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one parameter point")
    p_eval.add_argument("--set", action="append", default=[], metavar="NAME=VALUE",
                        help="set one of the 8 parameters (repeatable); unset names are 0")
    _add_output_mode(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_check = sub.add_parser("check", help="physicality predicate (exit 0/3)")
    p_check.add_argument("--set", action="append", default=[], metavar="NAME=VALUE")
    p_check.set_defaults(func=_cmd_check)

    p_scan = sub.add_parser("scan", help="scan a cluster case over a square grid")
    p_scan.add_argument("--cluster", required=True, help="cluster id (I..VII or Q)")
    p_scan.add_argument("--sub", default=None, help='sub-case name, e.g. "(a,alpha2)"')
    p_scan.add_argument("--min", type=float, required=True)
    p_scan.add_argument("--max", type=float, required=True)
    p_scan.add_argument("--step", type=float, required=True)
    p_scan.add_argument("--out", required=True, help="CSV output path")
    p_scan.add_argument("--svg", default=None, help="optional SVG region-map path")
    p_scan.add_argument("--fix", action="append", default=[], metavar="SLOT=VALUE",
                        help="fix slot p/q of a four-variable case (default 0)")
    p_scan.set_defaults(func=_cmd_scan)

    p_sample = sub.add_parser("sample", help="draw reproducible parameter samples")
    p_sample.add_argument("--method", required=True, choices=METHODS)
    p_sample.add_argument("--seed", type=int, required=True)
    p_sample.add_argument("--count", type=int, required=True)
    _add_output_mode(p_sample)
    p_sample.set_defaults(func=_cmd_sample)

    p_clusters = sub.add_parser("clusters", help="print the cluster catalog")
    _add_output_mode(p_clusters)
    p_clusters.set_defaults(func=_cmd_clusters)

    p_errata = sub.add_parser("errata", help="print the printed-table errata report")
    _add_output_mode(p_errata)
    p_errata.set_defaults(func=_cmd_errata)

    p_serve = sub.add_parser("serve", help="run the JSON service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8350)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QutritBlochError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
