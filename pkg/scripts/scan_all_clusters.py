#!/usr/bin/env python3
"""Scan every cataloged case and write CSV + SVG region maps.

Two-variable cases scan their full (s, t) square; four-variable cases
scan the (s, t) slice at the fixed tail given by --fix-p/--fix-q.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from qutrit_bloch.clusters import catalog, region_to_csv, region_to_svg, scan_region


def slug(cluster_id: str, sub_case: str) -> str:
    return f"{cluster_id}_{sub_case.strip('()').replace(',', '_')}"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out/regions", type=Path)
    parser.add_argument("--min", type=float, default=-1.0)
    parser.add_argument("--max", type=float, default=1.0)
    parser.add_argument("--step", type=float, default=0.05)
    parser.add_argument("--fix-p", type=float, default=0.0)
    parser.add_argument("--fix-q", type=float, default=0.0)
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for case in catalog():
        fixed = None if case.arity == 2 else {"p": args.fix_p, "q": args.fix_q}
        grid = scan_region(case, (args.min, args.max), (args.min, args.max), args.step, fixed=fixed)
        base = args.out_dir / slug(case.cluster_id, case.sub_case)
        base.with_suffix(".csv").write_text(region_to_csv(grid), encoding="utf-8")
        base.with_suffix(".svg").write_text(region_to_svg(grid), encoding="utf-8")
        n_physical = sum(1 for c in grid.cells if c.physical)
        n_shell = sum(1 for c in grid.cells if not c.physical and c.lhs1 <= 1.0)
        print(
            f"{case.cluster_id:4s} {case.sub_case:24s} cells={len(grid.cells):5d} "
            f"physical={n_physical:5d} fails-ineq2-only={n_shell:4d}"
        )


if __name__ == "__main__":
    main()
