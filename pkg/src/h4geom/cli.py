"""Batch verification front-end.

`h4geom verify [--only GLOB] [--report PATH] [--threads N]` runs checks and
writes a JSON report; exit code 0 iff every selected check passed, 1 on any
failure, 2 on usage or I/O errors.  `h4geom dump OBJECT [--out PATH]` emits
canonical JSON for the main constructed objects.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from fnmatch import fnmatch

from . import checks, embed, mod2, symmetry
from .polytopes import duad_str, label_str, the_600cell
from .serialize import dumps

DUMP_OBJECTS = ("vertices", "labels", "array", "lines", "planes", "lattice")


def _warm_caches(selected: list[str]) -> None:
    """Build the shared tables serially so threaded checks only read."""
    cell = the_600cell()
    cell.labels
    if any(s.startswith(("facts/fact3", "facts/fact4", "facts/fact6", "s7/commuting")) for s in selected):
        symmetry.generate_group().ten_perms
    if any(s.startswith(("facts/fact9", "facts/fact10", "s5", "s6", "s7")) for s in selected):
        embed.certify_e8(-1)
    if any(s.startswith("s6") for s in selected):
        embed.certify_e8(1)
        embed.lattice_L()
        embed.decompose_norm4_shell()
    if any(s.startswith(("facts/fact10", "s5", "s7")) for s in selected):
        geo = mod2.f4_geometry()
        geo.lines
        geo.tags


def cmd_verify(args) -> int:
    selected = [cid for cid in checks.CHECK_ORDER if fnmatch(cid, args.only)]
    if not selected:
        print(f"error: no checks match {args.only!r}", file=sys.stderr)
        return 2
    try:
        _warm_caches(selected)
        if args.threads > 1:
            with ThreadPoolExecutor(max_workers=args.threads) as pool:
                results = list(pool.map(checks.run_check, selected))
        else:
            results = [checks.run_check(cid) for cid in selected]
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    results.sort(key=lambda r: r.check_id)
    report = [
        {
            "check": r.check_id,
            "status": r.status,
            "provenance": r.provenance,
            "expected": r.expected,
            "observed": r.observed,
            "elapsed_ms": r.elapsed_ms,
        }
        for r in results
    ]
    text = dumps(report)
    if args.report:
        try:
            with open(args.report, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return 2
    for r in results:
        print(f"{r.status.upper():4}  {r.check_id}  ({r.elapsed_ms} ms)")
    failed = [r for r in results if r.status != "pass"]
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed", file=sys.stderr)
        return 1
    print(f"all {len(results)} checks passed")
    return 0


def _dump_vertices():
    cell = the_600cell()
    return {
        "count": cell.n,
        "coordinates_are_golden_pairs": True,
        "vertices": list(cell.vertices),
    }


def _dump_labels():
    cell = the_600cell()
    return {
        "cells": {
            duad_str(cell.duad_of_cell[k]): sorted(cell.cells24[k]) for k in range(25)
        },
        "pairs": [
            {
                "pair": pid,
                "vertices": list(cell.pairs[pid]),
                "label": label_str(cell.labels[pid]),
            }
            for pid in range(60)
        ],
    }


def _dump_array():
    cell = the_600cell()
    return {
        "rows": [
            [duad_str(cell.duad_of_cell[cell.array[i][j]]) for j in range(5)]
            for i in range(5)
        ],
        "partitions": [sorted(p) for p in cell.partitions],
    }


def _dump_lines():
    geo = mod2.f4_geometry()
    out = []
    for line in geo.lines:
        out.append(
            {
                "points": sorted(line),
                "type": geo.line_type(line),
                "vertex_pairs": sorted(
                    geo.tags[p][1] for p in line if geo.tags[p][0] == "vertex"
                ),
                "cells": sorted(
                    geo.tags[p][1] for p in line if geo.tags[p][0] == "cell"
                ),
            }
        )
    out.sort(key=lambda d: d["points"])
    return {"count": len(out), "lines": out}


def _dump_planes():
    geo = mod2.f4_geometry()
    value_names = {0: "0", 1: "1", 2: "w", 3: "w+1"}
    points = []
    planes = []
    for k, plane in enumerate(geo.planes):
        kind, ref = geo.tags[k]
        points.append(
            {
                "point": k,
                "tag": [kind, ref],
                "q_omega_values": sorted(
                    value_names[geo.q_omega(x)] for x in geo.points[k]
                ),
            }
        )
        planes.append({"point": k, "tag": [kind, ref], "points": sorted(plane)})
    return {"count": len(planes), "points": points, "planes": planes}


def _dump_lattice():
    e8 = embed.certify_e8(-1)
    lat = embed.lattice_L()
    return {
        "e8": {
            "basis": [list(b) for b in e8.basis_int],
            "gram": [list(r) for r in e8.gram],
            "determinant": e8.det,
            "shells": {"2": len(e8.shell_coords[2]), "4": len(e8.shell_coords[4])},
        },
        "reduced_m0": {
            "basis": [list(b) for b in lat.basis],
            "gram": [list(r) for r in lat.gram],
            "determinant": lat.det,
            "census": {str(k): v for k, v in sorted(lat.census.items())},
        },
    }


_DUMPERS = {
    "vertices": _dump_vertices,
    "labels": _dump_labels,
    "array": _dump_array,
    "lines": _dump_lines,
    "planes": _dump_planes,
    "lattice": _dump_lattice,
}


def cmd_dump(args) -> int:
    if args.object not in _DUMPERS:
        print(
            f"error: unknown object {args.object!r}; choose from {', '.join(DUMP_OBJECTS)}",
            file=sys.stderr,
        )
        return 2
    text = dumps(_DUMPERS[args.object]())
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write output: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="h4geom",
        description="exact verification of 600-cell, E8 and F4 geometry",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    pv = sub.add_parser("verify", help="run verification checks")
    pv.add_argument("--only", default="*", help="glob over check ids (default: all)")
    pv.add_argument("--report", default=None, help="write JSON report to this path")
    pv.add_argument("--threads", type=int, default=1, help="worker threads")
    pv.set_defaults(func=cmd_verify)
    pd = sub.add_parser("dump", help="dump a constructed object as canonical JSON")
    pd.add_argument("object", help=f"one of: {', '.join(DUMP_OBJECTS)}")
    pd.add_argument("--out", default=None, help="output path (default: stdout)")
    pd.set_defaults(func=cmd_dump)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
