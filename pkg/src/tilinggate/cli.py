"""Command-line front end.

Exit codes: 0 = ran to completion (including searches that find nothing),
2 = invalid arguments or infeasible input, 3 = a search hit its node or
time budget before exhausting the tree.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import shapes
from .boundary import MODE_APPENDIX, MODE_LEMMA, d_rows
from .numerics import TrigContext
from .numtheory import (
    Triple,
    enumerate_triples_direct,
    enumerate_triples_param,
    sqdiv,
    sqfree,
)
from .output import OutputRecord, emit
from .render import render_svg, report_figure
from .shapes import ShapeKind
from .tiler import (
    STATUS_LIMIT,
    SearchConfig,
    apply_placement,
    build_region,
    placements_at_corner,
    region_to_frontier,
    search,
    similar_region,
    tile_area2,
)

GOLDEN_PROGRAMS = {
    "equilateralboundtable": shapes.golden_equilateral_table,
    "isosceles-log": shapes.golden_isosceles_log,
    "alphaandalphaplusbetatable": shapes.golden_alpha_pi3_table,
}


def _parse_tile(text: str) -> Triple:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"tile must be a,b,c: {text!r}")
    return Triple(*(int(p) for p in parts))


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "json-lines", "csv"),
                   default="table")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilinggate",
        description="Exact computations for 120-degree integer-tile triangle "
                    "tilings: tile enumeration, shape candidates, and an "
                    "exhaustive tiling search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triples", help="enumerate integer tiles")
    p.add_argument("--max-a", type=int)
    p.add_argument("--max-c", type=int)
    p.add_argument("--method", choices=("direct", "param", "both"),
                   default="direct")
    _add_format(p)

    p = sub.add_parser("arith", help="squarefree part / square divider")
    p.add_argument("op", choices=("sqfree", "sqdiv"))
    p.add_argument("x", type=int)
    _add_format(p)

    p = sub.add_parser("compose", help="boundary rows for one side length")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--tile", required=True)
    p.add_argument("--mode", choices=(MODE_LEMMA, MODE_APPENDIX),
                   default=MODE_LEMMA)
    _add_format(p)

    p = sub.add_parser("analyze", help="shape candidates for a tile")
    p.add_argument("--shape", default="all",
                   choices=tuple(k.value for k in ShapeKind) + ("all",))
    p.add_argument("--tile")
    p.add_argument("--all-tiles", action="store_true")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--mode", choices=(MODE_LEMMA, MODE_APPENDIX),
                   default=MODE_LEMMA)
    _add_format(p)

    p = sub.add_parser("report", help="per-shape minima and discrepancies")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--mode", choices=(MODE_LEMMA, MODE_APPENDIX),
                   default=MODE_LEMMA)
    p.add_argument("--figure", help="write a summary chart (png/pdf)")
    _add_format(p)

    p = sub.add_parser("golden", help="reproduce a published program output")
    p.add_argument("--program", required=True, choices=tuple(GOLDEN_PROGRAMS))

    p = sub.add_parser("search", help="exhaustive tiling search")
    p.add_argument("--shape", required=True,
                   choices=tuple(k.value for k in ShapeKind) + ("similar",))
    p.add_argument("--tile", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--no-mirror", action="store_true")
    p.add_argument("--find-all", action="store_true")
    p.add_argument("--node-limit", type=int)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--threads", type=int, default=0)
    p.add_argument("--parallel-depth", type=int, default=0)
    p.add_argument("--svg", help="write the first tiling (or outline) as SVG")
    p.add_argument("--mode", choices=(MODE_LEMMA, MODE_APPENDIX),
                   default=MODE_LEMMA)
    _add_format(p)

    p = sub.add_parser("render", help="triangle outline with sample tiles")
    p.add_argument("--shape", required=True,
                   choices=tuple(k.value for k in ShapeKind) + ("similar",))
    p.add_argument("--tile", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--svg", required=True)
    p.add_argument("--mode", choices=(MODE_LEMMA, MODE_APPENDIX),
                   default=MODE_LEMMA)
    return parser


def _triple_records(triples, method: str) -> list[OutputRecord]:
    return [
        OutputRecord("triple", {"a": t.a, "b": t.b, "c": t.c, "method": method})
        for t in triples
    ]


def _candidate_records(cands) -> list[OutputRecord]:
    out = []
    for c in cands:
        out.append(OutputRecord("candidate", {
            "shape": c.shape.value,
            "a": c.tile.a, "b": c.tile.b, "c": c.tile.c,
            "swapped": int(c.swapped),
            "k": c.k, "n": c.N, "x": c.X, "y": c.Y, "z": c.Z,
            "verdict": c.verdict, "reason": c.reason or "",
        }))
    return out


def _cmd_triples(args) -> tuple[int, list[OutputRecord]]:
    if args.max_a is None and args.max_c is None:
        raise ValueError("pass --max-a and/or --max-c")
    if args.method == "direct":
        if args.max_a is None:
            raise ValueError("--max-a is required for the direct method")
        ts = enumerate_triples_direct(args.max_a, args.max_c)
    elif args.method == "param":
        # solutions with min side <= A satisfy c <= (3A^2+1)/2
        max_c = args.max_c or (3 * args.max_a * args.max_a + 1) // 2
        ts = enumerate_triples_param(max_c)
        if args.max_a is not None:
            ts = [t for t in ts if min(t.a, t.b) <= args.max_a]
    else:
        max_c = args.max_c or (3 * args.max_a * args.max_a + 1) // 2
        param = enumerate_triples_param(max_c)
        if args.max_a is not None:
            direct = enumerate_triples_direct(args.max_a, max_c)
            param = [t for t in param if min(t.a, t.b) <= args.max_a]
        else:
            direct = enumerate_triples_direct(max_c, max_c)
        if direct != param:
            raise ValueError("direct and parametrized enumerations disagree")
        ts = direct
    return 0, _triple_records(ts, args.method)


def _cmd_arith(args) -> tuple[int, list[OutputRecord]]:
    fn = sqfree if args.op == "sqfree" else sqdiv
    value = fn(args.x)
    return 0, [OutputRecord("table_row", {
        "section": "arith", "key": f"{args.op}({args.x})", "value": value,
        "extra": "",
    })]


def _cmd_compose(args) -> tuple[int, list[OutputRecord]]:
    t = _parse_tile(args.tile)
    min_c = 1 if args.mode == MODE_LEMMA else 2
    rows = d_rows(args.length, t, min_c)
    recs = [OutputRecord("table_row", {
        "section": "compose", "key": f"L={args.length}",
        "value": f"({r.p},{r.d},{r.e})",
        "extra": f"{r.p}*{t.a}+{r.d}*{t.b}+{r.e}*{t.c}",
    }) for r in rows]
    return 0, recs


def _cmd_analyze(args) -> tuple[int, list[OutputRecord]]:
    if args.all_tiles == (args.tile is not None):
        raise ValueError("pass exactly one of --tile or --all-tiles")
    kinds = list(ShapeKind) if args.shape == "all" else [ShapeKind(args.shape)]
    cands = []
    for kind in kinds:
        if args.all_tiles:
            tiles = shapes.triples_for_shape(kind, args.nmax)
        else:
            tiles = [_parse_tile(args.tile).normalized]
        for t in tiles:
            cands.extend(shapes.analyze(t, kind, args.nmax, mode=args.mode))
    return 0, _candidate_records(cands)


def _cmd_report(args) -> tuple[int, list[OutputRecord]]:
    report = shapes.aggregate_report(args.nmax, mode=args.mode)
    recs = []
    for s in report.summaries:
        recs.append(OutputRecord("table_row", {
            "section": "shape-minimum", "key": s.shape.value,
            "value": s.min_n if s.min_n is not None else "none",
            "extra": f"documented bound {s.reference_bound}; "
                     f"{s.accepted} accepted / {s.rejected} rejected",
        }))
    recs.append(OutputRecord("table_row", {
        "section": "overall", "key": "minimum surviving N",
        "value": report.overall_min if report.overall_min is not None else "none",
        "extra": (f"{report.overall_best.shape.value} "
                  f"{report.overall_best.tile}"
                  f"{'*' if report.overall_best.swapped else ''}"
                  if report.overall_best else ""),
    }))
    recs.extend(_candidate_records(report.accepted))
    for d in report.discrepancies:
        recs.append(OutputRecord("discrepancy", {
            "topic": d.topic, "stated": d.stated,
            "computed": d.computed, "detail": d.detail,
        }))
    if args.figure:
        report_figure(report, args.figure)
    return 0, recs


def _region_for(args):
    t = _parse_tile(args.tile)
    if args.shape == "similar":
        return similar_region(t, args.k), t, args.k * args.k, None
    cand = shapes.candidate_for(t, ShapeKind(args.shape), args.k,
                                mode=args.mode)
    return build_region(cand), cand.tile, cand.N, cand


def _cmd_search(args) -> tuple[int, list[OutputRecord]]:
    region, t, n, _cand = _region_for(args)
    threads = int(os.environ.get("TILINGGATE_THREADS", args.threads or 0))
    cfg = SearchConfig(
        allow_mirror=not args.no_mirror,
        node_limit=args.node_limit,
        time_limit=args.time_limit,
        find_all=args.find_all,
        parallel_depth=args.parallel_depth,
        threads=threads,
    )
    result = search(region, t, n, cfg)
    if args.svg:
        tiles = result.tilings[0] if result.tilings else []
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(region, tiles))
    rec = OutputRecord("search_summary", {
        "shape": args.shape, "a": t.a, "b": t.b, "c": t.c, "n": n,
        "status": result.status, "nodes": result.nodes,
        "max_depth": result.max_depth, "tilings": len(result.tilings),
    })
    return (3 if result.status == STATUS_LIMIT else 0), [rec]


def _cmd_render(args) -> tuple[int, list[OutputRecord]]:
    region, t, n, _cand = _region_for(args)
    ctx = TrigContext(t)
    front = region_to_frontier(region, n, ctx)
    tiles = []
    for _ in range(2):
        idx = front.select_corner(ctx)
        placements = placements_at_corner(front, idx, t, ctx)
        if not placements:
            break
        tiles.append(placements[0])
        children = apply_placement(front, placements[0], ctx, tile_area2(t))
        if not children:
            break
        front = children[-1]
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(render_svg(region, tiles))
    return 0, [OutputRecord("table_row", {
        "section": "render", "key": args.svg, "value": len(tiles),
        "extra": "sample tiles",
    })]


_HANDLERS = {
    "triples": _cmd_triples,
    "arith": _cmd_arith,
    "compose": _cmd_compose,
    "analyze": _cmd_analyze,
    "report": _cmd_report,
    "search": _cmd_search,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.command == "golden":
        sys.stdout.write(GOLDEN_PROGRAMS[args.program]())
        return 0
    try:
        code, records = _HANDLERS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(records, getattr(args, "format", "table"), sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
