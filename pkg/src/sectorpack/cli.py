"""Command-line front end: sector-pack <subcommand> [options].

Exit status: 0 success, 1 domain error (bad slope, point outside sector,
...), 2 usage error, 3 a verify that found a violation (witness printed).
Results go to stdout (or --out FILE); search progress goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import Sector, SectorPackError, parse_slope
from .packing import PackingFamily, parse_family
from .poly import deserialize
from .transforms import LinearMap2, lambda_map, m_map, phi_map, psi_map
from .verify import (EnumerationOrder, OrderKind, enumerate_sector,
                     linear_impossibility_check, search_quadratic, verify_packing)

_ORDER_NAMES = {kind.value: kind for kind in OrderKind}
_MAP_FACTORIES = {"lambda": lambda_map, "m": m_map, "phi": phi_map, "psi": psi_map}


def _strict_int(token: str) -> int:
    digits = token[1:] if token.startswith("-") else token
    if not (digits.isascii() and digits.isdigit()):
        raise SectorPackError(f"malformed integer {token!r}")
    return int(token)


def parse_point(text: str) -> tuple[int, int]:
    """Parse "x,y" with no spaces; integers of any size."""
    parts = text.split(",")
    if len(parts) != 2:
        raise SectorPackError(f"point must be x,y, got {text!r}")
    return (_strict_int(parts[0]), _strict_int(parts[1]))


def parse_map(text: str) -> LinearMap2:
    """Parse a transform name: lambda:S, m:S, phi:S, or psi:R."""
    head, sep, param = text.partition(":")
    factory = _MAP_FACTORIES.get(head)
    if factory is None or not sep:
        raise SectorPackError(f"unknown transform {text!r} (want lambda:S, m:S, phi:S, psi:R)")
    try:
        value = int(param)
    except ValueError:
        raise SectorPackError(f"malformed transform parameter {param!r}") from None
    return factory(value)


def _order_for(sector: Sector, name: str) -> EnumerationOrder:
    kind = _ORDER_NAMES.get(name)
    if kind is None:
        raise SectorPackError(f"unknown order {name!r} (choose from {sorted(_ORDER_NAMES)})")
    slope = sector.slope
    if kind in (OrderKind.BLOCK_BOTTOM_UP, OrderKind.BLOCK_TOP_DOWN):
        if slope.is_infinite or (slope.s - 1) % slope.r != 0:
            raise SectorPackError(f"block orders need a finite slope with r | s-1, got {slope}")
        return EnumerationOrder(kind, (slope.s - 1) // slope.r)
    if kind is OrderKind.RESIDUE_INTERLEAVED:
        if slope.is_infinite:
            raise SectorPackError("residue interleaving needs a finite slope")
        return EnumerationOrder(kind, slope.s)
    return EnumerationOrder(kind)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sector-pack",
        description="Packing polynomials on integer sectors: evaluate, invert, "
                    "enumerate, verify, search, and lay out sector-shaped arrays.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, formats=("text", "json"), default_format="text"):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", metavar="FILE", help="write the result to FILE instead of stdout")
        return p

    p = add("eval", "rank of a point under a packing family")
    p.add_argument("--family", required=True, help="cantor-f, steep-g:3, div-f:2/3, quasi:3/2, ...")
    p.add_argument("--point", required=True, help="lattice point as x,y")

    p = add("unrank", "point with a given rank under a packing family")
    p.add_argument("--family", required=True)
    p.add_argument("--rank", required=True, type=int)

    p = add("enumerate", "first points of a sector in a stated order",
            formats=("text", "json", "csv"))
    p.add_argument("--slope", required=True, help="R/S, R, or inf")
    p.add_argument("--order", required=True,
                   help="diagonal, reverse-diagonal, column-bottom-up, column-top-down, "
                        "block-bottom-up, block-top-down, residue-interleaved")
    p.add_argument("--count", required=True, type=int)

    p = add("verify", "check the packing property on a prefix of the sector")
    p.add_argument("--family", help="verify a built-in family")
    p.add_argument("--poly", help="verify a serialized polynomial (needs --slope)")
    p.add_argument("--slope", help="sector for --poly")
    p.add_argument("--prefix", type=int, default=1000)

    p = add("search", "exhaustive bounded coefficient search for packing candidates",
            default_format="json")
    p.add_argument("--slope", required=True)
    p.add_argument("--bound", type=int, default=4, help="half-integer coefficient bound")
    p.add_argument("--prefix", type=int, default=1000)
    p.add_argument("--degree", type=int, choices=(1, 2), default=2)

    p = add("basis", "free basis of the sector semigroup, if it exists")
    p.add_argument("--slope", required=True)

    p = add("transform", "print a named linear map (row-major), optionally applied to a point")
    p.add_argument("--family", required=True, metavar="MAP",
                   help="transform name: lambda:S, m:S, phi:S, or psi:R")
    p.add_argument("--point", help="apply the map to x,y instead of printing it")

    p = add("layout", "fill a sector array densely and dump offset,x,y",
            formats=("text", "json", "csv"), default_format="csv")
    p.add_argument("--family", required=True)
    p.add_argument("--count", required=True, type=int)

    return parser


def _cmd_eval(args) -> tuple[str, int]:
    family = parse_family(args.family)
    value = family.rank(parse_point(args.point))
    if args.format == "json":
        return json.dumps({"rank": value}), 0
    return str(value), 0


def _cmd_unrank(args) -> tuple[str, int]:
    family = parse_family(args.family)
    x, y = family.unrank(args.rank)
    if args.format == "json":
        return json.dumps({"point": [x, y]}), 0
    return f"{x},{y}", 0


def _cmd_enumerate(args) -> tuple[str, int]:
    sector = Sector(parse_slope(args.slope))
    points = enumerate_sector(sector, _order_for(sector, args.order), args.count)
    if args.format == "json":
        return json.dumps({"points": [[x, y] for x, y in points]}), 0
    if args.format == "csv":
        lines = ["rank,x,y"] + [f"{n},{x},{y}" for n, (x, y) in enumerate(points)]
        return "\n".join(lines), 0
    return "\n".join(f"{x},{y}" for x, y in points), 0


def _cmd_verify(args) -> tuple[str, int]:
    if (args.family is None) == (args.poly is None):
        raise SectorPackError("verify needs exactly one of --family or --poly")
    if args.family is not None:
        family = parse_family(args.family)
        candidate, sector = family.form, family.sector
    else:
        if args.slope is None:
            raise SectorPackError("--poly needs --slope")
        candidate, sector = deserialize(args.poly), Sector(parse_slope(args.slope))
    verdict = verify_packing(candidate, sector, args.prefix)
    status = 0 if verdict.ok else 3
    if args.format == "json":
        witness = list(verdict.witness) if verdict.witness is not None else None
        return json.dumps({"ok": verdict.ok, "reason": verdict.reason, "witness": witness,
                           "column_bound": verdict.column_bound,
                           "points_examined": verdict.points_examined}), status
    return ("PASS " if verdict.ok else "FAIL ") + verdict.describe(), status


def _cmd_search(args) -> tuple[str, int]:
    sector = Sector(parse_slope(args.slope))
    step = None

    def progress(done, total):
        nonlocal step
        tick = max(1, total // 10)
        if done == total or done % tick == 0:
            if step != done:
                print(f"search: {done}/{total} chunks", file=sys.stderr)
                step = done

    run = search_quadratic if args.degree == 2 else linear_impossibility_check
    report = run(sector, args.bound, args.prefix, progress=progress)
    if args.format == "json":
        return report.to_json(), 0
    lines = [f"sector {report.sector.slope}  degree {report.degree}  "
             f"bound {report.coeff_bound}  prefix {report.prefix}",
             f"survivors: {len(report.survivors)}"]
    lines.extend(f"  {f}" for f in report.survivors)
    lines.append(f"exhausted: {str(report.exhausted).lower()}")
    return "\n".join(lines), 0


def _cmd_basis(args) -> tuple[str, int]:
    basis = Sector(parse_slope(args.slope)).free_basis()
    if args.format == "json":
        return json.dumps({"basis": [list(w) for w in basis] if basis else None}), 0
    if basis is None:
        return "none", 0
    return " ".join(f"({x},{y})" for x, y in basis), 0


def _cmd_transform(args) -> tuple[str, int]:
    m = parse_map(args.family)
    if args.point is not None:
        x, y = m.apply(parse_point(args.point))
        if args.format == "json":
            return json.dumps({"image": [x, y]}), 0
        return f"{x},{y}", 0
    if args.format == "json":
        return json.dumps({"matrix": list(m.rows())}), 0
    return " ".join(str(v) for v in m.rows()), 0


def _cmd_layout(args) -> tuple[str, int]:
    from .layout import SectorArray

    family = parse_family(args.family)
    arr = SectorArray(family)
    arr.dense_prefix_fill(args.count, lambda p: p)
    rows = [(family.rank(p), p[0], p[1]) for p, _ in arr.iterate()]
    if args.format == "json":
        return json.dumps({"cells": [list(row) for row in rows]}), 0
    lines = ["offset,x,y"] + [f"{o},{x},{y}" for o, x, y in rows]
    return "\n".join(lines), 0


_COMMANDS = {
    "eval": _cmd_eval,
    "unrank": _cmd_unrank,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "basis": _cmd_basis,
    "transform": _cmd_transform,
    "layout": _cmd_layout,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, status = _COMMANDS[args.command](args)
    except SectorPackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
