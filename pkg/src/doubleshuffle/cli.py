"""Command-line front end: every computation as a reproducible table dump.

All commands are pure and stateless; given identical parameters the output
is byte-identical across runs and across parallelism degrees (independent
(N, r) cells are mapped in a fixed order and merged deterministically).
Output is TSV (tab separators, LF line endings) or JSON with the schema
{"command": ..., "params": ..., "rows": [...]}.

Exit codes: 0 success / all cells match; 1 empty domain or failed check;
2 usage error; 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .exact_algebra import format_rational
from .ihara import DepthPoly, bracket, depth1_generator
from .double_shuffle import dimension, iterated_bracket_span, solve
from .exceptional import exceptional_elements, express_in_basis
from .odd_mzv import odd_rank, predicted_odd_table
from .period_poly import basis_S, cusp_dimension
from .series import bk_series, eos, hoffman_dims, pbw

MAX_WEIGHT_BOUND = 20
MAX_DEPTH_BOUND = 5
MAX_ODD_WEIGHT_BOUND = 31     # composition matrices stay tiny this far
MAX_SERIES_WEIGHT_BOUND = 40  # truncation ceiling for series-only checks


class UsageError(Exception):
    pass


class DomainEmpty(Exception):
    pass


def _emit(args, command: str, params: dict, rows: list[list],
          header_lines: list[str] | None = None) -> None:
    if args.format == "json":
        text = json.dumps({"command": command, "params": params, "rows": rows},
                          separators=(",", ":")) + "\n"
    else:
        lines = [f"# {line}" for line in (header_lines or [])]
        lines.extend("\t".join(str(v) for v in row) for row in rows)
        text = "\n".join(lines) + ("\n" if lines else "")
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _map_cells(fn, cells, jobs: int):
    """Order-preserving map over independent cells."""
    if jobs <= 1 or len(cells) <= 1:
        return [fn(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, cells))


def _dims_cell(cell: tuple[int, int]) -> list:
    N, r = cell
    return [N, r, dimension(N, r)]


def _span_cell(cell: tuple[int, int]) -> list:
    N, r = cell
    return [N, r, iterated_bracket_span(N, r).dimension]


def _odd_cell(cell: tuple[int, int]) -> list:
    N, r = cell
    return [2 * N + r, r, odd_rank(N, r)]


def cmd_dims(args) -> int:
    _check_bounds(args.max_weight, args.max_depth)
    cells = [(N, r) for r in range(1, args.max_depth + 1)
             for N in range(r, args.max_weight + 1)]
    rows = _map_cells(_dims_cell, cells, args.jobs)
    rows.sort(key=lambda row: (row[0], row[1]))
    _emit(args, "dims", {"max_weight": args.max_weight,
                         "max_depth": args.max_depth}, rows)
    return 0


def cmd_span(args) -> int:
    _check_bounds(args.max_weight, args.max_depth)
    cells = [(N, r) for r in range(1, args.max_depth + 1)
             for N in range(r, args.max_weight + 1)]
    rows = _map_cells(_span_cell, cells, args.jobs)
    rows.sort(key=lambda row: (row[0], row[1]))
    _emit(args, "span", {"max_weight": args.max_weight,
                         "max_depth": args.max_depth}, rows)
    return 0


def cmd_exceptional(args) -> int:
    twoN = args.weight
    if twoN < 12 or twoN % 2:
        raise UsageError("weight must be even and >= 12")
    if cusp_dimension(twoN) == 0:
        print(f"dim S = 0 at weight {twoN}: no exceptional elements",
              file=sys.stderr)
        return 1
    elements = exceptional_elements(twoN, args.generator)
    rows = []
    headers = []
    for el in elements:
        headers.append(f"source: {el.name} (weight {twoN}, depth 4, "
                       f"{el.term_count()} terms)")
        for exps, coeff in el.reduced.body.sorted_terms():
            rows.append([el.name, ",".join(map(str, exps)),
                         format_rational(coeff)])
    _emit(args, "exceptional",
          {"weight": twoN, "generator": args.generator,
           "sources": [el.name for el in elements],
           "term_counts": [el.term_count() for el in elements]},
          rows, header_lines=headers)
    return 0


def cmd_bk_check(args) -> int:
    if args.target == "ls":
        _check_bounds(args.max_weight, args.max_depth)
    elif args.target == "odd":
        _check_bounds(args.max_weight, args.max_depth,
                      MAX_ODD_WEIGHT_BOUND, 8)
    elif args.target == "full-t1":
        _check_bounds(args.max_weight, args.max_depth,
                      MAX_SERIES_WEIGHT_BOUND, 8)
    W, D = args.max_weight, args.max_depth
    rows: list[list] = []
    if args.target == "ls":
        cells = [(N, r) for r in range(1, D + 1) for N in range(r, W + 1)]
        dims = {(N, r): d for (N, r), (_, _, d) in
                zip(cells, _map_cells(_dims_cell, cells, args.jobs))}
        computed = pbw({k: v for k, v in dims.items() if v}, W, D)
        predicted = bk_series("ls", W, D)
        for N in range(W + 1):
            for d in range(D + 1):
                c = computed.coefficient(N, d)
                p = predicted.coefficient(N, d)
                rows.append([N, d, c, p, "ok" if c == p else "MISMATCH"])
    elif args.target == "odd":
        cells = [(N, r) for r in range(1, D + 1)
                 for N in range(r, (W - r) // 2 + 1)]
        ranks = {(w, r): v for (w, r, v) in _map_cells(_odd_cell, cells, args.jobs)}
        predicted = predicted_odd_table(W, D)
        for w in range(W + 1):
            for r in range(1, D + 1):
                c = ranks.get((w, r), 0)
                p = predicted.get((w, r), 0)
                if c == 0 and p == 0:
                    continue
                rows.append([w, r, c, p, "ok" if c == p else "MISMATCH"])
    elif args.target == "full-t1":
        computed = bk_series("full", W, W).t_at_one()
        predicted = hoffman_dims(W)
        for N in range(W + 1):
            rows.append([N, "", computed[N], predicted[N],
                         "ok" if computed[N] == predicted[N] else "MISMATCH"])
    else:
        raise UsageError(f"unknown target {args.target!r}")
    rows.sort(key=lambda row: (row[0], row[1] if isinstance(row[1], int) else -1))
    _emit(args, "bk-check", {"max_weight": W, "max_depth": D,
                             "target": args.target}, rows)
    return 0 if all(row[-1] == "ok" for row in rows) else 1


def _parse_bracket_expr(text: str):
    text = "".join(text.split())
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(text):
            raise UsageError("unexpected end of bracket expression")
        if text[pos] == "{":
            pos += 1
            left = parse()
            if pos >= len(text) or text[pos] != ",":
                raise UsageError("expected ',' in bracket expression")
            pos += 1
            right = parse()
            if pos >= len(text) or text[pos] != "}":
                raise UsageError("expected '}' in bracket expression")
            pos += 1
            return bracket(left, right)
        if text[pos] == "e":
            pos += 1
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            twoN = int(text[start:pos])
            index = 0
            if pos < len(text) and text[pos] == "[":
                close = text.index("]", pos)
                index = int(text[pos + 1:close])
                pos = close + 1
            elements = exceptional_elements(twoN, "auto")
            if index >= len(elements):
                raise UsageError(f"no exceptional element e{twoN}[{index}]")
            return elements[index].reduced
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise UsageError(f"cannot parse bracket expression at {text[pos:]!r}")
        return depth1_generator(int(text[start:pos]))

    result = parse()
    if pos != len(text):
        raise UsageError(f"trailing input in bracket expression: {text[pos:]!r}")
    return result


def cmd_bracket(args) -> int:
    element: DepthPoly = _parse_bracket_expr(args.expr)
    rows = [[",".join(map(str, exps)), format_rational(coeff)]
            for exps, coeff in element.body.sorted_terms()]
    _emit(args, "bracket",
          {"expr": args.expr, "weight": element.weight, "depth": element.depth,
           "terms": len(element.body)},
          rows,
          header_lines=[f"weight {element.weight} depth {element.depth} "
                        f"terms {len(element.body)}"])
    return 0 if rows else 1


def cmd_express(args) -> int:
    composition = tuple(int(x) for x in args.composition.split(","))
    space = solve(sum(composition), len(composition))
    if space.dimension == 0:
        print("solution space is zero-dimensional", file=sys.stderr)
        return 1
    coords = express_in_basis(composition, space)
    rows: list[list] = []
    if args.relative_to:
        reference = tuple(int(x) for x in args.relative_to.split(","))
        ref_coords = express_in_basis(reference, space)
        for i, (c, ref) in enumerate(zip(coords, ref_coords)):
            if ref == 0:
                rows.append([i, args.composition, args.relative_to, "undefined"])
            else:
                rows.append([i, args.composition, args.relative_to,
                             format_rational(Fraction(c, 1) / ref)])
    else:
        rows = [[i, args.composition, format_rational(c)]
                for i, c in enumerate(coords)]
    _emit(args, "express",
          {"composition": list(composition),
           "relative_to": args.relative_to, "dimension": space.dimension},
          rows)
    return 0


def cmd_period(args) -> int:
    twoN = args.weight
    if twoN < 4 or twoN % 2:
        raise UsageError("weight must be even and >= 4")
    elements = basis_S(twoN)
    if not elements:
        print(f"dim S = 0 at weight {twoN}", file=sys.stderr)
        return 1
    rows = []
    for i, pp in enumerate(elements):
        for part, poly in (("P", pp.P), ("f0", pp.f0), ("f1", pp.f1)):
            for exps, coeff in poly.sorted_terms():
                rows.append([i, part, ",".join(map(str, exps)),
                             format_rational(coeff)])
    _emit(args, "period", {"weight": twoN, "dimension": len(elements)}, rows)
    return 0


def cmd_series(args) -> int:
    kind = args.kind
    if kind in ("full", "ls", "odd"):
        series = bk_series(kind, args.max_s, args.max_t)
    else:
        E, O, S = eos(args.max_s, args.max_t)
        series = {"E": E, "O": O, "S": S}[kind]
    rows = [list(triple) for triple in series.dump_rows()]
    _emit(args, "series", {"kind": kind, "max_s": args.max_s,
                           "max_t": args.max_t}, rows)
    return 0


def _check_bounds(max_weight: int, max_depth: int,
                  weight_bound: int = MAX_WEIGHT_BOUND,
                  depth_bound: int = MAX_DEPTH_BOUND) -> None:
    if not (1 <= max_weight <= weight_bound):
        raise UsageError(f"max-weight must be in 1..{weight_bound}")
    if not (1 <= max_depth <= depth_bound):
        raise UsageError(f"max-depth must be in 1..{depth_bound}")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--output", default=None, help="output path (default stdout)")
    p.add_argument("--jobs", type=int, default=1,
                   help="parallel workers over independent cells")
    p.add_argument("--cache-dir", default=None,
                   help="reserved; no persistent cache is used")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doubleshuffle",
        description="Exact computations in the depth-graded double shuffle "
                    "Lie algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="dimension table of the solution spaces")
    p.add_argument("--max-weight", type=int, default=12)
    p.add_argument("--max-depth", type=int, default=4)
    _add_common(p)
    p.set_defaults(fn=cmd_dims)

    p = sub.add_parser("span", help="dimensions of iterated depth-1 bracket spans")
    p.add_argument("--max-weight", type=int, default=12)
    p.add_argument("--max-depth", type=int, default=4)
    _add_common(p)
    p.set_defaults(fn=cmd_span)

    p = sub.add_parser("exceptional", help="dump exceptional depth-4 elements")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--generator", choices=("auto", "paper", "canonical"),
                   default="auto")
    _add_common(p)
    p.set_defaults(fn=cmd_exceptional)

    p = sub.add_parser("bk-check", help="computed vs predicted dimension tables")
    p.add_argument("--max-weight", type=int, default=16)
    p.add_argument("--max-depth", type=int, default=3)
    p.add_argument("--target", choices=("ls", "odd", "full-t1"), default="ls")
    _add_common(p)
    p.set_defaults(fn=cmd_bk_check)

    p = sub.add_parser("bracket", help="evaluate a bracket expression, "
                                       "e.g. '{3,9}' or '{3,{5,7}}' or '{3,e12}'")
    p.add_argument("--expr", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_bracket)

    p = sub.add_parser("express", help="dual-monomial coordinates on a solution space")
    p.add_argument("--composition", required=True,
                   help="comma-separated composition, e.g. 4,3,3,2")
    p.add_argument("--relative-to", default=None,
                   help="reference composition for ratios, e.g. 1,1,8,2")
    _add_common(p)
    p.set_defaults(fn=cmd_express)

    p = sub.add_parser("period", help="cusp period polynomial bases")
    p.add_argument("--weight", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_period)

    p = sub.add_parser("series", help="dump a dimension generating series")
    p.add_argument("--kind", choices=("full", "ls", "odd", "E", "O", "S"),
                   default="ls")
    p.add_argument("--max-s", type=int, default=40)
    p.add_argument("--max-t", type=int, default=8)
    _add_common(p)
    p.set_defaults(fn=cmd_series)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
