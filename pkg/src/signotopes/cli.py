"""Command-line surface: counts, tables, maps, verification, reports.

Exit codes: 0 success, 1 usage or input error, 2 refusal of a request
outside a proven bound (or past an oracle guard), 3 internal invariant
violation such as two counting methods disagreeing.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile

from . import __version__
from .bijection import map_cosignotope
from .components import classify, p_sequence
from .cosignotopes import Alignment, CoSignotope, cosignotope_is_valid, series_alignment
from .counting import (
    build_table,
    conjecture_check,
    plus_count_formula,
    tightness_counts,
)
from .enumeration import enumerate_level_bfs, enumerate_naive, hasse_truncated
from .errors import BoundRefusal, InternalCheckError
from .ferrers import count_ferrers, enumerate_ferrers
from .serialize import (
    cosignotope_from_dict,
    cosignotope_to_dict,
    diagram_to_dict,
    dumps_canonical,
    hasse_to_adjacency,
    hasse_to_dot,
    read_ndjson,
    table_to_csv,
    table_to_triples,
)
from .subsets import GroundParams, series


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2; we want 1
        raise _UsageError(message)


# --- cache -----------------------------------------------------------------

_CACHE_FILE = "counts.json"


def _cache_dir() -> str:
    env = os.environ.get("SIGNOTOPES_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "signotopes")


def _load_cache() -> dict[str, int]:
    path = os.path.join(_cache_dir(), _CACHE_FILE)
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return {}
    if not isinstance(obj, dict) or obj.get("version") != __version__:
        return {}  # stale or foreign cache: ignore, never migrate
    counts = obj.get("counts")
    if not isinstance(counts, dict):
        return {}
    return {k: v for k, v in counts.items() if isinstance(v, int)}


def _save_cache(counts: dict[str, int]) -> None:
    directory = _cache_dir()
    os.makedirs(directory, exist_ok=True)
    payload = (
        dumps_canonical(
            {"version": __version__, "counts": {k: counts[k] for k in sorted(counts)}}
        )
        + "\n"
    )
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp, os.path.join(directory, _CACHE_FILE))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# --- shared plumbing --------------------------------------------------------


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, output: str | None) -> bytes:
    data = text.encode("utf-8")
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "wb") as fh:
            fh.write(data)
    return data


def _write_manifest(path: str, command: str, params: dict, payload: bytes) -> None:
    manifest = {
        "command": command,
        "params": params,
        "version": __version__,
        "digest": "sha256:" + hashlib.sha256(payload).hexdigest(),
    }
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_canonical(manifest) + "\n")


# --- handlers ---------------------------------------------------------------


def _cmd_count(args: argparse.Namespace) -> int:
    d, p = args.d, args.p
    if d < 1 or p < 0:
        raise ValueError("--d must be >= 1 and --p must be >= 0")
    methods = ["formula", "bfs", "naive"] if args.method == "all" else [args.method]
    n = args.n if args.n is not None else max(d + p, d + 1)
    cacheable = n == max(d + p, d + 1)
    cache = _load_cache()
    dirty = False
    values: dict[str, int] = {}
    for method in methods:
        key = f"{d}:{p}:{method}"
        if cacheable and key in cache:
            values[method] = cache[key]
            continue
        if method == "formula":
            value = plus_count_formula(d, p)
        else:
            params = GroundParams(n, d)
            enum = (
                enumerate_level_bfs(params, p)
                if method == "bfs"
                else enumerate_naive(params, p)
            )
            value = len(enum.levels[p])
        values[method] = value
        if cacheable:
            cache[key] = value
            dirty = True
    if dirty:
        _save_cache(cache)
    for method in methods:
        print(f"{method} {values[method]}")
    if len(set(values.values())) > 1:
        print("count methods disagree", file=sys.stderr)
        return 3
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    table = build_table(args.max_d, args.max_p)
    if args.format == "csv":
        text = table_to_csv(table)
    else:
        text = dumps_canonical(table_to_triples(table)) + "\n"
    payload = _emit(text, args.output)
    if args.figure:
        from .figures import render_table_curves

        render_table_curves(table, args.figure)
    if args.manifest:
        _write_manifest(
            args.manifest,
            "table",
            {"max_d": args.max_d, "max_p": args.max_p, "format": args.format},
            payload,
        )
    return 0


def _cmd_map(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    out_lines: list[str] = []
    failures = 0
    for lineno, obj in read_ndjson(text):
        try:
            t = cosignotope_from_dict(obj)
            image = map_cosignotope(t, args.to_n, t.plus_count)
        except BoundRefusal as exc:
            print(f"record at line {lineno} refused: {exc}", file=sys.stderr)
            failures += 1
            continue
        except ValueError as exc:
            print(f"record at line {lineno}: {exc}", file=sys.stderr)
            failures += 1
            continue
        out_lines.append(dumps_canonical(cosignotope_to_dict(image)))
    payload = _emit("".join(line + "\n" for line in out_lines), args.output)
    if args.manifest:
        _write_manifest(args.manifest, "map", {"to_n": args.to_n}, payload)
    return 2 if failures else 0


def _offending_series(t: CoSignotope) -> dict | None:
    for B in t.sorted_plus():
        for j in range(1, t.params.d + 1):
            if series_alignment(t, B, j) is Alignment.INVALID:
                signs = "".join(
                    "+" if S in t.plus else "-" for S in series(t.params, B, j)
                )
                return {"B": list(B), "slot": j, "signs": signs}
    return None


def _cmd_verify(args: argparse.Namespace) -> int:
    text = _read_input(args.input)
    lines: list[str] = []
    for lineno, obj in read_ndjson(text):
        t = cosignotope_from_dict(obj)
        valid = cosignotope_is_valid(t)
        report: dict = {
            "record": lineno,
            "n": t.params.n,
            "d": t.params.d,
            "valid": valid,
            "plus_count": t.plus_count,
        }
        if valid:
            if t.plus_count <= t.params.r:  # component theory needs p <= n-d
                report["p_sequence"] = list(p_sequence(t))
                report["classification"] = [
                    [list(B), classify(t, B)] for B in t.sorted_plus()
                ]
            else:
                report["p_sequence"] = None
                report["classification"] = None
        else:
            report["offending_series"] = _offending_series(t)
        lines.append(dumps_canonical(report))
    _emit("".join(line + "\n" for line in lines), args.output)
    return 0


def _cmd_ferrers(args: argparse.Namespace) -> int:
    if args.count_only and args.figure:
        raise ValueError("--figure requires the enumerated diagrams; drop --count-only")
    if args.count_only:
        print(count_ferrers(args.d, args.i, args.p))
        return 0
    diagrams = enumerate_ferrers(args.d, args.i, args.p)
    text = "".join(dumps_canonical(diagram_to_dict(dg)) + "\n" for dg in diagrams)
    payload = _emit(text, args.output)
    if args.figure:
        from .figures import render_ferrers_grid

        render_ferrers_grid(diagrams, args.figure)
    if args.manifest:
        _write_manifest(
            args.manifest,
            "ferrers",
            {"d": args.d, "i": args.i, "p": args.p},
            payload,
        )
    return 0


def _cmd_hasse(args: argparse.Namespace) -> int:
    params = GroundParams(args.n, args.d)
    h = hasse_truncated(params, args.p)
    if args.format == "dot":
        text = hasse_to_dot(h)
    else:
        text = dumps_canonical(hasse_to_adjacency(h)) + "\n"
    payload = _emit(text, args.output)
    if args.figure:
        from .figures import render_hasse

        render_hasse(h, args.figure)
    if args.manifest:
        _write_manifest(
            args.manifest,
            "hasse",
            {"n": args.n, "d": args.d, "p": args.p, "format": args.format},
            payload,
        )
    return 0


def _cmd_conjecture(args: argparse.Namespace) -> int:
    if args.max_d < 2:
        raise ValueError("--max-d must be >= 2")
    all_hold = True
    for d in range(2, args.max_d + 1):
        holds = conjecture_check(d)
        all_hold = all_hold and holds
        lhs = plus_count_formula(d, 3)
        rhs = (
            plus_count_formula(d - 1, 3)
            + plus_count_formula(d - 1, 2)
            + plus_count_formula(d - 1, 1)
            + 3
        )
        print(f"d={d}: level-3 size {lhs}, recursion gives {rhs}: "
              f"{'holds' if holds else 'FAILS'}")
    if all_hold:
        print(f"recursion verified for d in [2,{args.max_d}]; open beyond that range")
        return 0
    print("recursion fails inside the checked range", file=sys.stderr)
    return 3


def _cmd_tightness(args: argparse.Namespace) -> int:
    tc = tightness_counts(args.n)
    d = tc.n - 1
    print(
        f"ground set [{tc.n}], d={d} (binary strings, <= 2 ones): "
        f"formula {tc.strings_formula}, enumerated {tc.strings_enumerated}"
    )
    print(
        f"ground set [{tc.n + 1}], d={d} (permutations, <= 2 inversions): "
        f"formula {tc.perms_formula}, enumerated {tc.perms_enumerated}"
    )
    print(
        f"gap {tc.gap} = n-1: levels <= 2 differ in size, so no level-preserving "
        f"bijection exists beyond level min(n, n+1) - d = 1"
    )
    if (
        tc.strings_formula != tc.strings_enumerated
        or tc.perms_formula != tc.perms_enumerated
    ):
        print("formula and enumeration disagree", file=sys.stderr)
        return 3
    return 0


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="signotopes",
        description="Co-signotope counting, mapping, and reporting.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pc = sub.add_parser("count", help="level size by formula and/or enumeration")
    pc.add_argument("--d", type=int, required=True, help="subset size d")
    pc.add_argument("--p", type=int, required=True, help="level (plus count)")
    pc.add_argument(
        "--method",
        choices=["formula", "bfs", "naive", "all"],
        default="formula",
    )
    pc.add_argument(
        "--n",
        type=int,
        default=None,
        help="ground set size for bfs/naive (default max(d+p, d+1))",
    )
    pc.set_defaults(handler=_cmd_count)

    pt = sub.add_parser("table", help="level-size table over a (d, p) grid")
    pt.add_argument("--max-d", type=int, required=True)
    pt.add_argument("--max-p", type=int, required=True)
    pt.add_argument("--format", choices=["csv", "json"], default="csv")
    pt.add_argument("--output", default=None, help="output path (default stdout)")
    pt.add_argument("--figure", default=None, help="also render growth curves to this file")
    pt.add_argument("--manifest", default=None, help="write a run manifest to this file")
    pt.set_defaults(handler=_cmd_table)

    pm = sub.add_parser("map", help="map co-signotope records to a new ground set")
    pm.add_argument("--input", required=True, help="NDJSON records ('-' for stdin)")
    pm.add_argument("--to-n", type=int, required=True, dest="to_n")
    pm.add_argument("--output", default=None)
    pm.add_argument("--manifest", default=None)
    pm.set_defaults(handler=_cmd_map)

    pv = sub.add_parser("verify", help="validity and component report per record")
    pv.add_argument("--input", required=True, help="NDJSON records ('-' for stdin)")
    pv.add_argument("--output", default=None)
    pv.set_defaults(handler=_cmd_verify)

    pf = sub.add_parser("ferrers", help="enumerate or count generalized diagrams")
    pf.add_argument("--d", type=int, required=True)
    pf.add_argument("--i", type=int, required=True, help="source index in [0, d]")
    pf.add_argument("--p", type=int, required=True, help="number of points")
    pf.add_argument("--count-only", action="store_true")
    pf.add_argument("--output", default=None)
    pf.add_argument("--figure", default=None, help="cell pictures (d <= 2 only)")
    pf.add_argument("--manifest", default=None)
    pf.set_defaults(handler=_cmd_ferrers)

    ph = sub.add_parser("hasse", help="truncated single-step order as DOT or JSON")
    ph.add_argument("--n", type=int, required=True)
    ph.add_argument("--d", type=int, required=True)
    ph.add_argument("--p", type=int, required=True)
    ph.add_argument("--format", choices=["dot", "json"], default="dot")
    ph.add_argument("--output", default=None)
    ph.add_argument("--figure", default=None, help="layered drawing of the order")
    ph.add_argument("--manifest", default=None)
    ph.set_defaults(handler=_cmd_hasse)

    pj = sub.add_parser("conjecture", help="check the level-3 recursion per d")
    pj.add_argument("--max-d", type=int, default=7)
    pj.set_defaults(handler=_cmd_conjecture)

    pa = sub.add_parser(
        "tightness", help="level-bound tightness: the two families at levels <= 2"
    )
    pa.add_argument("--n", type=int, required=True)
    pa.set_defaults(handler=_cmd_tightness)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.handler(args)
    except BoundRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def app() -> None:
    sys.exit(main())
