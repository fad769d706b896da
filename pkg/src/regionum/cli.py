"""Command-line interface: ``regionum <command> [--pd CODE | --knot NAME] [--json]``.

Exit status is 0 on success, 1 on a computation error (or theorem violations
found by ``verify``) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence

from .diagram import Diagram, apply_region_changes, gen_torus, parse_pd
from .errors import MalformedInput, RegionumError
from .goeritz import goeritz_matrices, smith_normal_form
from .invariants import is_unknot, jones_normalized, kauffman_bracket, writhe
from .regions import checkerboard_shade
from .search import UnknotCache, bound_bracket, mri_of_diagram, reg_of_diagram, verify_theorems
from .table import SCHEMA, batch_verify, ingest_csv, lookup, report_json


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, **payload}))
    else:
        print(text)


def _record(args: argparse.Namespace):
    if not getattr(args, "knot", None):
        return None
    try:
        return lookup(args.knot)
    except KeyError as exc:
        raise UsageError(str(exc)) from None


def _read_diagram(args: argparse.Namespace) -> Diagram:
    rec = _record(args)
    if rec is not None:
        return rec.diagram
    text = args.pd if args.pd is not None else sys.stdin.read()
    text = text.strip()
    if not text:
        raise UsageError("no diagram given: use --pd, --knot or standard input")
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedInput(str(exc)) from None
        return parse_pd(json.dumps(obj["pd"]), obj.get("name"))
    return parse_pd(text)


def _cache(args: argparse.Namespace) -> UnknotCache:
    return UnknotCache(args.cache)


def _num(x: float) -> int | str:
    return int(x) if x != float("inf") else "inf"


def cmd_regions(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    rows = [{"id": r.id, "cost": r.cost, "crossings": sorted(r.incident_crossings)} for r in d.regions]
    text = "\n".join(f"R{r['id']}\tcost {r['cost']}\tcrossings {r['crossings']}" for r in rows)
    _emit(args, {"regions": rows}, text)
    return 0


def cmd_shade(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    sh = checkerboard_shade(d, args.outer_region)
    colors = [c.value for c in sh.colors]
    _emit(args, {"colors": colors, "black": sh.black(), "white": sh.white()},
          f"black {sh.black()}\nwhite {sh.white()}")
    return 0


def _parse_ids(text: str) -> list[int]:
    text = text.strip().strip("[]")
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad region list {text!r}") from None


def cmd_rcc(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    ids = _parse_ids(args.regions)
    out = apply_region_changes(d, ids)
    cert = is_unknot(out, args.cap)
    _emit(args, {"regions": ids, "pd": out.pd(), "certificate": cert.to_json()},
          f"{out}\n{cert.verdict.value} ({cert.evidence.value})")
    return 0


def cmd_goeritz(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    g = goeritz_matrices(d, args.outer_region)
    payload = {
        "shaded": list(g.shaded), "zeta": list(g.zeta),
        "pre_goeritz": g.pre_goeritz, "goeritz": g.goeritz,
        "snf": g.smith.diagonal, "mg2": g.mg2, "det": g.det,
    }
    text = "\n".join(
        [f"shaded regions {list(g.shaded)}", "pre-Goeritz:"]
        + [f"  {row}" for row in g.pre_goeritz]
        + ["Goeritz:"] + [f"  {row}" for row in g.goeritz]
        + [f"SNF {g.smith.diagonal}  mg2 {g.mg2}  det {g.det}"]
    )
    _emit(args, payload, text)
    return 0


def cmd_snf(args: argparse.Namespace) -> int:
    try:
        m = json.loads(args.matrix)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad matrix: {exc}") from None
    if not isinstance(m, list) or any(not isinstance(r, list) for r in m) or len({len(r) for r in m}) > 1:
        raise UsageError("matrix must be a rectangular list of integer rows")
    s = smith_normal_form(m)
    _emit(args, {"diagonal": s.diagonal, "left": s.left, "right": s.right}, str(s.diagonal))
    return 0


def cmd_mg2(args: argparse.Namespace) -> int:
    v = goeritz_matrices(_read_diagram(args), args.outer_region).mg2
    _emit(args, {"mg2": v}, str(v))
    return 0


def cmd_det(args: argparse.Namespace) -> int:
    v = goeritz_matrices(_read_diagram(args), args.outer_region).det
    _emit(args, {"det": v}, str(v))
    return 0


def cmd_jones(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    b = kauffman_bracket(d, args.cap)
    f = jones_normalized(d, args.cap)
    _emit(args, {"writhe": writhe(d), "bracket": b.to_json(), "jones": f.to_json()},
          f"bracket {b}\nf {f}")
    return 0


def cmd_unknot(args: argparse.Namespace) -> int:
    cert = is_unknot(_read_diagram(args), args.cap)
    _emit(args, cert.to_json(), f"{cert.verdict.value} ({cert.evidence.value})")
    return 0


def cmd_mri(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    r = mri_of_diagram(d, prune=not args.no_prune, cap=args.cap, cache=_cache(args), threads=args.threads)
    _emit(args, {"name": d.name, "crossings": d.crossing_count, "mri": r.mri,
                 "mri_witness": list(r.mri_witness), "reg": _num(r.reg),
                 "targets_examined": r.targets_examined}, str(r.mri))
    return 0


def cmd_reg(args: argparse.Namespace) -> int:
    d = _read_diagram(args)
    reg, rid = reg_of_diagram(d, args.cap, _cache(args))
    _emit(args, {"reg": _num(reg), "reg_witness": rid}, str(_num(reg)))
    return 0


def _records_or_diagram(args: argparse.Namespace):
    if args.csv:
        diagnostics: list[str] = []
        records = ingest_csv(args.csv, diagnostics)
        for msg in diagnostics:
            print(f"warning: {msg}", file=sys.stderr)
        if diagnostics and not records:
            raise RegionumError("every row of the table was rejected")
        return records
    return None


def cmd_bounds(args: argparse.Namespace) -> int:
    records = _records_or_diagram(args)
    cache = _cache(args)
    if records is None:
        d = _read_diagram(args)
        pairs = [(d.name, d, _record(args))]
    else:
        pairs = [(r.name, r.diagram, r) for r in records]
    rows = []
    for name, d, rec in pairs:
        res = mri_of_diagram(d, prune=not args.no_prune, cap=args.cap, cache=cache, threads=args.threads)
        b = bound_bracket(d, rec, res)
        rows.append({"name": name, "lower": b.lower.to_json(), "upper": b.upper.to_json(), "tight": b.tight})
    text = "\n".join(
        f"{r['name']}\t{r['lower']['value']} <= MRI <= {r['upper']['value']}"
        f"\t{'tight' if r['tight'] else ''}\t{','.join(r['lower']['provenance'])}"
        for r in rows
    )
    _emit(args, {"bounds": rows}, text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    records = _records_or_diagram(args)
    if records is None:
        d = _read_diagram(args)
        res = mri_of_diagram(d, prune=not args.no_prune, cap=args.cap, cache=_cache(args), threads=args.threads)
        rep = report_json(d.name, d, verify_theorems(d, _record(args), res))
        _emit(args, {k: v for k, v in rep.items() if k != "schema"}, json.dumps(rep, indent=1))
        return 0
    summary = batch_verify(records, args.cap, not args.no_prune, _cache(args), args.threads)
    payload = summary.to_json()
    payload.pop("schema")
    text = "\n".join(
        [f"{r['name']}\tc={r['crossings']}\tmri={r['mri']}\treg={r['reg']}\tmg2={r['mg2']}"
         f"\tdet={r['det']}\t[{r['lower']['value']}, {r['upper']['value']}]" for r in summary.reports]
        + [(f"{len(summary.reports)} knots, {summary.tight} tight, "
           f"{len(summary.violations)} violations, {summary.seconds:.1f} s")]
    )
    _emit(args, payload, text)
    return 1 if summary.violations else 0


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family != "torus":
        raise UsageError(f"unknown family {args.family!r}")
    if args.k < 1:
        raise UsageError("--k must be a positive integer")
    d = gen_torus(args.k)
    _emit(args, {"name": d.name, "pd": d.pd()}, str(d))
    return 0


COMMANDS: dict[str, tuple[Callable[[argparse.Namespace], int], str]] = {
    "regions": (cmd_regions, "list regions with their boundary crossings"),
    "shade": (cmd_shade, "checkerboard shading"),
    "rcc": (cmd_rcc, "apply region crossing changes"),
    "goeritz": (cmd_goeritz, "pre-Goeritz and Goeritz matrices"),
    "snf": (cmd_snf, "Smith normal form of an integer matrix"),
    "mg2": (cmd_mg2, "count of Smith diagonal entries above one"),
    "det": (cmd_det, "knot determinant"),
    "jones": (cmd_jones, "Kauffman bracket and normalised Jones polynomial"),
    "unknot": (cmd_unknot, "unknot certificate"),
    "mri": (cmd_mri, "multi-region index of the diagram"),
    "reg": (cmd_reg, "cheapest single unknotting region"),
    "bounds": (cmd_bounds, "lower and upper bounds on the knot's multi-region index"),
    "verify": (cmd_verify, "check the region-index theorems"),
    "gen": (cmd_gen, "generate a diagram family"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--outer-region", type=int, default=0, metavar="ID")
    common.add_argument("--cap", type=int, default=16, help="crossing cap for searches")
    common.add_argument("--no-prune", action="store_true", help="exhaust every target")
    common.add_argument("--cache", metavar="PATH", help="JSON-lines unknot certificate cache")
    common.add_argument("--threads", type=int, default=1)
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--pd", help="PD code; read from standard input when omitted")
    source.add_argument("--knot", help="name of a bundled knot, e.g. 3_1")

    parser = argparse.ArgumentParser(
        prog="regionum",
        description="Region crossing change costs, Goeritz invariants and unknot certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (fn, help_text) in COMMANDS.items():
        parents = [common] if name in ("snf", "gen") else [common, source]
        p = sub.add_parser(name, parents=parents, help=help_text)
        p.set_defaults(func=fn)
        if name == "rcc":
            p.add_argument("--regions", required=True, help="region ids, e.g. 1,4")
        elif name == "snf":
            p.add_argument("--matrix", required=True, help="JSON integer matrix")
        elif name in ("bounds", "verify"):
            p.add_argument("--csv", help="knot table with the standard header")
        elif name == "gen":
            p.add_argument("family", choices=["torus"])
            p.add_argument("--k", type=int, required=True)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"regionum: error: {exc}", file=sys.stderr)
        return 2
    except (RegionumError, OSError) as exc:
        print(f"regionum: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
