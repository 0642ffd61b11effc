"""Command-line front end.

Every command prints one record, JSON by default. Exit status is 0 whenever
the query was understood, whatever the mathematical answer; 2 signals a
parse or lookup failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .classify import explain_irrep, galois_conjugate_weight, irreducible_hrep
from .minrep import MinRepResult, minimal_quaternionic_rep
from .realforms import Catalog, RealFormError, default_catalog, format_catalog, load_catalog
from .rootsys import (
    DominantWeight,
    LieType,
    bourbaki_to_printed,
    build_root_system,
    translate_printed_weight,
    weyl_dim,
)
from .spaces import (
    Verdict,
    check_affine_e7,
    check_bound,
    check_exceptional_transitive,
    check_qk_symmetric,
    compact_dual,
    flat_space,
    space_for_form,
)
from .tables import SCHEMA_VERSION, build_table, to_json, to_tsv


class UsageError(Exception):
    pass


def parse_weight(text: str, lie_type: LieType, paper_labels: bool = False) -> DominantWeight:
    tokens = [t.strip() for t in text.split(",")] if text.strip() else []
    coords = []
    for pos, tok in enumerate(tokens, start=1):
        if not tok.isdigit():
            raise UsageError(f"bad weight coordinate {tok!r} at position {pos}: expected a nonnegative integer")
        coords.append(int(tok))
    if len(coords) != lie_type.rank:
        raise UsageError(f"weight {text!r} has {len(coords)} coordinates, {lie_type} needs {lie_type.rank}")
    if paper_labels:
        coords = list(translate_printed_weight(lie_type, coords))
    return DominantWeight(tuple(coords))


def _node_fields(nodes, lie_type: LieType, paper_labels: bool) -> dict:
    out = {"nodes": sorted(nodes)}
    if paper_labels:
        out["printed_nodes"] = sorted(bourbaki_to_printed(lie_type, i) for i in nodes)
    return out


def _coords(w: DominantWeight) -> list[int]:
    return list(w.coords)


def _minrep_payload(res: MinRepResult, lie_type: LieType, paper_labels: bool) -> dict:
    minimizers = []
    for d in res.minimizers:
        item = {"kind": d.kind.value, "weight": _coords(d.weight), "conjugate": _coords(d.conjugate),
                "label": d.label(), "real_dim": d.real_dim}
        item.update(_node_fields(d.nodes, lie_type, paper_labels))
        minimizers.append(item)
    payload = {"form": res.form, "real_dim": res.real_dim, "minimizers": minimizers,
               "weights_examined": res.examined}
    payload.update(_node_fields(res.nodes, lie_type, paper_labels))
    return payload


def _verdict_payload(v: Verdict, lie_type: Optional[LieType], paper_labels: bool) -> dict:
    payload = {
        "outcome": v.outcome.value,
        "integrable": v.integrable,
        "bound_lhs": v.bound_lhs,
        "bound_rhs": v.bound_rhs,
        "inequality": v.inequality,
        "note": v.note,
        "warnings": list(v.warnings),
        "deferred": v.deferred,
    }
    if v.witness is not None:
        payload["witness"] = _minrep_payload(v.witness, lie_type, paper_labels)
    return payload


# ---------------------------------------------------------------------------
# commands


def cmd_dim(args, catalog: Catalog) -> dict:
    try:
        t = LieType.parse(args.type)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    w = parse_weight(args.weight, t, args.paper_labels)
    d = weyl_dim(build_root_system(t), w)
    return {"query": {"type": str(t), "weight": _coords(w)},
            "result": {"complex_dim": d, "real_dim": 2 * d}}


def cmd_classify(args, catalog: Catalog) -> dict:
    f = catalog.lookup(args.form)
    w = parse_weight(args.weight, f.complex_type, args.paper_labels)
    c = explain_irrep(f, w)
    desc = irreducible_hrep(f, w)
    return {
        "query": {"form": f.name, "weight": _coords(w)},
        "result": {
            "class": c.rep_class.value,
            "epsilon": c.rep_class.epsilon,
            "reason": c.reason,
            "conjugate_weight": _coords(galois_conjugate_weight(f, w)),
            "hrep": {"kind": desc.kind.value, "weight": _coords(desc.weight),
                     "conjugate": _coords(desc.conjugate), "real_dim": desc.real_dim},
        },
    }


def cmd_minrep(args, catalog: Catalog) -> dict:
    f = catalog.lookup(args.form)
    res = minimal_quaternionic_rep(f)
    return {"query": {"form": f.name, "type": str(f.complex_type)},
            "result": _minrep_payload(res, f.complex_type, args.paper_labels)}


def cmd_catalog(args, catalog: Catalog) -> dict:
    forms = [{"name": f.name, "type": str(f.complex_type), "involution": list(f.galois_involution),
              "compact": sorted(f.compact_nodes), "q": sorted(f.q_set), "provenance": f.provenance}
             for f in catalog.forms]
    return {"query": {"source": catalog.source}, "result": {"forms": forms}}


def cmd_check(args, catalog: Catalog) -> dict:
    kind = args.check
    if kind == "qk":
        if args.flat is not None:
            s = flat_space(args.flat)
        elif args.name is None:
            raise UsageError("check qk needs a form name or --flat N")
        else:
            s = space_for_form(args.name, catalog)
            if args.compact:
                s = compact_dual(s, catalog)
        v = check_qk_symmetric(s)
        lie = s.g.complex_type if s.g else None
        query = {"space": s.label, "curvature": s.curvature_class.value, "dim": s.dim_gk}
    elif kind == "bound":
        f = catalog.lookup(args.form)
        try:
            v = check_bound(f, args.dim)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        lie = f.complex_type
        query = {"form": f.name, "dim": args.dim}
    elif kind == "exceptional":
        f = catalog.lookup(args.form)
        try:
            v = check_exceptional_transitive(f)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        lie = f.complex_type
        query = {"form": f.name}
    else:
        try:
            v = check_affine_e7(args.h, args.form, catalog)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        lie = LieType("E", 7)
        query = {"form": catalog.lookup(args.form).name, "h": args.h}
    return {"query": query, "result": _verdict_payload(v, lie, args.paper_labels)}


# ---------------------------------------------------------------------------
# output


def _flatten(prefix: str, value, out: list[tuple[str, str]]):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], out)
    elif isinstance(value, list) and any(isinstance(x, (dict, list)) for x in value):
        for i, x in enumerate(value):
            _flatten(f"{prefix}.{i}", x, out)
    elif isinstance(value, list):
        out.append((prefix, ",".join(map(str, value))))
    elif value is None:
        out.append((prefix, ""))
    elif isinstance(value, bool):
        out.append((prefix, "true" if value else "false"))
    else:
        out.append((prefix, str(value)))


def render(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    rows: list[tuple[str, str]] = []
    _flatten("", record, rows)
    return "".join(f"{k}\t{v}\n" for k, v in rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default=argparse.SUPPRESS,
                        help="output format (default json)")
    common.add_argument("--paper-labels", action="store_true", default=argparse.SUPPRESS,
                        help="read and report E6/E7/E8/F4 nodes in the printed labelling")
    common.add_argument("--catalog", metavar="PATH", default=argparse.SUPPRESS,
                        help="real-form data file to use instead of the shipped one")

    p = argparse.ArgumentParser(prog="quatrep", parents=[common],
                                description="Quaternionic representations of real simple Lie algebras.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dim", parents=[common], help="Weyl dimension of an irreducible module")
    s.add_argument("type", help="Lie type such as A3 or E7")
    s.add_argument("weight", help="comma-separated coordinates, Bourbaki node order")

    s = sub.add_parser("classify", parents=[common], help="real / quaternionic / not self-conjugate")
    s.add_argument("form")
    s.add_argument("weight")

    s = sub.add_parser("minrep", parents=[common], help="minimal quaternionic representation")
    s.add_argument("form")

    s = sub.add_parser("tables", parents=[common], help="regenerate table 1, 2 or 3")
    s.add_argument("which", type=int, choices=(1, 2, 3))
    s.add_argument("table_format", nargs="?", choices=("tsv", "json"), help="shorthand for --format")

    sub.add_parser("catalog", parents=[common], help="list the loaded real forms")

    s = sub.add_parser("check", parents=[common], help="integrability verdicts")
    checks = s.add_subparsers(dest="check", required=True)
    c = checks.add_parser("qk", parents=[common], help="quaternion-Kaehler symmetric space")
    c.add_argument("name", nargs="?", help="isometry algebra of a non-compact space, e.g. su(3,2)")
    c.add_argument("--compact", action="store_true", help="use the compact dual instead")
    c.add_argument("--flat", type=int, metavar="N", help="the flat space H^N")
    c = checks.add_parser("bound", parents=[common], help="dimension bound for an action on a manifold")
    c.add_argument("form")
    c.add_argument("dim", type=int)
    c = checks.add_parser("exceptional", parents=[common], help="transitive actions of E6, E8, F4, G2 forms")
    c.add_argument("form")
    c = checks.add_parser("affine-e7", parents=[common], help="affine symmetric spaces of E7 forms")
    c.add_argument("h", nargs="?", help="subalgebra, e.g. su(6,2) or so*(12)+sl(2,R)")
    c.add_argument("--form", default="e7(-5)", help="real form of E7 (default e7(-5))")
    return p


COMMANDS = {"dim": cmd_dim, "classify": cmd_classify, "minrep": cmd_minrep, "catalog": cmd_catalog,
            "check": cmd_check}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", "json")
    args.paper_labels = getattr(args, "paper_labels", False)
    try:
        catalog = load_catalog(args.catalog) if getattr(args, "catalog", None) else default_catalog()
        if args.command == "tables":
            fmt = args.table_format or fmt
            rows = build_table(args.which, catalog)
            out.write(to_tsv(args.which, rows) if fmt == "tsv" else to_json(args.which, rows))
            return 0
        if args.command == "catalog" and fmt == "tsv":
            out.write(format_catalog(catalog.forms))
            return 0
        record = COMMANDS[args.command](args, catalog)
    except (UsageError, RealFormError, LookupError, OSError) as exc:
        err.write(f"quatrep: error: {exc}\n")
        return 2
    record = {"schema_version": SCHEMA_VERSION, "command": args.command, **record}
    out.write(render(record, fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
