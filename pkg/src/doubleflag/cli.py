"""Command-line front end.

Subcommands: enumerate, invariants, hasse, hecke-matrix, weyl-decomp,
verify.  Output is deterministic: fixed enumeration order, sorted JSON
keys, newline-terminated files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .core import Shape, count_orbits, enumerate_graphs, invariants, rank_matrix
from .hecke import operator_matrix, verify_relations, weyl_decompose
from .oracle import certify_theorem, classify_orbits, gaussian_binomial
from .poset import build_poset, to_dot


def _shape_args(sub):
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)
    sub.add_argument("--out", help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doubleflag",
        description="K-orbit combinatorics and Hecke module structure "
        "of the (p,q|r) double flag variety",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("enumerate", help="list all orbit graphs")
    _shape_args(sub)
    sub.add_argument("--format", choices=["json"], default="json")

    sub = subs.add_parser("invariants", help="orbital invariants and dimensions")
    _shape_args(sub)
    sub.add_argument("--format", choices=["text", "json"], default="text")

    sub = subs.add_parser("hasse", help="closure order as a DOT diagram")
    _shape_args(sub)
    sub.add_argument("--format", choices=["dot"], default="dot")

    sub = subs.add_parser("hecke-matrix", help="matrix of one Hecke generator")
    _shape_args(sub)
    sub.add_argument("--side", choices=["+", "-"], required=True)
    sub.add_argument("--index", type=int, required=True, help="generator index i")
    sub.add_argument("--format", choices=["csv"], default="csv")

    sub = subs.add_parser("weyl-decomp", help="Weyl group decomposition at q=1")
    _shape_args(sub)
    sub.add_argument("--format", choices=["json"], default="json")

    sub = subs.add_parser("verify", help="relations + finite-field certification")
    _shape_args(sub)
    sub.add_argument(
        "--field",
        type=int,
        action="append",
        default=None,
        help="odd prime field size (repeatable; default 3)",
    )
    sub.add_argument("--format", choices=["json"], default="json")

    return parser


def _emit(text: str, out_path):
    if not text.endswith("\n"):
        text += "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_enumerate(args, shape) -> int:
    records = [g.to_json() for g in enumerate_graphs(shape)]
    _emit(json.dumps(records, sort_keys=True, indent=2), args.out)
    return 0


def _cmd_invariants(args, shape) -> int:
    rows = []
    for g in enumerate_graphs(shape):
        inv = invariants(g)
        rows.append(
            {
                "graph": g.to_json(),
                "a_plus": inv.a_plus,
                "a_minus": inv.a_minus,
                "b": inv.b,
                "c": inv.c,
                "dim": inv.dim,
                "rank_matrix": [list(row) for row in rank_matrix(g).entries],
            }
        )
    if args.format == "json":
        _emit(json.dumps(rows, sort_keys=True, indent=2), args.out)
    else:
        lines = []
        for row in rows:
            g = row["graph"]
            desc = (
                f"edges={g['edges']} marked+={g['marked_plus']} "
                f"marked-={g['marked_minus']}"
            )
            lines.append(
                f"{desc}  a+={row['a_plus']} a-={row['a_minus']} "
                f"b={row['b']} c={row['c']} dim={row['dim']}"
            )
            for mrow in row["rank_matrix"]:
                lines.append("    " + " ".join(str(x) for x in mrow))
        _emit("\n".join(lines), args.out)
    return 0


def _cmd_hasse(args, shape) -> int:
    _emit(to_dot(build_poset(shape)), args.out)
    return 0


def _cmd_hecke_matrix(args, shape) -> int:
    op = operator_matrix(shape, args.side, args.index)
    buf = io.StringIO()
    writer = csv.writer(buf)
    for row in op.entries:
        writer.writerow([str(e) for e in row])
    _emit(buf.getvalue(), args.out)
    return 0


def _cmd_weyl_decomp(args, shape) -> int:
    blocks = weyl_decompose(shape)
    payload = {
        "shape": {"p": shape.p, "q": shape.q, "r": shape.r},
        "total_orbits": count_orbits(shape),
        "blocks": [
            {
                "k": blk.triple[0],
                "s": blk.triple[1],
                "t": blk.triple[2],
                "orbit_size": blk.orbit_size,
                "stabilizer_order": blk.stabilizer_order,
            }
            for blk in blocks
        ],
    }
    _emit(json.dumps(payload, sort_keys=True, indent=2), args.out)
    return 0


def _cmd_verify(args, shape) -> int:
    fields = args.field or [3]
    ok = True
    payload = {"shape": {"p": shape.p, "q": shape.q, "r": shape.r}, "fields": fields}

    n_graphs = len(enumerate_graphs(shape))
    payload["orbit_count"] = {
        "enumerated": n_graphs,
        "formula": count_orbits(shape),
        "ok": n_graphs == count_orbits(shape),
    }
    ok &= payload["orbit_count"]["ok"]

    relations = verify_relations(shape)
    payload["relations"] = [{"name": rc.name, "ok": rc.ok} for rc in relations]
    ok &= all(rc.ok for rc in relations)

    payload["certification"] = []
    for field_size in fields:
        cls = classify_orbits(shape, field_size)
        sizes_ok = sum(cls.sizes) == gaussian_binomial(shape.n, shape.r, field_size)
        report = certify_theorem(shape, [field_size])
        payload["certification"].append(
            {
                "field": field_size,
                "classification_ok": sizes_ok,
                "action_ok": report.ok,
                "mismatches": len(report.mismatches),
            }
        )
        ok &= sizes_ok and report.ok

    payload["ok"] = bool(ok)
    _emit(json.dumps(payload, sort_keys=True, indent=2), args.out)
    return 0 if ok else 1


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "invariants": _cmd_invariants,
    "hasse": _cmd_hasse,
    "hecke-matrix": _cmd_hecke_matrix,
    "weyl-decomp": _cmd_weyl_decomp,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        shape = Shape(args.p, args.q, args.r)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command](args, shape)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
