"""Command-line front end: `superprim <subcommand> <family> <m> <n> ...`.

All structured output is JSON with sorted keys (DOT for `hasse`).  Exit
codes: 0 success, 1 usage error, 2 domain error with a JSON error object
on standard output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import SuperprimError
from .hecke import Hecke
from .predicates import classification_witnesses, classify, typicalizing_shift
from .primorder import PrimOrder
from .restriction import penkov_restrict, weyl_dim_even
from .rootsystem import (
    RootSystem,
    build_root_system,
    format_weight,
    parse_weight,
)
from .star import odd_support, star_orbit
from .weyl import DEFAULT_MAX_GROUP_ORDER, WeylGroup

SUBCOMMANDS = (
    "roots",
    "check",
    "orbit",
    "restrict",
    "kl",
    "cells",
    "order",
    "hasse",
    "shift",
)

VALUE_FLAGS = {"--weight", "-w", "--nu", "--lambda", "--format", "--margin",
               "--max-group-order"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print("usage error: %s" % message, file=sys.stderr)
        raise SystemExit(1)


def _emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))


def _join_flag_values(argv: list[str]) -> list[str]:
    """Glue `--nu -1,2` into `--nu=-1,2` so negative literals parse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in VALUE_FLAGS and i + 1 < len(argv):
            out.append("%s=%s" % (tok, argv[i + 1]))
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def build_parser() -> _Parser:
    parser = _Parser(prog="superprim")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("family", choices=["gl", "osp"])
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)
        p.add_argument("--weight", "-w", dest="weight")
        p.add_argument("--nu", dest="nu")
        p.add_argument("--lambda", dest="lam")
        p.add_argument("--format", dest="format", choices=["dot", "json"],
                       default="dot")
        p.add_argument("--margin", dest="margin")
        p.add_argument("--max-group-order", dest="max_group_order", type=int,
                       default=DEFAULT_MAX_GROUP_ORDER)
    return parser


def _need(args, attr, flag):
    value = getattr(args, attr)
    if value is None:
        print("usage error: %s requires %s" % (args.command, flag),
              file=sys.stderr)
        raise SystemExit(1)
    return value


def _root_payload(rs: RootSystem):
    return {
        "family": rs.family,
        "m": rs.m,
        "n": rs.n,
        "pos_even": [format_weight(r.vector) for r in rs.pos_even],
        "pos_odd": [format_weight(r.vector) for r in rs.pos_odd],
        "rho": format_weight(rs.rho),
        "rho_even": format_weight(rs.rho_even),
        "rho_odd": format_weight(rs.rho_odd),
    }


def cmd_roots(rs, group, args):
    _emit(_root_payload(rs))


def cmd_check(rs, group, args):
    lam = parse_weight(_need(args, "weight", "--weight"), rs)
    margin = Fraction(args.margin) if args.margin is not None else None
    cls = classify(rs, lam, margin=margin)
    witnesses = classification_witnesses(rs, lam, margin=margin)
    payload = {
        "weight": format_weight(lam),
        "integral": cls.integral,
        "regular": cls.regular,
        "dominant": cls.dominant,
        "strongly_typical": cls.strongly_typical,
        "generic": cls.generic,
        "super_dominant": cls.super_dominant,
        "violations": witnesses,
    }
    _emit(payload)


def cmd_orbit(rs, group, args):
    nu = parse_weight(_need(args, "weight", "--weight"), rs)
    orbit = star_orbit(rs, group, nu)
    rows = []
    for w in group.elements():
        value = orbit[w]
        rows.append({
            "element": group.word_string(w),
            "weight": format_weight(value),
            "odd_support_size": len(odd_support(rs, value).roots),
        })
    _emit({"orbit": rows})


def cmd_restrict(rs, group, args):
    nu = parse_weight(_need(args, "weight", "--weight"), rs)
    support = odd_support(rs, nu).roots
    summands = penkov_restrict(rs, nu)
    by_weight = {}
    for bits in range(2 ** len(support)):
        total = rs.zero()
        subset = []
        for k, g in enumerate(support):
            if bits >> k & 1:
                total = total + g.vector
                subset.append(format_weight(g.vector))
        value = nu - total
        by_weight.setdefault(value, []).append(subset)
    rows = []
    for value in sorted(summands, key=lambda w: (w.eps, w.delta)):
        try:
            dim = weyl_dim_even(rs, value)
        except SuperprimError:
            dim = None
        rows.append({
            "weight": format_weight(value),
            "multiplicity": summands[value],
            "dim": dim,
            "subsets": sorted(by_weight[value]),
        })
    _emit({"summands": rows, "odd_support": [format_weight(g.vector) for g in support]})


def cmd_kl(rs, group, args):
    hecke = Hecke(group)
    rows = []
    for w in group.elements():
        for x in group.elements():
            if not group.bruhat_leq(x, w):
                continue
            poly = hecke.kl_polynomial(x, w)
            rows.append({
                "x": group.word_string(x),
                "w": group.word_string(w),
                "P": poly.coefficient_list(),
                "mu": hecke.mu(x, w),
            })
    _emit({"table": rows})


def cmd_cells(rs, group, args):
    hecke = Hecke(group)
    cells = [
        sorted(group.word_string(w) for w in cell)
        for cell in hecke.left_cells()
    ]
    _emit({"cells": sorted(cells)})


def cmd_order(rs, group, args):
    nu = parse_weight(_need(args, "nu", "--nu"), rs)
    lam = parse_weight(_need(args, "lam", "--lambda"), rs)
    order = PrimOrder(rs, group)
    cert = order.ideal_includes(nu, lam)
    payload = {
        "nu": format_weight(nu),
        "lambda": format_weight(lam),
        "verdict": cert.verdict,
        "mu": format_weight(cert.mu) if cert.mu is not None else None,
        "w1": group.word_string(cert.w1) if cert.w1 is not None else None,
        "w2": group.word_string(cert.w2) if cert.w2 is not None else None,
        "chain": [
            {"element": group.word_string(w), "simple": "s%d" % (i + 1)}
            for w, i in cert.left_order_chain
        ],
    }
    if cert.verdict == "included":
        payload["strict"] = not order.ideal_equal(nu, lam)
    _emit(payload)


def cmd_hasse(rs, group, args):
    mu = parse_weight(_need(args, "weight", "--weight"), rs)
    order = PrimOrder(rs, group)
    dag = order.hasse_dag(mu)
    labels = []
    for cell in dag.cells:
        words = sorted(group.word_string(w) for w in cell)
        weights = sorted(format_weight(dag.orbit[w]) for w in cell)
        labels.append({"cell": words, "weights": weights})
    if args.format == "json":
        _emit({"nodes": labels, "edges": [list(e) for e in dag.edges]})
        return
    lines = ["digraph hasse {"]
    lines.append('  // edge u -> v means J(u) is strictly contained in J(v)')
    for idx, label in enumerate(labels):
        text = "cell{%s}\\n%s" % (
            ",".join(label["cell"]),
            "; ".join(label["weights"]),
        )
        lines.append('  n%d [label="%s"];' % (idx, text))
    for a, b in dag.edges:
        lines.append("  n%d -> n%d;" % (a, b))
    lines.append("}")
    print("\n".join(lines))


def cmd_shift(rs, group, args):
    mu = parse_weight(_need(args, "weight", "--weight"), rs)
    kappa = typicalizing_shift(rs, mu)
    shifted = mu + kappa
    cls = classify(rs, shifted)
    _emit({
        "mu": format_weight(mu),
        "kappa": format_weight(kappa),
        "shifted": format_weight(shifted),
        "regular": cls.regular,
        "strongly_typical": cls.strongly_typical,
    })


HANDLERS = {
    "roots": cmd_roots,
    "check": cmd_check,
    "orbit": cmd_orbit,
    "restrict": cmd_restrict,
    "kl": cmd_kl,
    "cells": cmd_cells,
    "order": cmd_order,
    "hasse": cmd_hasse,
    "shift": cmd_shift,
}


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(_join_flag_values(list(argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        rs = build_root_system(args.family, args.m, args.n)
        group = WeylGroup(rs, max_order=args.max_group_order)
        HANDLERS[args.command](rs, group, args)
    except SuperprimError as exc:
        _emit({
            "error": {
                "type": type(exc).__name__,
                "message": str(exc),
                "witness": exc.witness,
            }
        })
        return 2
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
