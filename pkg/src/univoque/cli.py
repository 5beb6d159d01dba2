"""Command-line interface.

Subcommands mirror the library: ``base classify|chain|points``,
``graph build|scc|verify|connectivity``, ``dim``, ``expansions
count|witness`` and ``oracle words|brute``.  Output is human-readable text
by default and JSON with --json; every run is deterministic.  Exit codes:
0 success, 2 invalid input, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import digits as dg
from .algebraic import Q, DegenerateInputError
from .base import (InternalConsistencyError, UnsupportedClassError, new_base_context,
                   order_points, r_chain, special_points, v_successor)
from .graph import (FULL, TILDE, TILDE1, StructuralError, build_graph, check_isomorphic,
                    connectivity_report, scc, tower_decompose)
from .oracle import U_PREFIX, V_PREFIX, brute_count_expansions, enumerate_admissible_words
from .spectral import spectral_report
from . import expansions as exp


def _add_base_flags(p):
    p.add_argument("-M", type=int, required=True, help="alphabet bound")
    p.add_argument("--beta", required=True,
                   help='greedy expansion of 1 in digit-string form, e.g. "111(0)"')
    p.add_argument("--precision", default=None,
                   help="root isolation precision (rational or decimal string)")


def _context(args):
    precision = Q(1, 10**12)
    if args.precision:
        if "/" in args.precision:
            num, _, den = args.precision.partition("/")
            precision = Q(int(num), int(den))
        else:
            from decimal import Decimal
            from fractions import Fraction
            f = Fraction(Decimal(args.precision))
            precision = Q(f.numerator, f.denominator)
    return new_base_context(args.M, args.beta, precision=precision)


def _emit(args, payload, text_lines):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _write(path, content):
    if path == "-":
        sys.stdout.write(content)
    else:
        with open(path, "w") as fh:
            fh.write(content)


def cmd_base_classify(args):
    ctx = _context(args)
    payload = ctx.to_json()
    _emit(args, payload, [
        f"beta   {dg.format_seq(ctx.beta)}",
        f"alpha  {dg.format_seq(ctx.alpha)}",
        f"class  {ctx.base_class.value}",
        f"q      {ctx.q_approx(12)}",
        f"poly   {list(ctx.defining_poly)}",
    ])
    return 0


def cmd_base_chain(args):
    ctx = _context(args)
    chain = [ctx]
    for k in range(1, args.steps + 1):
        chain.append(v_successor(chain[-1]) if args.kind == "v" else r_chain(ctx, k))
    payload = [c.to_json() for c in chain]
    lines = [f"step {i}: beta={dg.format_seq(c.beta)} alpha={dg.format_seq(c.alpha)} "
             f"class={c.base_class.value} q~{c.q_approx(8)}" for i, c in enumerate(chain)]
    _emit(args, payload, lines)
    return 0


def cmd_base_points(args):
    ctx = _context(args)
    order = order_points(ctx)
    pts = special_points(ctx)
    payload = {
        "chain": order.chain(),
        "classes": [
            {"names": cls, "value": order.values[k].to_json(),
             "qg_key": dg.format_seq(pts.qg_key[cls[0]])}
            for k, cls in enumerate(order.classes)
        ],
    }
    lines = [order.chain()] + [
        f"  {'='.join(cls):14s} {order.values[k].decimal(12)}"
        for k, cls in enumerate(order.classes)
    ]
    _emit(args, payload, lines)
    return 0


_VARIANTS = {"full": FULL, "tilde": TILDE, "tilde1": TILDE1}


def cmd_graph_build(args):
    ctx = _context(args)
    g = build_graph(ctx, _VARIANTS[args.variant])
    if args.dot:
        _write(args.dot, g.to_dot())
    if args.json_path:
        _write(args.json_path, json.dumps(g.to_json(), indent=2, sort_keys=True) + "\n")
    if not args.dot and not args.json_path:
        byidx = {v.index: v for v in g.vertices}
        print(f"{len(g.vertices)} vertices, {len(g.edges)} edges")
        for v in g.vertices:
            print(f"  {g.vertex_name(v)}  digit {v.label}")
        for i, k, j in sorted(g.edges):
            print(f"  {g.vertex_name(byidx[i])} --{k}--> {g.vertex_name(byidx[j])}")
    return 0


def cmd_graph_scc(args):
    ctx = _context(args)
    g = build_graph(ctx, _VARIANTS[args.variant])
    comps, cond = scc(g)
    names = {v.index: g.vertex_name(v) for v in g.vertices}
    payload = {
        "components": [[names[v] for v in c] for c in comps],
        "condensation": [list(e) for e in cond],
        "strongly_connected": len(comps) == 1,
    }
    lines = [f"{len(comps)} strongly connected component(s)"]
    for c in comps:
        lines.append("  {" + ", ".join(names[v] for v in c) + "}")
    _emit(args, payload, lines)
    return 0


def cmd_graph_verify(args):
    ctx = _context(args)
    if args.theorem in ("1.3", "iso"):
        succ = v_successor(ctx)
        mapping = check_isomorphic(build_graph(ctx, FULL), build_graph(succ, FULL))
        ok = mapping is not None
        payload = {"check": "successor-isomorphism", "ok": ok}
        _emit(args, payload, [f"successor graph isomorphic: {ok}"])
        return 0 if ok else 3
    dec = tower_decompose(ctx, args.steps)
    payload = {
        "check": "tower",
        "levels": [len(b) for b in dec.blocks],
        "residual": len(dec.residual),
        "cycle_words": [dg.format_word(w) for _p, w in dec.cycles],
    }
    _emit(args, payload, [
        f"tower levels: {[len(b) for b in dec.blocks]} (+{len(dec.residual)} residual vertices)",
        "cycle words: " + ", ".join(dg.format_word(w) for _p, w in dec.cycles),
    ])
    return 0


def cmd_graph_connectivity(args):
    ctx = _context(args)
    rep = connectivity_report(ctx)
    payload = {
        "strongly_connected": rep.strongly_connected,
        "reach_criterion": rep.reach_criterion,
        "sufficient_b2": rep.sufficient_b2,
        "m1_ab_criterion": rep.m1_ab_criterion,
    }
    _emit(args, payload, [
        f"strongly connected:      {rep.strongly_connected}",
        f"reachability criterion:  {rep.reach_criterion}",
        f"sufficient b2 condition: {rep.sufficient_b2}",
        f"two-digit criterion:     {rep.m1_ab_criterion}",
    ])
    return 0


def cmd_dim(args):
    ctx = _context(args)
    g = build_graph(ctx, TILDE)
    rep = spectral_report(g, ctx)
    payload = rep.to_json()
    lines = [
        f"radius    {rep.radius:.12f} (+/- {rep.radius_err:.2e})",
        f"entropy   {rep.entropy:.12f}",
        f"dimension {rep.dimension:.12f}",
    ]
    if args.per_scc:
        for names, r in rep.per_scc:
            lines.append(f"  component ({len(names)} vertices) radius {r:.5f}: "
                         + " ".join(names))
    _emit(args, payload, lines)
    return 0


def cmd_expansions_count(args):
    ctx = _context(args)
    x = ctx.value(dg.parse_seq(args.x))
    res = exp.count_expansions(ctx, x, cap=args.cap)
    payload = {"kind": res.kind, "count": res.count,
               "witnesses": [dg.format_seq(w) for w in res.witnesses]}
    lines = [f"count: {res.kind}" + (f"({res.count})" if res.count is not None else "")]
    lines += [f"  {dg.format_seq(w)}" for w in res.witnesses]
    _emit(args, payload, lines)
    return 0


def cmd_expansions_witness(args):
    ctx = _context(args)
    c = dg.parse_seq(args.tail) if args.tail else exp.default_tail(ctx)
    x, exps = exp.build_witness_xm(ctx, args.m, c)
    res = exp.count_expansions(ctx, x)
    payload = {
        "tail": dg.format_seq(c),
        "value": x.to_json(),
        "expansions": [dg.format_seq(e) for e in exps],
        "verified_count": res.count if res.kind == exp.EXACT else res.kind,
    }
    lines = [f"tail {dg.format_seq(c)}", f"value ~ {x.decimal(12)}"]
    lines += [f"  {dg.format_seq(e)}" for e in exps]
    lines.append(f"verified count: {payload['verified_count']}")
    _emit(args, payload, lines)
    return 0


def cmd_oracle_words(args):
    ctx = _context(args)
    mode = U_PREFIX if args.mode == "u" else V_PREFIX
    words = sorted(enumerate_admissible_words(ctx, args.L, mode))
    payload = {"mode": mode, "L": args.L, "count": len(words),
               "words": [dg.format_word(w) for w in words]}
    _emit(args, payload, [f"{len(words)} words"] + ["  " + dg.format_word(w) for w in words])
    return 0


def cmd_oracle_brute(args):
    ctx = _context(args)
    x = ctx.value(dg.parse_seq(args.x))
    lo, hi = brute_count_expansions(ctx, x, args.depth)
    _emit(args, {"lower": lo, "upper": hi}, [f"bounds: [{lo}, {hi}]"])
    return 0


def make_parser():
    p = argparse.ArgumentParser(prog="univoque",
                                description="interval graphs and expansion counts "
                                            "of non-integer bases, in exact arithmetic")
    sub = p.add_subparsers(dest="command", required=True)

    base = sub.add_parser("base", help="base classification and chains")
    bsub = base.add_subparsers(dest="subcommand", required=True)
    b1 = bsub.add_parser("classify")
    _add_base_flags(b1)
    b1.add_argument("--json", action="store_true")
    b1.set_defaults(fn=cmd_base_classify)
    b2 = bsub.add_parser("chain")
    _add_base_flags(b2)
    b2.add_argument("--kind", choices=("v", "r"), required=True,
                    help="v: successor chain, r: reflected-block chain")
    b2.add_argument("--steps", type=int, required=True)
    b2.add_argument("--json", action="store_true")
    b2.set_defaults(fn=cmd_base_chain)
    b3 = bsub.add_parser("points")
    _add_base_flags(b3)
    b3.add_argument("--json", action="store_true")
    b3.set_defaults(fn=cmd_base_points)

    graph = sub.add_parser("graph", help="interval graph construction and analysis")
    gsub = graph.add_subparsers(dest="subcommand", required=True)
    g1 = gsub.add_parser("build")
    _add_base_flags(g1)
    g1.add_argument("--variant", choices=sorted(_VARIANTS), default="full")
    g1.add_argument("--dot", metavar="PATH", help="write DOT to PATH (- for stdout)")
    g1.add_argument("--json", dest="json_path", metavar="PATH",
                    help="write JSON to PATH (- for stdout)")
    g1.set_defaults(fn=cmd_graph_build)
    g2 = gsub.add_parser("scc")
    _add_base_flags(g2)
    g2.add_argument("--variant", choices=sorted(_VARIANTS), default="tilde")
    g2.add_argument("--json", action="store_true")
    g2.set_defaults(fn=cmd_graph_scc)
    g3 = gsub.add_parser("verify")
    _add_base_flags(g3)
    g3.add_argument("--theorem", choices=("1.3", "1.4", "iso", "tower"), required=True,
                    help="1.3/iso: successor isomorphism; 1.4/tower: tower decomposition")
    g3.add_argument("--steps", type=int, default=2)
    g3.add_argument("--json", action="store_true")
    g3.set_defaults(fn=cmd_graph_verify)
    g4 = gsub.add_parser("connectivity")
    _add_base_flags(g4)
    g4.add_argument("--json", action="store_true")
    g4.set_defaults(fn=cmd_graph_connectivity)

    d = sub.add_parser("dim", help="spectral radius, entropy, dimension")
    _add_base_flags(d)
    d.add_argument("--per-scc", dest="per_scc", action="store_true")
    d.add_argument("--json", action="store_true")
    d.set_defaults(fn=cmd_dim)

    ex = sub.add_parser("expansions", help="expansion generation and counting")
    esub = ex.add_subparsers(dest="subcommand", required=True)
    e1 = esub.add_parser("count")
    _add_base_flags(e1)
    e1.add_argument("--x", required=True, help="point given by a digit sequence")
    e1.add_argument("--cap", type=int, default=exp.DEFAULT_STATE_CAP)
    e1.add_argument("--json", action="store_true")
    e1.set_defaults(fn=cmd_expansions_count)
    e2 = esub.add_parser("witness")
    _add_base_flags(e2)
    e2.add_argument("-m", type=int, required=True, dest="m")
    e2.add_argument("--tail", help="periodic tail (defaults to the least strict one)")
    e2.add_argument("--json", action="store_true")
    e2.set_defaults(fn=cmd_expansions_witness)

    orc = sub.add_parser("oracle", help="brute-force reference computations")
    osub = orc.add_subparsers(dest="subcommand", required=True)
    o1 = osub.add_parser("words")
    _add_base_flags(o1)
    o1.add_argument("-L", type=int, required=True, dest="L")
    o1.add_argument("--mode", choices=("u", "v"), default=None,
                    help="default: u for in-between bases, v for limit bases")
    o1.add_argument("--json", action="store_true")
    o1.set_defaults(fn=cmd_oracle_words)
    o2 = osub.add_parser("brute-count")
    _add_base_flags(o2)
    o2.add_argument("--x", required=True)
    o2.add_argument("--depth", type=int, default=18)
    o2.add_argument("--json", action="store_true")
    o2.set_defaults(fn=cmd_oracle_brute)

    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "mode", "unset") is None:
            ctx = _context(args)
            args.mode = "v" if ctx.base_class.value == "closureU\\U" else "u"
        return args.fn(args)
    except (InternalConsistencyError, StructuralError) as e:
        print(f"internal consistency failure: {e}", file=sys.stderr)
        return 3
    except (ValueError, UnsupportedClassError, DegenerateInputError, dg.AlphabetError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
