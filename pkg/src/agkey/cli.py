"""Command-line front end: ``agkey {verify,sweep,enumerate,map,render}``.

Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bijection as bj
from . import involution as inv
from . import partitions as pc
from . import verifier
from .partitions import OContext, Overpartition, format_overpartition, format_partition
from .report import summary_line

__all__ = ["render", "main", "UsageError"]

ASCII_GLYPHS = {"dot": "*", "hollow": "o", "zero": "@"}
UNICODE_GLYPHS = {"dot": "●", "hollow": "○", "zero": "∅"}


def render(lam: Overpartition, i: int | None = None, j: int | None = None, *,
           weight: int | None = None, unicode: bool = False) -> str:
    """Ferrers diagram of a weighted overpartition, one row per part.

    A part of value ``v`` is ``v`` dots; an overlined part gets ``w`` hollow
    markers appended, where ``w = i - len + 1`` unless ``weight`` is given.
    A zero part is drawn as the empty-set marker.  With ``j`` the rectangle
    ``(i - len)^(j - len)`` is drawn to the right.

    >>> print(render(Overpartition.parse("4',3',2"), 9))
    ****ooooooo
    ***ooooooo
    **
    """
    g = UNICODE_GLYPHS if unicode else ASCII_GLYPHS
    n = len(lam)
    if weight is None:
        if i is None:
            raise ValueError("render needs either i or an explicit weight")
        weight = i - n + 1
    if lam.ol and weight < 1:
        raise ValueError(f"overline weight {weight} must be positive")
    rows = []
    for p in lam.parts:
        body = g["dot"] * p.value if p.value else g["zero"]
        if p.overlined:
            body += g["hollow"] * weight
        rows.append(body)
    if j is not None:
        if i is None or n > j or j > i:
            raise ValueError(f"companion rectangle needs len <= j <= i, got len={n}, i={i}, j={j}")
        rect = [g["dot"] * (i - n)] * (j - n)
        width = max((len(r) for r in rows), default=0)
        height = max(len(rows), len(rect))
        rows = rows + [""] * (height - len(rows))
        rect = rect + [""] * (height - len(rect))
        rows = [(a.ljust(width) + "    " + b).rstrip() if b else a for a, b in zip(rows, rect)]
    return "\n".join(rows)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="agkey", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run one check on one parameter cell")
    v.add_argument("check", choices=verifier.CHECKS)
    v.add_argument("--i", type=_nonneg, required=True)
    v.add_argument("--j", type=_nonneg, required=True)
    v.add_argument("--k", type=_nonneg)
    v.add_argument("--json", action="store_true")

    s = sub.add_parser("sweep", help="run checks over every cell up to --max-i")
    s.add_argument("--max-i", type=_nonneg, required=True)
    s.add_argument("--checks", default=",".join(verifier.CHECKS))
    s.add_argument("--workers", type=_nonneg, default=0)
    s.add_argument("--json", action="store_true")

    e = sub.add_parser("enumerate", help="list A(i,k), B(j,k) or O(i,j[,k])")
    e.add_argument("--set", dest="family", choices=("A", "B", "O"), required=True)
    e.add_argument("--i", type=_nonneg)
    e.add_argument("--j", type=_nonneg)
    e.add_argument("--k", type=_nonneg)
    e.add_argument("--json", action="store_true")

    m = sub.add_parser("map", help="apply insertion, phi-bar or psi to one input")
    m.add_argument("op", choices=("insert", "extract", "phi-bar", "phi-bar-inv", "psi"))
    m.add_argument("--i", type=_nonneg)
    m.add_argument("--j", type=_nonneg)
    m.add_argument("--k", type=_nonneg)
    m.add_argument("--alpha")
    m.add_argument("--beta")
    m.add_argument("--gamma")
    m.add_argument("--lambda", dest="lam")
    m.add_argument("--trace", action="store_true")
    m.add_argument("--json", action="store_true")

    r = sub.add_parser("render", help="draw a weighted overpartition")
    r.add_argument("--lambda", dest="lam", required=True)
    r.add_argument("--i", type=_nonneg, required=True)
    r.add_argument("--j", type=_nonneg)
    r.add_argument("--unicode", action="store_true")
    return p


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--lambda" if n == "lam" else f"--{n}" for n in missing)
        what = " ".join(filter(None, [args.command, getattr(args, "op", None)]))
        raise UsageError(f"{what} requires {flags}")


def _emit(out, args, record, lines):
    if args.json:
        print(json.dumps(record, sort_keys=True), file=out)
    else:
        for line in lines:
            print(line, file=out)


def _cmd_verify(args, out):
    if args.check in ("phi-bar", "genfunc"):
        _need(args, "k")
        params = (args.i, args.j, args.k)
    else:
        params = (args.i, args.j)
    report = verifier.run_check(args.check, params)
    print(report.to_json() if args.json else report.describe(), file=out)
    return 0 if report.passed else 1


def _cmd_sweep(args, out):
    names = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = [c for c in names if c not in verifier.CHECKS]
    if bad or not names:
        raise UsageError(f"unknown check(s) {', '.join(bad) or '(none)'}; "
                         f"choose from {', '.join(verifier.CHECKS)}")
    reports = verifier.sweep(args.max_i, names, workers=args.workers)
    for rep in reports:
        if args.json:
            print(rep.to_json(), file=out)
        elif not rep.passed:
            print(rep.describe(), file=out)
    print(summary_line(reports), file=out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_enumerate(args, out):
    if args.family == "A":
        _need(args, "i", "k")
        for g in pc.enumerate_A(args.i, args.k):
            _emit(out, args, {"parts": list(g), "i": args.i, "k": args.k}, [format_partition(g)])
    elif args.family == "B":
        _need(args, "j", "k")
        for b in pc.enumerate_B(args.j, args.k):
            _emit(out, args, {"parts": list(b), "j": args.j, "k": args.k}, [format_partition(b)])
    else:
        _need(args, "i", "j")
        ks = range(args.j + 1) if args.k is None else [args.k]
        for k in ks:
            ctx = OContext(args.i, args.j, k)
            for o in pc.enumerate_O(ctx):
                _emit(out, args, pc.to_record(o, ctx), [format_overpartition(o)])
    return 0


def _trace_lines(trace: bj.InsertionTrace):
    return [f"insert {m}: {format_overpartition(o)}" for m, o in trace.steps]


def _cmd_map(args, out):
    op = args.op
    if op == "insert":
        _need(args, "alpha", "beta")
        alpha, beta = pc.parse_partition(args.alpha), pc.parse_partition(args.beta)
        trace = bj.insertion_trace(alpha, beta)
        lines = (_trace_lines(trace) if args.trace else []) + [str(trace.result)]
        _emit(out, args, {"result": str(trace.result), "trace": trace.records()}, lines)
    elif op == "extract":
        _need(args, "lam")
        alpha, beta = bj.js_extract(pc.parse_overpartition(args.lam))
        _emit(out, args, {"alpha": format_partition(alpha), "beta": format_partition(beta)},
              [f"alpha: {format_partition(alpha)}", f"beta: {format_partition(beta)}"])
    elif op == "phi-bar":
        _need(args, "i", "j", "gamma", "beta")
        gamma, beta = pc.parse_partition(args.gamma), pc.parse_partition(args.beta)
        ctx = OContext(args.i, args.j, len(beta) if args.k is None else args.k)
        trace = bj.phi_bar_trace(gamma, beta, ctx)
        shifted = format_partition(tuple(g - ctx.weight for g in gamma))
        lines = []
        if args.trace:
            lines = [f"shift by {ctx.weight}: {shifted}"] + _trace_lines(trace)
        lines.append(str(trace.result))
        rec = pc.to_record(trace.result, ctx)
        rec.update(result=str(trace.result), trace=trace.records())
        _emit(out, args, rec, lines)
    elif op == "phi-bar-inv":
        _need(args, "i", "j", "lam")
        lam = pc.parse_overpartition(args.lam)
        ctx = OContext(args.i, args.j, len(lam) if args.k is None else args.k)
        gamma, beta = bj.phi_bar_inv(lam, ctx)
        _emit(out, args, {"gamma": format_partition(gamma), "beta": format_partition(beta)},
              [f"gamma: {format_partition(gamma)}", f"beta: {format_partition(beta)}"])
    else:
        _need(args, "i", "j", "lam")
        lam = pc.parse_overpartition(args.lam)
        cls = inv.classify(lam, args.i, args.j)
        mu = inv.psi(lam, args.i, args.j)
        f, g = inv.f_statistic(lam, args.i, args.j), inv.f_statistic(mu, args.i, args.j)
        rec = {"lambda": str(lam), "class": str(cls), "psi": str(mu),
               "psi_class": str(inv.classify(mu, args.i, args.j)),
               "f": str(f), "f_psi": str(g)}
        _emit(out, args, rec, [f"{cls} → {mu}", f"f(lambda) = {f}", f"f(psi(lambda)) = {g}"])
    return 0


def _cmd_render(args, out):
    lam = pc.parse_overpartition(args.lam)
    text = render(lam, args.i, args.j, unicode=args.unicode)
    if text:
        print(text, file=out)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "enumerate": _cmd_enumerate,
    "map": _cmd_map,
    "render": _cmd_render,
}


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = _build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"agkey: error: {exc}", file=err)
        return 2
    except ValueError as exc:
        print(f"agkey: error: {exc}", file=err)
        return 2
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else 0


if __name__ == "__main__":
    sys.exit(main())
