"""Command-line front end: ``shiftalg audit|elem|mat|spectrum|h2``."""

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from .algebra import IndexCapError, commutator
from .audit import AuditConfig, render_report, run_audit, unexpected
from .cohomology import truncated_H2
from .grammar import ParseError, parse_element
from .oracle import edge_eigen_sweep, heatmap_dump, sweep_csv


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational number: %r" % text)


def _build_parser():
    p = _Parser(prog="shiftalg", description="Shift/boundary-projector algebra toolkit.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    audit = sub.add_parser("audit", help="claim auditor")
    asub = audit.add_subparsers(dest="action", required=True, parser_class=_Parser)
    run = asub.add_parser("run", help="run the claim registry")
    run.add_argument("--window", type=int, default=5)
    run.add_argument("--eps", type=_fraction, default=Fraction(3, 10))
    run.add_argument("--n", type=int, default=64)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--claims", default=None, help="comma-separated claim ids")
    run.add_argument("--out", default=None)
    run.add_argument("--format", choices=("text", "structured"), default="text")
    run.add_argument("--strict", action="store_true",
                     help="exit 1 when a status differs from the expected table")

    elem = sub.add_parser("elem", help="evaluate element expressions")
    esub = elem.add_subparsers(dest="action", required=True, parser_class=_Parser)
    ev = esub.add_parser("eval")
    ev.add_argument("expr")
    cm = esub.add_parser("comm")
    cm.add_argument("x")
    cm.add_argument("y")

    mat = sub.add_parser("mat", help="matrix data")
    msub = mat.add_subparsers(dest="action", required=True, parser_class=_Parser)
    dump = msub.add_parser("dump", help="heatmap CSV i,j,re,im")
    dump.add_argument("expr")
    dump.add_argument("--n", type=int, required=True)
    dump.add_argument("--eps", type=float, default=0.3)

    spec = sub.add_parser("spectrum", help="eigenvalue sweeps")
    ssub = spec.add_subparsers(dest="action", required=True, parser_class=_Parser)
    sw = ssub.add_parser("sweep", help="sweep CSV eps,n,k,re,im,is_edge")
    sw.add_argument("--variant", default="backward")
    sw.add_argument("--n", type=int, default=16)
    sw.add_argument("--eps-from", type=float, default=-1.5)
    sw.add_argument("--eps-to", type=float, default=1.5)
    sw.add_argument("--steps", type=int, default=13)

    h2 = sub.add_parser("h2", help="truncated H^2 report")
    h2.add_argument("--m", type=int, required=True)
    return p


def _audit(args, out):
    claims = [c.strip() for c in args.claims.split(",") if c.strip()] if args.claims else None
    cfg = AuditConfig(window=args.window, eps=args.eps, N=args.n, seed=args.seed, claims=claims)
    reports = run_audit(cfg)
    doc = render_report(reports, args.format, cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    else:
        out.write(doc)
    crashed = [r.id for r in reports if "error" in r.witness]
    if crashed:
        print("checks raised: %s" % ", ".join(crashed), file=sys.stderr)
        return 1
    if args.strict:
        bad = unexpected(reports)
        if bad:
            print("unexpected statuses: %s" % ", ".join("%s=%s" % (r.id, r.status) for r in bad),
                  file=sys.stderr)
            return 1
    return 0


def _dispatch(args, out):
    if args.cmd == "audit":
        return _audit(args, out)
    if args.cmd == "elem":
        if args.action == "eval":
            out.write("%s\n" % parse_element(args.expr))
        else:
            out.write("%s\n" % commutator(parse_element(args.x), parse_element(args.y)))
        return 0
    if args.cmd == "mat":
        out.write(heatmap_dump(parse_element(args.expr), args.n, args.eps))
        return 0
    if args.cmd == "spectrum":
        if args.steps < 1:
            raise UsageError("--steps must be >= 1")
        eps_list = np.linspace(args.eps_from, args.eps_to, args.steps)
        out.write(sweep_csv(edge_eigen_sweep(eps_list, args.n, args.variant)))
        return 0
    if args.cmd == "h2":
        out.write(json.dumps(truncated_H2(args.m).to_dict(), indent=2) + "\n")
        return 0
    raise UsageError("unknown command")


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = _build_parser().parse_args(argv)
        return _dispatch(args, out)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except (UsageError, ValueError, IndexCapError) as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
