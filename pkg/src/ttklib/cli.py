"""Command-line front end.

Exit codes: 0 on success / consistent verification, 1 on domain errors,
exceeded budgets, or an inconsistent verification, 2 on usage errors.
The environment variable TTK_BUDGET overrides the default crossing
budget; an explicit --budget flag wins over the environment.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from .braids import BraidWord, TTKParams, braid_for
from .classify import census_rows, pp_census, ps_census
from .errors import DomainError, TTKError
from .horadam import (HoradamSpec, check_slope_relations,
                      embed_in_unit_sequence, euclid_trace, horadam_term,
                      slope_s, slope_t)
from .invariants import (DEFAULT_CROSSING_BUDGET, DEFAULT_STRAND_LIMIT,
                         DEFAULT_TL_OPS, invariant_report, torus_alexander,
                         torus_jones)
from .knots import Limits, verify_lemma

_CSV_COLUMNS = ["p", "q", "r", "pp", "pp_families", "ps", "ps_beta",
                "ps_families", "flags"]


@dataclass
class CliConfig:
    crossing_budget: int = DEFAULT_CROSSING_BUDGET
    strand_limit: int = DEFAULT_STRAND_LIMIT
    tl_ops: int = DEFAULT_TL_OPS
    output_format: str = "text"
    census_bound: int = 60

    def __post_init__(self):
        if self.crossing_budget < 1 or self.strand_limit < 1 or self.tl_ops < 1:
            raise DomainError("budgets and limits must be >= 1")

    def limits(self):
        return Limits(crossing_budget=self.crossing_budget,
                      strand_limit=self.strand_limit, tl_ops=self.tl_ops)


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="ttk",
        description="Twisted torus knot braids, invariants, censuses, "
                    "and lemma verification.")
    ap.add_argument("--budget", type=int, default=None,
                    help="crossing budget for the state-sum oracle "
                         f"(default {DEFAULT_CROSSING_BUDGET}; "
                         "TTK_BUDGET overrides the default)")
    ap.add_argument("--strand-limit", type=int, default=DEFAULT_STRAND_LIMIT,
                    help="strand limit for the Temperley-Lieb Jones path")
    ap.add_argument("--tl-ops", type=int, default=DEFAULT_TL_OPS,
                    help="diagram-operation budget for the Temperley-Lieb path")
    sub = ap.add_subparsers(dest="command", required=True)

    hor = sub.add_parser("horadam", help="sequence queries")
    hsub = hor.add_subparsers(dest="subcommand", required=True)
    for name in ("term", "slopes", "euclid", "maximal", "embed"):
        hp = hsub.add_parser(name)
        hp.add_argument("-m", type=int, required=True)
        hp.add_argument("-n", type=int, required=True)
        if name == "term":
            hp.add_argument("-k", type=int, required=True)
            hp.add_argument("--coef-a", type=int, default=1)
            hp.add_argument("--coef-b", type=int, default=1)
        if name == "slopes":
            hp.add_argument("--kmax", type=int, default=8)

    br = sub.add_parser("braid", help="emit a twisted torus knot braid word")
    _add_ttk_args(br)

    inv = sub.add_parser("invariant", help="invariants of a braid closure")
    _add_ttk_args(inv, required=False)
    inv.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"),
                     help="closed-form invariants of the torus knot T(P,Q)")
    inv.add_argument("--word", type=str, default=None,
                     help="explicit braid word, e.g. 'B5: 4 3 2 1 ...'")
    inv.add_argument("--jones", action="store_true", help="also compute Jones")
    inv.add_argument("--format", choices=["text", "json"], default="text")

    cen = sub.add_parser("census", help="classification censuses")
    cen.add_argument("kind", choices=["pp", "ps"])
    cen.add_argument("--bound", type=int, default=60)
    cen.add_argument("--format", choices=["json", "csv"], default="json")
    cen.add_argument("--out", type=str, default=None)

    ver = sub.add_parser("verify", help="invariant-based verification")
    ver.add_argument("claim", choices=["lemma7", "lemma8", "lemma9",
                                       "prop12-1", "corollary", "slopes"])
    ver.add_argument("-p", type=int)
    ver.add_argument("-q", type=int)
    ver.add_argument("-m", type=int)
    ver.add_argument("-n", type=int)
    ver.add_argument("-k", type=int, default=0)
    ver.add_argument("--kmax", type=int, default=2)
    ver.add_argument("--format", choices=["text", "json"], default="text")
    return ap


def _add_ttk_args(parser, required=True):
    parser.add_argument("-p", type=int, required=required)
    parser.add_argument("-q", type=int, required=required)
    parser.add_argument("-r", type=int, required=required)
    parser.add_argument("-n", dest="twist", type=int, required=required)


def _cmd_horadam(args):
    m, n = args.m, args.n
    if args.subcommand == "term":
        spec = HoradamSpec(m, n, args.coef_a, args.coef_b)
        print(horadam_term(spec, args.k))
    elif args.subcommand == "slopes":
        spec = HoradamSpec(m, n)
        for k in range(1, args.kmax + 1):
            print(f"k={k} s={slope_s(spec, k)} t={slope_t(spec, k)}")
    elif args.subcommand == "euclid":
        tr = euclid_trace(m, n)
        print("quotients: " + " ".join(str(q) for q in tr.quotients))
        print("remainders: " + " ".join(str(r) for r in tr.remainders))
    elif args.subcommand == "maximal":
        tr = euclid_trace(m, n)
        verdict = all(q == 1 for q in tr.quotients[:-1]) and tr.q0 in (1, 2)
        print(f"{'true' if verdict else 'false'} (q0={tr.q0})")
    elif args.subcommand == "embed":
        emb = embed_in_unit_sequence(m, n)
        if emb is None:
            print("none (not a maximal pair)")
        else:
            sign = "+1" if emb.sign > 0 else "-1"
            print(f"sign={sign} a={emb.a} start={emb.start_index}")
    return 0


def _cmd_braid(args):
    params = TTKParams(p=args.p, q=args.q, r=args.r, twist_n=args.twist)
    print(braid_for(params).to_text())
    return 0


def _cmd_invariant(args, limits):
    if args.torus:
        p, q = args.torus
        lines = {}
        if args.jones:
            lines["jones"] = torus_jones(p, q)
        lines["alexander"] = torus_alexander(p, q)
        lines["determinant"] = abs(lines["alexander"].evaluate(-1))
        if args.format == "json":
            out = {k: (v.to_json_dict() if hasattr(v, "to_json_dict") else v)
                   for k, v in lines.items()}
            print(json.dumps(out, sort_keys=True))
        else:
            for k, v in lines.items():
                print(f"{k}: {v}")
        return 0
    if args.word:
        word = BraidWord.from_text(args.word)
    else:
        if args.p is None or args.q is None or args.r is None or args.twist is None:
            print("error: need -p -q -r -n, --word, or --torus", file=sys.stderr)
            return 2
        word = braid_for(TTKParams(p=args.p, q=args.q, r=args.r, twist_n=args.twist))
    rep = invariant_report(word, want_jones=args.jones,
                           crossing_budget=limits.crossing_budget,
                           strand_limit=limits.strand_limit,
                           tl_ops=limits.tl_ops)
    if args.format == "json":
        print(json.dumps(rep.to_json_dict(), sort_keys=True))
    else:
        if args.jones:
            print(f"jones: {rep.jones if rep.jones is not None else rep.jones_status}")
        print(f"alexander: {rep.alexander}")
        print(f"determinant: {rep.determinant}")
    return 0


def _census_row_text(row, fmt):
    if fmt == "json":
        return json.dumps(row, sort_keys=True)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="")
    writer.writerow([json.dumps(row[c], sort_keys=True)
                     if isinstance(row[c], (list, dict)) else row[c]
                     for c in _CSV_COLUMNS])
    return buf.getvalue()


def _cmd_census(args):
    report = pp_census(args.bound) if args.kind == "pp" else ps_census(args.bound)
    rows = census_rows(args.bound)
    if args.out:
        with open(args.out, "w") as fh:
            if args.format == "csv":
                fh.write(",".join(_CSV_COLUMNS) + "\n")
            for row in rows:
                fh.write(_census_row_text(row, args.format) + "\n")
        print(report.summary())
    else:
        if args.format == "csv":
            print(",".join(_CSV_COLUMNS))
        for row in rows:
            print(_census_row_text(row, args.format))
        print(report.summary(), file=sys.stderr)
    return 0 if report.ok else 1


def _cmd_verify(args, limits):
    if args.claim == "slopes":
        if args.m is None or args.n is None:
            print("error: verify slopes needs -m and -n", file=sys.stderr)
            return 2
        rep = check_slope_relations(HoradamSpec(args.m, args.n), args.kmax)
        if args.format == "json":
            print(json.dumps({"claim": "slopes", "ok": rep.ok,
                              "first_violation": rep.first_violation},
                             sort_keys=True))
        else:
            print("consistent" if rep.ok else f"violation: {rep.first_violation}")
        return 0 if rep.ok else 1
    params = {}
    if args.claim in ("lemma7", "lemma8"):
        if args.p is None or args.q is None:
            print(f"error: verify {args.claim} needs -p and -q", file=sys.stderr)
            return 2
        params = {"p": args.p, "q": args.q}
    else:
        if args.m is None or args.n is None:
            print(f"error: verify {args.claim} needs -m and -n", file=sys.stderr)
            return 2
        params = {"m": args.m, "n": args.n, "k": args.k, "k_max": args.kmax}
    rep = verify_lemma(args.claim, params, limits)
    if args.format == "json":
        print(json.dumps(rep.to_json_dict(), sort_keys=True))
    else:
        inv = " ".join(f"{k}={v}" for k, v in rep.invariants.items())
        pstr = ",".join(f"{k}={v}" for k, v in rep.params.items())
        print(f"{rep.claim}({pstr}): {inv} -> {rep.verdict}")
    return 0 if rep.verdict == "consistent" else 1


def main(argv=None):
    ap = _build_parser()
    args = ap.parse_args(argv)
    budget = args.budget
    if budget is None:
        env = os.environ.get("TTK_BUDGET")
        budget = int(env) if env else DEFAULT_CROSSING_BUDGET
    try:
        config = CliConfig(crossing_budget=budget,
                           strand_limit=args.strand_limit,
                           tl_ops=args.tl_ops,
                           output_format=getattr(args, "format", "text"),
                           census_bound=getattr(args, "bound", 60))
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    limits = config.limits()
    try:
        if args.command == "horadam":
            return _cmd_horadam(args)
        if args.command == "braid":
            return _cmd_braid(args)
        if args.command == "invariant":
            return _cmd_invariant(args, limits)
        if args.command == "census":
            return _cmd_census(args)
        if args.command == "verify":
            return _cmd_verify(args, limits)
    except TTKError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
