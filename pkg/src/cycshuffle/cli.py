"""Command-line front end.

Every subcommand builds a RunReport and prints it either as one JSON document
(``--json``) or as a short human-readable table.  Exit status: 0 when the
verdict is ok, 1 when it is fail, 2 for usage, parse and domain errors.
"""
import argparse
import inspect
import json
import sys
import time
from dataclasses import dataclass, field

from . import perm as P
from . import theorems as TH
from .compat import (
    check_csc,
    check_equiv,
    check_f_equiv,
    check_sc,
    lifting_check,
)
from .counterexamples import verify_counterexample
from .cyc import CycPerm, Induced, ceval, cyc_stat_name, parse_cyc_stat
from .errors import CycShuffleError, UnknownStat
from .shuffle import cyc_distribution, cyclic_shuffles, distribution, shuffles
from .values import Comp, CycWord, IntSet, Multiset, Pair, to_json, value_key

_VALUE_TYPES = (Comp, CycWord, IntSet, Multiset, Pair)


@dataclass
class RunReport:
    command: str
    inputs: dict
    verdict: str
    payload: dict = field(default_factory=dict)
    elapsed_ms: int = 0

    def as_dict(self):
        return {"command": self.command, "inputs": self.inputs, "verdict": self.verdict,
                "payload": self.payload, "elapsed_ms": self.elapsed_ms}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- JSON conversion ----------------------------------------------------------

def jsonable(x):
    """Recursive conversion of library objects into plain JSON values."""
    if isinstance(x, CycPerm):
        return f"[{P.format_perm(x.rep)}]"
    if isinstance(x, _VALUE_TYPES):
        return to_json(x)
    if isinstance(x, Induced):
        return repr(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, list):
        return [jsonable(v) for v in x]
    if isinstance(x, tuple) and x and all(isinstance(v, CycPerm) for v in x):
        return [jsonable(v) for v in x]
    if isinstance(x, tuple) and x and all(isinstance(v, tuple) for v in x):
        return [jsonable(v) for v in x]
    try:
        return to_json(x)
    except TypeError:
        return str(x)


def _perm_text(p):
    return P.format_perm(p)


def _witness_json(w, fmt):
    if w is None:
        return None
    return {"first": [fmt(x) for x in w.first] if isinstance(w.first, tuple) and not isinstance(w.first, CycPerm) else fmt(w.first),
            "second": [fmt(x) for x in w.second] if isinstance(w.second, tuple) and not isinstance(w.second, CycPerm) else fmt(w.second),
            "value": jsonable(w.value), "count_first": w.count_first, "count_second": w.count_second}


def _fmt_any(x):
    if isinstance(x, CycPerm):
        return jsonable(x)
    return _perm_text(x)


# -- statistic parsing --------------------------------------------------------

def parse_any_stat(text):
    """Linear id if it parses as one, otherwise a cyclic id; returns (kind, id)."""
    try:
        return "linear", P.parse_stat(text)
    except UnknownStat:
        return "cyclic", parse_cyc_stat(text)


def _name(kind, st):
    return P.stat_name(st) if kind == "linear" else cyc_stat_name(st)


# -- subcommands --------------------------------------------------------------

def cmd_eval(args):
    st = P.parse_stat(args.stat)
    p = P.parse_perm(args.perm)
    return "ok", {"stat": P.stat_name(st), "perm": _perm_text(p), "value": jsonable(P.evaluate(st, p))}


def cmd_ceval(args):
    cst = parse_cyc_stat(args.stat)
    c = CycPerm(P.parse_perm(args.perm))
    return "ok", {"stat": cyc_stat_name(cst), "class": jsonable(c), "value": jsonable(ceval(cst, c))}


def cmd_shuffle(args):
    p, q = P.parse_perm(args.a), P.parse_perm(args.b)
    out = sorted(shuffles(p, q))
    if args.des is not None:
        out = [t for t in out if len(P.Des(t)) == args.des]
    return "ok", {"count": len(out), "shuffles": [_perm_text(t) for t in out]}


def cmd_cshuffle(args):
    a, b = CycPerm(P.parse_perm(args.a)), CycPerm(P.parse_perm(args.b))
    out = sorted(cyclic_shuffles(a, b))
    return "ok", {"count": len(out), "classes": [jsonable(c) for c in out]}


def _dist_json(d):
    return [{"value": jsonable(v), "count": c} for v, c in sorted(d.counts().items(), key=lambda vc: value_key(vc[0]))]


def cmd_distribute(args):
    kind, st = parse_any_stat(args.stat)
    if kind == "linear" and not args.cyclic:
        d = distribution(st, shuffles(P.parse_perm(args.a), P.parse_perm(args.b)))
    else:
        if kind == "linear":
            st = Induced(st)
        d = cyc_distribution(st, cyclic_shuffles(CycPerm(P.parse_perm(args.a)), CycPerm(P.parse_perm(args.b))))
        kind = "cyclic"
    return "ok", {"stat": _name(kind, st), "kind": kind, "total": d.total, "distribution": _dist_json(d)}


def _compat_payload(r, name, fmt):
    return {"stat": name, "result": r.verdict, "max_checked": r.max_checked, "checked": r.checked,
            "witness": _witness_json(r.witness, fmt)}


def cmd_check_sc(args):
    st = P.parse_stat(args.stat)
    r = check_sc(st, args.max_n or 6)
    return ("ok" if r else "fail"), _compat_payload(r, P.stat_name(st), _fmt_any)


def cmd_check_csc(args):
    cst = parse_cyc_stat(args.stat)
    r = check_csc(cst, args.max_n or 6)
    return ("ok" if r else "fail"), _compat_payload(r, cyc_stat_name(cst), _fmt_any)


def cmd_check_equiv(args):
    a, b = parse_cyc_stat(args.a), parse_cyc_stat(args.b)
    r = check_equiv(a, b, args.max_n or 7)
    payload = {"a": cyc_stat_name(a), "b": cyc_stat_name(b), "result": r.verdict,
               "max_checked": r.max_checked, "checked": r.checked}
    if r.witness is not None:
        payload["witness"] = {"first": jsonable(r.witness.first), "second": jsonable(r.witness.second)}
    return ("ok" if r else "fail"), payload


def cmd_check_f_equiv(args):
    a, b = P.parse_stat(args.a), P.parse_stat(args.b)
    if args.f not in P.SYMMETRIES:
        raise UsageError(f"argument --f: unknown symmetry {args.f!r}; choose from {', '.join(P.SYMMETRIES)}")
    r = check_f_equiv(a, b, args.f, args.max_n or 7)
    payload = {"a": P.stat_name(a), "b": P.stat_name(b), "f": args.f, "result": r.verdict,
               "max_checked": r.max_checked, "checked": r.checked}
    if r.witness is not None:
        payload["witness"] = {"first": _perm_text(r.witness.first), "second": _perm_text(r.witness.second)}
    return ("ok" if r else "fail"), payload


def cmd_counterexample(args):
    r = verify_counterexample(args.name)
    repair = None
    if r.repair is not None:
        repair = {k: jsonable(v) for k, v in r.repair.items() if k != "tried"}
        if "perm" in r.repair:
            repair["perm"] = _perm_text(r.repair["perm"])
        if "tried" in r.repair:
            repair["tried"] = [{**{k: jsonable(v) for k, v in t.items()}, "perm": _perm_text(t["perm"])}
                               for t in r.repair["tried"]]
    payload = {"name": r.name, "confirmed": r.ok, "preconditions": r.preconditions,
               "distributions_differ": r.distributions_differ, "literal_valid": r.literal_valid,
               "literal_confirmed": r.literal_confirmed, "witness": jsonable(r.witness),
               "counts": list(r.counts), "repair": repair, "notes": list(r.notes)}
    return ("ok" if r.ok else "fail"), payload


def cmd_lifting_check(args):
    cst = parse_cyc_stat(args.cstat)
    st = P.parse_stat(args.stat)
    r = lifting_check(cst, st, args.n)
    payload = {"cstat": cyc_stat_name(cst), "stat": P.stat_name(st), "n": r.n,
               "cond_a": r.cond_a, "cond_b": r.cond_b,
               "witness_a": jsonable(list(r.witness_a)) if r.witness_a else None,
               "witness_b": jsonable(list(r.witness_b)) if r.witness_b else None}
    if r.bijection_example is not None:
        ex = r.bijection_example
        payload["bijection_example"] = {"first": jsonable(ex["first"]), "second": jsonable(ex["second"]),
                                        "bijection": {str(k): v for k, v in sorted(ex["bijection"].items())}}
    return ("ok" if r else "fail"), payload


def cmd_verify_theorem(args):
    if args.name not in TH.THEOREMS:
        raise UsageError(f"argument --name: unknown theorem {args.name!r}; choose from {', '.join(TH.THEOREMS)}")
    fn, default = TH.THEOREMS[args.name]
    N = args.max_size if args.max_size is not None else (args.max_n or default)
    kwargs = {}
    if args.trunc is not None and "T" in inspect.signature(fn).parameters:
        kwargs["T"] = args.trunc
    holds, count, failures = fn(N, **kwargs)
    payload = {"name": args.name, "max_size": N, "params_checked": count,
               "verdict": "holds" if holds else "fails", "failures": jsonable([list(f) for f in failures])}
    return ("ok" if holds else "fail"), payload


def cmd_dims(args):
    kind, st = parse_any_stat(args.stat)
    if kind != "cyclic" or st not in TH.DIM_FORMULAS:
        raise UsageError(f"argument --stat: dims supports {', '.join(cyc_stat_name(s) for s in TH.DIM_FORMULAS)}")
    if args.n < 2:
        raise UsageError("argument --n: must be at least 2")
    want = TH.DIM_FORMULAS[st](args.n)
    by_class = TH.class_dimension(st, args.n)
    by_image = TH.image_dimension(st, args.n, args.trunc or TH.S.DEFAULT_T)
    ok = want == by_class == by_image
    return ("ok" if ok else "fail"), {"stat": cyc_stat_name(st), "n": args.n, "dimension": by_class,
                                      "formula": want, "class_count": by_class, "image_count": by_image}


COMMANDS = {
    "eval": cmd_eval,
    "ceval": cmd_ceval,
    "shuffle": cmd_shuffle,
    "cshuffle": cmd_cshuffle,
    "distribute": cmd_distribute,
    "check-sc": cmd_check_sc,
    "check-csc": cmd_check_csc,
    "check-equiv": cmd_check_equiv,
    "check-f-equiv": cmd_check_f_equiv,
    "counterexample": cmd_counterexample,
    "lifting-check": cmd_lifting_check,
    "verify-theorem": cmd_verify_theorem,
    "dims": cmd_dims,
}


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--max-n", type=int, default=None, help="size bound for exhaustive checks")
    common.add_argument("--trunc", type=int, default=None, help="series truncation order T")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized spot checks")

    parser = _Parser(prog="cycshuffle", description="Cyclic shuffle-compatibility toolkit.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    p = add("eval", "evaluate a linear statistic")
    p.add_argument("--stat", required=True)
    p.add_argument("--perm", required=True)

    p = add("ceval", "evaluate a cyclic statistic")
    p.add_argument("--stat", required=True)
    p.add_argument("--perm", required=True)

    p = add("shuffle", "list linear shuffles")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--des", type=int, default=None, help="keep only shuffles with this many descents")

    p = add("cshuffle", "list cyclic shuffles")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("distribute", "distribution of a statistic over shuffles")
    p.add_argument("--stat", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--cyclic", action="store_true", help="use cyclic shuffles (implied by a cyclic statistic)")

    for name in ("check-sc", "check-csc"):
        p = add(name, "exhaustive compatibility check")
        p.add_argument("--stat", required=True)

    p = add("check-equiv", "equivalence of two cyclic statistics")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = add("check-f-equiv", "equivalence of two linear statistics up to a symmetry")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--f", required=True, help="r, c or rc")

    p = add("counterexample", "replay a stored counterexample")
    p.add_argument("--name", required=True)

    p = add("lifting-check", "check both lifting conditions at one length")
    p.add_argument("--cstat", required=True)
    p.add_argument("--stat", required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("verify-theorem", "exhaustively verify a named identity")
    p.add_argument("--name", required=True)
    p.add_argument("--max-size", type=int, default=None)

    p = add("dims", "dimension of a cyclic shuffle algebra graded piece")
    p.add_argument("--stat", required=True)
    p.add_argument("--n", type=int, required=True)
    return parser


def _inputs(args):
    return {k: v for k, v in sorted(vars(args).items()) if k != "json"}


def _print_table(report, out):
    print(f"command: {report.command}", file=out)
    print(f"verdict: {report.verdict}", file=out)
    for k, v in report.payload.items():
        text = v if isinstance(v, str) else json.dumps(v, sort_keys=False)
        print(f"  {k}: {text}", file=out)
    print(f"elapsed_ms: {report.elapsed_ms}", file=out)


def run(argv, out=None):
    """Execute one command line; returns (exit_code, RunReport or None)."""
    out = out or sys.stdout
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
    except UsageError as exc:
        return _usage(str(exc), argv, want_json, out)
    t0 = time.perf_counter()
    try:
        verdict, payload = COMMANDS[args.command](args)
    except UsageError as exc:
        return _usage(str(exc), argv, want_json, out)
    except CycShuffleError as exc:
        verdict, payload = "error", {"code": exc.code, "message": str(exc)}
    elapsed = int((time.perf_counter() - t0) * 1000)
    report = RunReport(args.command, jsonable(_inputs(args)), verdict, payload, elapsed)
    if args.json:
        print(json.dumps(report.as_dict()), file=out)
    else:
        _print_table(report, out)
    return {"ok": 0, "fail": 1}.get(verdict, 2), report


def _usage(message, argv, want_json, out):
    report = RunReport(argv[0] if argv else "", {"argv": list(argv)}, "error",
                       {"code": "usage", "message": message})
    if want_json:
        print(json.dumps(report.as_dict()), file=out)
    else:
        print(f"usage error: {message}", file=sys.stderr)
    return 2, report


def main(argv=None):
    code, _ = run(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
