"""Command-line interface.

Exit codes: 0 for a decisive answer, 2 when a budget ran out first, 1 for
usage and input errors.  Options may be collected in a file of long options
and passed as ``@file``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classifier, complexity, corpus, goedel, mu_search, machinefile
from .machinefile import MachineFileError
from .runtime import Exhausted, run_classical, run_nt
from .tm_core import UnknownSymbol

OK, USER_ERROR, BUDGET = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USER_ERROR, f"{self.prog}: error: {message}\n")


def load(name):
    """A machine file, or the name of a built-in machine such as ``flipper``."""
    if not Path(name).exists() and name in corpus.BUILDERS:
        return corpus.load(name)
    return machinefile.load(name)


def _word(tokens):
    return " ".join(tokens) if tokens else "ε"


def _record(**fields):
    return json.dumps(fields, ensure_ascii=False)


def cmd_run(args, out):
    m = load(args.machine)
    runner = run_classical if args.classical else run_nt
    rec = runner(m, args.input, args.budget, retain="none" if args.trace == "none" else "full")
    if args.trace == "text":
        for i, alpha in enumerate(rec.trace):
            print(f"{i}: {alpha}", file=out)
    elif args.trace == "records":
        for i, alpha in enumerate(rec.trace):
            print(_record(index=i, word=list(alpha.word), head=alpha.head, state=alpha.state), file=out)
    print(f"verdict: {rec.verdict}", file=out)
    return BUDGET if isinstance(rec.verdict, Exhausted) else OK


def cmd_classify(args, out):
    m = load(args.machine)
    rec = run_nt(m, args.input, args.budget)
    verdict = classifier.classify(rec, args.margin)
    print(verdict, file=out)
    if args.extract and isinstance(verdict, classifier.ConvergingEvidence):
        values = classifier.extract_cauchy(rec)
        shown = ", ".join(v.binary() for v in values[: args.terms])
        more = f", … ({len(values)} terms)" if len(values) > args.terms else ""
        print(f"cauchy: {shown}{more}", file=out)
    return BUDGET if isinstance(verdict, classifier.Unknown) else OK


def _goedel_number(text):
    """Decimal, factored ``2^a·3^b``, or a token string to be encoded.

    ``0`` is never a Gödel number, so a bare ``0`` is read as the token.
    """
    text = text.strip()
    if text.isdigit() and int(text) > 0:
        return int(text)
    if "^" in text:
        return goedel.parse_number(text)
    return goedel.encode_word(goedel.tokenize(text))


def _variable_code(text):
    if text.isdigit():
        code = int(text)
        goedel.variable_for_code(code)
        return code
    tokens = goedel.tokenize(text)
    if len(tokens) != 1 or not goedel.is_variable(tokens[0]):
        raise UsageError(f"{text!r} is not a variable")
    return goedel.code(tokens[0])


def cmd_goedel(args, out):
    op = args.op
    if op == "encode":
        tokens = goedel.tokenize(" ".join(args.text))
        print(goedel.factored(tokens) if args.factored else goedel.encode_word(tokens), file=out)
    elif op == "decode":
        print(goedel.render(goedel.decode_number(_goedel_number(args.number))), file=out)
    elif op == "z":
        print(goedel.Z(args.q), file=out)
    elif op == "neg":
        print(goedel.neg(_goedel_number(args.x)), file=out)
    elif op == "sb":
        print(goedel.sb(_goedel_number(args.x), _variable_code(args.var), _goedel_number(args.z)), file=out)
    elif op == "form":
        print("true" if goedel.form(_goedel_number(args.x)) else "false", file=out)
    elif op == "growth":
        ok = True
        for row in goedel.numeral_growth_report(args.q_max):
            digits = str(row.z)
            shown = digits if len(digits) <= 30 else f"<{len(digits)} digits>"
            print(f"q={row.q} Z(q)={shown} {'pass' if row.passed else 'FAIL'}", file=out)
            ok = ok and row.passed
        return OK if ok else USER_ERROR
    return OK


def cmd_mu(args, out):
    m = load(args.machine)
    outcome = mu_search.mu_value(m, args.args, args.y_budget, args.step_budget)
    if isinstance(outcome, mu_search.Found):
        print(f"mu = {outcome.y}", file=out)
        return OK
    if isinstance(outcome, mu_search.Totalized):
        print(f"self-terminated at y={outcome.at_y}", file=out)
        print("extension = 0", file=out)
        return OK
    print(mu_search.Unknown(outcome), file=out)
    return BUDGET


def _steps(t):
    return str(t) if isinstance(t, int) else f"diverged ({t})"


def cmd_complexity(args, out):
    m = load(args.machine)
    records = args.format == "records"
    if args.task == "worst-case":
        rep = complexity.worst_case(m, args.n, args.budget)
        rows = [(_word(w), _steps(t)) for w, t in rep.per_word.items()]
        width = max([len(r[0]) for r in rows] + [4])
        for (w, t), (shown, steps) in zip(rep.per_word.items(), rows):
            if records:
                print(_record(word=list(w), steps=t if isinstance(t, int) else str(t)), file=out)
            else:
                print(f"{shown:<{width}}  {steps}", file=out)
        if isinstance(rep.t_max, complexity.Undefined):
            print(f"T({args.n}) undefined: no halt on {_word(rep.t_max.witness)}", file=out)
            return BUDGET
        print(f"T({args.n}) = {rep.t_max}", file=out)
        return OK
    if args.task == "poly":
        rep = complexity.poly_check(m, args.k, args.n_max, args.budget)
        if not records:
            print(f"k={args.k}: checking T(n) <= n^k + k pointwise (no hidden constant)", file=out)
            print(f"{'n':>3}  {'T(n)':>8}  {'bound':>8}  status", file=out)
        for row in rep.rows:
            t = "-" if isinstance(row.t_max, complexity.Undefined) else row.t_max
            if records:
                print(_record(n=row.n, t_max=t, bound=row.bound, status=row.status), file=out)
            else:
                print(f"{row.n:>3}  {t:>8}  {row.bound:>8}  {row.status}", file=out)
        statuses = [r.status for r in rep.rows]
        if "undefined" in statuses:
            return BUDGET
        if not records:
            failing = [r.n for r in rep.rows if r.status == "fail"]
            print("all pass" if not failing else f"fails at n = {', '.join(map(str, failing))}", file=out)
        return OK
    accepted, unknown = complexity.language_upto(m, args.n_max, args.budget)
    if records:
        for w in accepted:
            print(_record(word=list(w), accepted=True), file=out)
        for w in unknown:
            print(_record(word=list(w), accepted=None), file=out)
    else:
        print("accepted: " + (", ".join(_word(w) for w in accepted) or "none"), file=out)
        print("unknown: " + (", ".join(_word(w) for w in unknown) or "none"), file=out)
    return BUDGET if unknown else OK


def build_parser():
    p = _Parser(prog="ntlab", fromfile_prefix_chars="@",
                description="Turing machines with repeat detection, Gödel numbering and friends.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="run a machine and print its trace")
    run.add_argument("machine")
    run.add_argument("input", nargs="*", help="input word, one token per argument")
    run.add_argument("--budget", type=int, default=1000)
    mode = run.add_mutually_exclusive_group()
    mode.add_argument("--nt", action="store_true", help="stop on a repeated description (default)")
    mode.add_argument("--classical", action="store_true")
    run.add_argument("--trace", choices=["text", "records", "none"], default="text")
    run.set_defaults(func=cmd_run)

    cl = sub.add_parser("classify", help="converging/oscillating evidence for a run")
    cl.add_argument("machine")
    cl.add_argument("input", nargs="*")
    cl.add_argument("--budget", type=int, default=1000)
    cl.add_argument("--margin", type=int, default=2)
    cl.add_argument("--extract", action="store_true", help="print the extracted Cauchy sequence")
    cl.add_argument("--terms", type=int, default=8, help="how many sequence terms to print")
    cl.set_defaults(func=cmd_classify)

    g = sub.add_parser("goedel", help="Gödel numbers of words and formulas")
    gsub = g.add_subparsers(dest="op", required=True, parser_class=_Parser)
    enc = gsub.add_parser("encode")
    enc.add_argument("text", nargs="+")
    enc.add_argument("--factored", action="store_true")
    gsub.add_parser("decode").add_argument("number")
    gsub.add_parser("z").add_argument("q", type=int)
    gsub.add_parser("neg").add_argument("x")
    sb = gsub.add_parser("sb")
    sb.add_argument("x")
    sb.add_argument("var")
    sb.add_argument("z")
    gsub.add_parser("form").add_argument("x")
    gsub.add_parser("growth").add_argument("q_max", type=int)
    g.set_defaults(func=cmd_goedel)

    mu = sub.add_parser("mu", help="least zero of G(args, y)")
    mu.add_argument("machine")
    mu.add_argument("args", nargs="*", type=int)
    mu.add_argument("--y-budget", type=int, default=100)
    mu.add_argument("--step-budget", type=int, default=10_000)
    mu.set_defaults(func=cmd_mu)

    common = _Parser(add_help=False)
    common.add_argument("--budget", type=int, default=10_000)
    common.add_argument("--format", choices=["text", "records"], default="text")
    cx = sub.add_parser("complexity", help="step counts over all inputs of a length")
    cx.add_argument("machine")
    tasks = cx.add_subparsers(dest="task", required=True, parser_class=_Parser)
    tasks.add_parser("worst-case", parents=[common]).add_argument("n", type=int)
    poly = tasks.add_parser("poly", parents=[common])
    poly.add_argument("k", type=int)
    poly.add_argument("--n-max", type=int, default=6)
    tasks.add_parser("language", parents=[common]).add_argument("n_max", type=int)
    cx.set_defaults(func=cmd_complexity)
    return p


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except MachineFileError as exc:
        print(exc, file=sys.stderr)
    except (UsageError, UnknownSymbol, ValueError) as exc:
        print(f"ntlab: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"ntlab: {exc}", file=sys.stderr)
    return USER_ERROR


if __name__ == "__main__":
    sys.exit(main())
