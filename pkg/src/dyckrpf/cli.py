"""Command line front end.

Words are written with parentheses (or 1/0 under ``--alphabet binary``); the
empty word is the literal ``EPSILON``. A positional argument of ``-`` reads
one item per line from standard input.

Exit status: 0 success, 1 usage, 2 domain error, 3 budget or cap exceeded.
Errors go to standard error as one line, ``ERROR <CODE>: detail``.
"""

import argparse
import json
import re
import sys

from dyckrpf import analysis, dyck, factorize, natural, permuted, rational
from dyckrpf.errors import RPFError

EPSILON = "EPSILON"

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


class UsageError(Exception):
    code = "USAGE"
    exit_status = 1


class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        # let rationals such as -2/9 through as positionals
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")

    def error(self, message):
        raise UsageError(message)


def _global_options(suppress):
    p = _Parser(add_help=False)
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--alphabet", choices=("parens", "binary"), default=default("parens"))
    p.add_argument("--max-bits", type=int, default=default(natural.DEFAULT_MAX_BITS))
    p.add_argument("--json", action="store_true", default=default(False))
    return p


def build_parser():
    top = _global_options(False)
    sub_globals = _global_options(True)
    parser = _Parser(prog="dyckrpf", description=__doc__.splitlines()[0], parents=[top])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, item="word"):
        p = sub.add_parser(name, help=help_, parents=[sub_globals])
        p.add_argument(item)
        return p

    p = add("encode", "spell a number as a word", "number")
    p.add_argument("--rational", action="store_true")
    p.add_argument("--perm", metavar="FILE")
    p = add("decode", "evaluate a word")
    p.add_argument("--rational", action="store_true")
    p.add_argument("--perm", metavar="FILE")
    p.add_argument("--show-den", action="store_true", help="print /1 for integers")
    add("validate", "classify a word: minimal, quasiminimal, dyck or invalid")
    add("collapse", "deflate to the minimal word with the same value")
    add("dinf", "inflationary degree")
    add("succ", "successor of a minimal word")
    p = add("factorize", "prime factorization of a minimal word")
    p.add_argument("--compressed", action="store_true", help="input and output in run-length form")
    add("compress", "run-length compress a word")
    add("decompress", "expand a run-length compressed word", "tokens")
    p = add("convert", "respell a word from one prime permutation to another")
    p.add_argument("--from", dest="src", metavar="FILE", required=True)
    p.add_argument("--to", dest="dst", metavar="FILE", required=True)

    an = sub.add_parser("analyze", help="enumeration and conjecture checks", parents=[sub_globals])
    asub = an.add_subparsers(dest="analysis", required=True, parser_class=_Parser)
    asub.add_parser("counts", parents=[sub_globals]).add_argument("--max", type=int, required=True)
    asub.add_parser("stripes", parents=[sub_globals]).add_argument("--k", type=int, required=True)
    asub.add_parser("grammar", parents=[sub_globals]).add_argument("--cap", type=int, required=True)
    asub.add_parser("stripe-patterns", parents=[sub_globals]).add_argument("--max", type=int, required=True)
    asub.add_parser("dfa", parents=[sub_globals]).add_argument("--cap", type=int, default=9)
    return parser


# -- word I/O ----------------------------------------------------------------


def read_word(text, args):
    text = text.strip()
    if text == EPSILON:
        return ""
    if args.alphabet == "binary":
        text = dyck.from_binary(text)
    return dyck.validate(text)


def show_word(w, args):
    if w == "":
        return EPSILON
    return dyck.to_binary(w) if args.alphabet == "binary" else w


def read_natural(text):
    text = text.strip()
    if not text.isdigit():
        raise natural_domain(f"not a natural number: {text!r}")
    return int(text)


def natural_domain(msg):
    from dyckrpf.errors import DomainError

    return DomainError(msg)


def _perm(path):
    try:
        return permuted.PrimePermutation.load(path)
    except OSError as e:
        raise UsageError(f"cannot read permutation file {path}: {e.strerror}") from None


# -- commands ----------------------------------------------------------------


def _encode(item, args):
    if args.rational:
        if args.perm:
            raise UsageError("--perm is not supported with --rational")
        return show_word(rational.spell_rat(rational.parse_rational(item)), args)
    n = read_natural(item)
    if args.perm:
        return show_word(permuted.spell_nat_perm(n, _perm(args.perm)), args)
    return show_word(natural.spell_nat(n), args)


def _decode(item, args):
    w = read_word(item, args)
    budget = natural.EvalBudget(args.max_bits)
    if args.rational:
        if args.perm:
            raise UsageError("--perm is not supported with --rational")
        return rational.format_rational(rational.eval_rat(w, budget), args.show_den)
    if args.perm:
        return str(permuted.eval_nat_perm(w, _perm(args.perm), budget))
    return str(natural.eval_nat(w, budget))


def classify(text, args):
    try:
        w = read_word(text, args)
    except RPFError:
        return "invalid"
    if natural.is_minimal(w):
        return "minimal"
    if rational.is_quasiminimal(w):
        return "quasiminimal"
    return "dyck"


def _factorize(item, args):
    if args.compressed:
        return factorize.factorize_compressed(item.strip())
    out = factorize.factorize_dyck(read_word(item, args))
    return dyck.to_binary(out) if args.alphabet == "binary" else out


def _decompress(item, args):
    text = item.strip()
    return show_word(dyck.decompress("" if text == EPSILON else text), args)


def _compress(item, args):
    return dyck.compress(read_word(item, args)) or EPSILON


COMMANDS = {
    "encode": _encode,
    "decode": _decode,
    "validate": classify,
    "collapse": lambda item, args: show_word(natural.collapse(read_word(item, args)), args),
    "dinf": lambda item, args: str(natural.dinf(read_word(item, args))),
    "succ": lambda item, args: show_word(
        natural.succ(read_word(item, args), natural.EvalBudget(args.max_bits)), args
    ),
    "factorize": _factorize,
    "compress": _compress,
    "decompress": _decompress,
    "convert": lambda item, args: show_word(
        permuted.convert_spelling(
            read_word(item, args), _perm(args.src), _perm(args.dst), natural.EvalBudget(args.max_bits)
        ),
        args,
    ),
}


def _analyze(args):
    budget = natural.EvalBudget(args.max_bits)
    if args.analysis == "counts":
        return analysis.count_report(args.max)
    if args.analysis == "stripes":
        return analysis.stripes_report(args.k, budget)
    if args.analysis == "grammar":
        return analysis.grammar_check(args.cap)
    if args.analysis == "stripe-patterns":
        return analysis.check_stripe_patterns(args.max, budget)
    return analysis.dfa_check(semilength_cap=args.cap, budget=budget)


def _report_error(err):
    print(f"ERROR {err.code}: {err}", file=sys.stderr)
    return err.exit_status


def run(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.max_bits < 64:
            raise UsageError("--max-bits must be at least 64")
    except UsageError as e:
        return _report_error(e)

    if args.command == "analyze":
        try:
            report = _analyze(args)
        except RPFError as e:
            return _report_error(e)
        print(report.to_json() if args.json else report.to_text())
        return 0

    handler = COMMANDS[args.command]
    item = getattr(args, "number", None) or getattr(args, "tokens", None) or getattr(args, "word", None)
    items = [line.rstrip("\n") for line in sys.stdin] if item == "-" else [item]
    status = 0
    results = []
    for it in items:
        try:
            out = handler(it, args)
        except (RPFError, UsageError) as e:
            status = max(status, _report_error(e))
            results.append({"input": it, "error": e.code, "detail": str(e)})
            if item == "-" and not args.json:
                print()
            continue
        results.append({"input": it, "output": out})
        if not args.json:
            print(out)
    if args.json:
        doc = {"command": args.command, "results": results} if item == "-" else {"command": args.command, **results[0]}
        print(json.dumps(doc))
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
