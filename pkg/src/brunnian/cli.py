"""Command-line interface.

Exit codes: 0 the command ran to a conclusion (any status, including an
undetermined certificate), 1 parse or usage error, 2 precondition
violation, 3 letter budget exceeded.  Budget aborts inside ``certify``
are recorded in-band in the certificate and still exit with 3.
"""

from __future__ import annotations

import argparse
import sys

from . import braid, genus2, homology
from .budget import DEFAULT_LETTER_CAP, LetterBudget
from .certificate import canonical_json, render_letters
from .errors import LetterBudgetExceeded, PreconditionError, WordSyntaxError
from .parsing import parse_surface, parse_word, surface_label


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with 2; usage errors are 1
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="brunnian",
                     description="Exact Brunnian membership and pseudo-Anosov "
                                 "certification for sphere and genus-2 "
                                 "mapping class groups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--surface", help="sphere:N or genus2")
    common.add_argument("--word", help="word text; read from stdin when omitted")
    common.add_argument("--json", action="store_true",
                        help="emit canonical JSON instead of text")
    common.add_argument("--max-letters", type=int, default=DEFAULT_LETTER_CAP,
                        help="letter budget for the computation "
                             f"(default {DEFAULT_LETTER_CAP})")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common],
                   help="decide triviality in the mapping class group")
    sub.add_parser("brunnian", parents=[common],
                   help="run every forget-strand check")
    sub.add_parser("project", parents=[common],
                   help="project a genus-2 word to the six-strand sphere")
    hom = sub.add_parser("homology", parents=[common],
                         help="homology action of a genus-2 word")
    hom.add_argument("--mod", type=int, default=None,
                     help="reduce the matrix modulo this prime")
    sub.add_parser("certify", parents=[common],
                   help="emit a certificate for the word")
    ex = sub.add_parser("example", parents=[common],
                        help="emit the nested-commutator Brunnian example")
    ex.add_argument("--n", type=int, required=True, help="strand count (>= 5)")
    return parser


def _surface(args, default: str | None = None):
    text = args.surface or default
    if text is None:
        raise _UsageError(f"{args.command} requires --surface")
    return parse_surface(text)


def _word_text(args) -> str:
    if args.word is not None:
        return args.word
    return sys.stdin.read().strip()


def _budget(args) -> LetterBudget:
    if args.max_letters < 1:
        raise _UsageError("--max-letters must be positive")
    return LetterBudget(args.max_letters)


def _emit(args, doc: dict, human: str) -> None:
    if args.json:
        print(canonical_json(doc))
    else:
        print(human)


def _verdict_text(value) -> str:
    if value is None:
        return "undetermined (letter budget exhausted)"
    return "trivial" if value else "nontrivial"


def _cmd_check(args) -> int:
    surface = _surface(args)
    budget = _budget(args)
    word = parse_word(_word_text(args), surface, budget)
    try:
        if surface[0] == "sphere":
            verdict = braid.is_trivial_sphere(word, budget)
        else:
            verdict = genus2.is_trivial_genus2(word, budget)
    except LetterBudgetExceeded:
        verdict = None
    prefix = "s" if surface[0] == "sphere" else "d"
    doc = {
        "surface": surface_label(surface),
        "word": render_letters(prefix, word.letters),
        "trivial": verdict,
        "letters_used": budget.used,
        "letter_cap": budget.cap,
        "aborted": budget.exhausted,
    }
    _emit(args, doc, _verdict_text(verdict))
    return 3 if budget.exhausted else 0


def _cmd_brunnian(args) -> int:
    surface = _surface(args)
    budget = _budget(args)
    word = parse_word(_word_text(args), surface, budget)
    if surface[0] == "sphere":
        report = braid.brunnian_check(word, budget)
        prefix = "s"
    else:
        report = genus2.brunnian_genus2(word, budget)
        prefix = "d"
    doc = {
        "surface": surface_label(surface),
        "word": render_letters(prefix, word.letters),
        "per_strand": list(report.per_strand),
        "brunnian": report.brunnian,
        "trivial": report.trivial,
        "letters_used": budget.used,
        "letter_cap": budget.cap,
        "aborted": budget.exhausted,
    }
    if report.brunnian is None:
        human = "undetermined (letter budget exhausted)"
    else:
        human = "brunnian" if report.brunnian else "not brunnian"
    _emit(args, doc, f"{human}; word {_verdict_text(report.trivial)}")
    return 3 if budget.exhausted else 0


def _cmd_project(args) -> int:
    surface = _surface(args, default="genus2")
    if surface[0] != "genus2":
        raise PreconditionError("project takes a genus-2 word")
    budget = _budget(args)
    word = parse_word(_word_text(args), surface, budget)
    projection = genus2.project(word)
    rendered = render_letters("s", projection.letters)
    doc = {
        "surface": "genus2",
        "word": render_letters("d", word.letters),
        "projection": rendered,
        "n": projection.n,
    }
    _emit(args, doc, rendered)
    return 0


def _cmd_homology(args) -> int:
    surface = _surface(args, default="genus2")
    if surface[0] != "genus2":
        raise PreconditionError("homology takes a genus-2 word")
    budget = _budget(args)
    word = parse_word(_word_text(args), surface, budget)
    rendered = render_letters("d", word.letters)
    if args.mod is None:
        matrix = homology.rho(word)
        poly = homology.charpoly(matrix)
        doc = {
            "surface": "genus2",
            "word": rendered,
            "mod": None,
            "matrix": [[str(x) for x in row] for row in matrix.rows],
            "charpoly": [str(c) for c in poly.coefficients],
            "identity": matrix.is_identity,
        }
        human = "\n".join(" ".join(str(x) for x in row) for row in matrix.rows)
    else:
        matrix = homology.rho_mod(word, args.mod)
        doc = {
            "surface": "genus2",
            "word": rendered,
            "mod": args.mod,
            "matrix": [list(row) for row in matrix.rows],
            "identity": matrix.is_identity,
        }
        human = "\n".join(" ".join(str(x) for x in row) for row in matrix.rows)
    _emit(args, doc, human)
    return 0


def _cmd_certify(args) -> int:
    surface = _surface(args)
    budget = _budget(args)
    text = _word_text(args)
    word = parse_word(text, surface, budget)
    if surface[0] == "sphere":
        cert = braid.certify_pa_sphere(word, budget, input_text=text)
    else:
        cert = genus2.certify_pa_genus2(word, budget, input_text=text)
    _emit(args, cert.to_document(), cert.summary())
    return 3 if cert.aborted else 0


def _cmd_example(args) -> int:
    surface = parse_surface(args.surface) if args.surface else ("sphere", args.n)
    word = braid.brunnian_example(args.n)
    if surface[0] == "genus2":
        if args.n != 6:
            raise PreconditionError("the genus-2 example needs --n 6")
        rendered = render_letters("d", word.letters)
    else:
        if surface[1] != args.n:
            raise PreconditionError("--surface strand count must match --n")
        rendered = render_letters("s", word.letters)
    doc = {
        "surface": surface_label(surface),
        "n": args.n,
        "word": rendered,
        "length": len(word.letters),
    }
    _emit(args, doc, rendered)
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "brunnian": _cmd_brunnian,
    "project": _cmd_project,
    "homology": _cmd_homology,
    "certify": _cmd_certify,
    "example": _cmd_example,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except WordSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 2
    except LetterBudgetExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
