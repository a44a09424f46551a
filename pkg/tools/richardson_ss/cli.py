from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from app.core.config import get_settings
from app.core.errors import NotMinimalRepresentativeError, RichardsonError
from app.core.logging_config import configure_logging
from app.schemas.common import OutputFormat
from app.services.classify import classification_rows
from app.services.criteria import check_pair
from app.services.rootsys import RootSystem, root_system
from app.services.tables import example_tables
from app.services.verification import run_verification
from app.services.weyl import SignedPerm, from_word, parse_window, parse_word

from .render import render


EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_NOT_MIN_REP = 3

FORMATS = [f.value for f in OutputFormat]

COMMAND_HELP = {
    "classify": "Table of extremal pairs for (type, n, r)",
    "check": "Decide nonemptiness and semistability of a pair",
    "certify": "Emit only the chain certificate",
    "verify": "Sweep the closed forms against the brute-force oracles",
    "tables": "The two worked example tables and the counterexamples",
}


def _add_shared(p: argparse.ArgumentParser) -> None:
    # also accepted after the command; the top-level value stands otherwise
    p.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    p.add_argument("--log-level", default=argparse.SUPPRESS)


def _add_context(p: argparse.ArgumentParser) -> None:
    p.add_argument("type", nargs="?", help="B, C or D")
    p.add_argument("n", nargs="?", type=int, help="rank")
    p.add_argument("r", nargs="?", type=int, help="node of the maximal parabolic")
    p.add_argument("--type", dest="type_flag", help="same as the positional TYPE")
    p.add_argument("--n", dest="n_flag", type=int, help="same as the positional N")
    p.add_argument("--r", dest="r_flag", type=int, help="same as the positional R")


def _context(args: argparse.Namespace) -> tuple[RootSystem, int]:
    kind = args.type_flag or args.type
    n = args.n_flag if args.n_flag is not None else args.n
    r = args.r_flag if args.r_flag is not None else args.r
    if kind is None or n is None or r is None:
        raise argparse.ArgumentTypeError("type, n and r are required")
    try:
        return root_system(kind.upper(), n), r
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"unknown type {kind!r}") from exc


def _element(rs: RootSystem, text: str, as_word: bool) -> SignedPerm:
    if as_word:
        return from_word(rs, parse_word(text))
    return parse_window(text, rs)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="richardson-ss",
        description="Extremal elements, Richardson nonemptiness and T-semistability in G/P_r (types B, C, D)",
        epilog="commands: " + "; ".join(f"{name}: {text}" for name, text in COMMAND_HELP.items()),
    )
    ap.add_argument("--format", default=OutputFormat.json.value, choices=FORMATS)
    ap.add_argument("--log-level", default="WARNING", help="Logging level (default WARNING keeps output clean)")
    ap.add_argument("command", choices=list(COMMAND_HELP))
    ap.add_argument("rest", nargs=argparse.REMAINDER, help="arguments of the command")
    return ap


def command_parser(name: str) -> argparse.ArgumentParser:
    """Arguments of one command, parsed intermixed so flags may sit between positionals."""
    settings = get_settings()
    p = argparse.ArgumentParser(prog=f"richardson-ss {name}", description=COMMAND_HELP[name])
    _add_shared(p)
    if name in ("classify", "check", "certify"):
        _add_context(p)
    if name in ("check", "certify"):
        p.add_argument("v", help="window of v, e.g. '3,4,5,-1,2'")
        p.add_argument("w", help="window of w")
        p.add_argument("--word", action="store_true", help="Read v and w as words like 's4 s1 s2 s3'")
    if name == "verify":
        p.add_argument("--max-n", type=int, default=settings.max_n)
        p.add_argument("--kmax", type=int, default=settings.k_max, help="longest chain the oracle searches")
        p.add_argument("--samples", type=int, default=settings.samples)
        p.add_argument("--seed", type=int, default=settings.seed)
        p.add_argument("--budget", type=int, default=settings.budget)
        p.add_argument("--workers", type=int, default=settings.workers, help="processes for the sweep (0: one per CPU)")
    return p


def parse_args(argv: Sequence[str]) -> argparse.Namespace:
    top = build_parser().parse_args(argv)
    base = argparse.Namespace(command=top.command, format=top.format, log_level=top.log_level)
    args = command_parser(top.command).parse_intermixed_args(top.rest, namespace=base)
    args.format = OutputFormat(args.format)
    return args


def cmd_classify(args: argparse.Namespace) -> int:
    rs, r = _context(args)
    print(render(classification_rows(rs, r), args.format))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    rs, r = _context(args)
    v, w = _element(rs, args.v, args.word), _element(rs, args.w, args.word)
    verdict = check_pair(rs, r, v, w)
    if args.command == "certify":
        if verdict.certificate is None:
            print(f"no certificate: {verdict.reason.value if verdict.reason else 'unknown'}", file=sys.stderr)
            return EXIT_MISMATCH
        chain = [{"window": u, "weight": chi} for u, chi in zip(verdict.certificate, verdict.certificate_weights)]
        if args.format is OutputFormat.json:
            print(json.dumps(chain, indent=2))
        else:
            for item in chain:
                print(",".join(str(x) for x in item["window"]), " ", ",".join(item["weight"]))
        return EXIT_OK
    print(render(verdict, args.format))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(args.max_n, args.kmax, args.samples, args.seed, args.budget, workers=args.workers)
    print(render(report.checks, args.format))
    if not report.ok:
        for check in report.checks:
            if check.failed:
                print(f"FAIL {check.name}: {check.witness}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_tables(args: argparse.Namespace) -> int:
    tables = example_tables()
    if args.format is OutputFormat.json:
        print(render(tables, args.format))
        return EXIT_OK
    for table in tables.tables:
        print(f"{table.type.value}{table.n}, r={table.r}")
        print(render(table.rows, args.format))
        print()
    print("counterexamples")
    print(render(tables.counterexamples, args.format))
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "check": cmd_check,
    "certify": cmd_check,
    "verify": cmd_verify,
    "tables": cmd_tables,
}


_WINDOW_TOKEN = re.compile(r"^-\d[\d,\s()-]*$")


def _protect_windows(argv: Sequence[str]) -> list[str]:
    # argparse would read "-4,5,-1,2,3" as an option; a leading space keeps it positional
    return [f" {a}" if _WINDOW_TOKEN.match(a) and "," in a else a for a in argv]


def main(argv: Sequence[str] | None = None) -> int:
    args = parse_args(_protect_windows(sys.argv[1:] if argv is None else argv))
    configure_logging(args.log_level, stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except NotMinimalRepresentativeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.suggestion is not None:
            print(f"suggestion: {exc.suggestion}", file=sys.stderr)
        return EXIT_NOT_MIN_REP
    except (RichardsonError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
