"""Command-line front end.

``run(argv)`` does all the work and returns ``(exit_code, text)`` so tests can
drive it without a subprocess; ``main()`` prints and exits.

Exit codes: 0 success or member, 1 not a member, 2 usage or input error,
3 internal invariant violation or failing selftest.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .core import HConeError, format_hvector, format_rational, hvector_to_json, parse_hvector
from .decompose import InternalInvariantError, Member, certificate_to_json, decompose
from .diagram import (
    NotOSequenceError,
    Staircase,
    decomposition_levels,
    diagram_from_levels,
    lex_segment,
    render_hdiagram,
    render_staircase,
)
from .generators import enumerate_ex, expand, format_decomposition, point_label, point_to_json
from .oracle import membership_oracle
from .selftest import SweepTooLarge, run_selftest

EXIT_OK, EXIT_NOT_MEMBER, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    # --help and --version print then exit; capture both instead
    def _print_message(self, message, file=None):
        self._captured = getattr(self, "_captured", "") + (message or "")

    def exit(self, status=0, message=None):
        raise _EarlyExit(status, getattr(self, "_captured", "") + (message or ""))


class _EarlyExit(Exception):
    def __init__(self, status, message):
        super().__init__(message)
        self.status = status
        self.message = message


def _positive_int(flag):
    def conv(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} must be an integer, got {text!r}") from None
        if value < 1:
            raise argparse.ArgumentTypeError(f"{flag} must be >= 1, got {value}")
        return value
    return conv


def _nonneg_int(flag):
    def conv(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} must be an integer, got {text!r}") from None
        if value < 0:
            raise argparse.ArgumentTypeError(f"{flag} must be >= 0, got {value}")
        return value
    return conv


def _hvector_arg(text):
    try:
        return parse_hvector(text)
    except HConeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rows_arg(text):
    try:
        return Staircase(int(x) for x in text.split(",") if x.strip())
    except (ValueError, HConeError) as exc:
        raise argparse.ArgumentTypeError(f"bad staircase {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hcone", description="Exact computations in the cone of h-vectors of k[x,y], deg y = n.")
    p.add_argument("--version", action="version", version=f"hcone {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def grading(sp):
        sp.add_argument("-n", type=_positive_int("-n"), required=True, help="degree of y")

    sp = sub.add_parser("ex", help="list extremal points of degree <= D")
    grading(sp)
    sp.add_argument("-d", type=_nonneg_int("-d"), required=True, help="maximal degree")
    sp.add_argument("--format", choices=["text", "json"], default="text")

    sp = sub.add_parser("decompose", help="decide membership and print a chain decomposition")
    grading(sp)
    sp.add_argument("--h", type=_hvector_arg, required=True, help="h-vector, e.g. 3,3,2,4 or 1/2,1")
    sp.add_argument("--check-oracle", action="store_true", help="cross-check against the LP oracle")
    sp.add_argument("--format", choices=["text", "json"], default="text")

    sp = sub.add_parser("member", help="print 'member' or 'not a member'")
    grading(sp)
    sp.add_argument("--h", type=_hvector_arg, required=True)

    sp = sub.add_parser("lexseg", help="lex-segment staircase and ideal generators")
    grading(sp)
    sp.add_argument("--h", type=_hvector_arg, required=True)
    sp.add_argument("--format", choices=["text", "json", "svg"], default="text")

    sp = sub.add_parser("render", help="draw a staircase, or the level stack of a decomposition")
    grading(sp)
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--rows", type=_rows_arg, help="staircase row lengths, bottom row first")
    src.add_argument("--h", type=_hvector_arg, help="h-vector whose decomposition is drawn")
    sp.add_argument("--format", choices=["ascii", "svg"], default="ascii")

    sp = sub.add_parser("selftest", help="exhaustive and randomized cross-checks")
    sp.add_argument("--n-max", type=_positive_int("--n-max"), default=3)
    sp.add_argument("--d-max", type=_nonneg_int("--d-max"), default=5)
    sp.add_argument("--entry-max", type=_nonneg_int("--entry-max"), default=3)
    sp.add_argument("--seed", type=_nonneg_int("--seed"), default=0)
    sp.add_argument("--force", action="store_true", help="allow sweeps above the case limit")
    sp.add_argument("--workers", type=_positive_int("--workers"), default=1)
    return p


class _Style:
    def __init__(self, enabled: bool):
        self.enabled = enabled

    def __call__(self, text: str, code: str) -> str:
        return f"\x1b[{code}m{text}\x1b[0m" if self.enabled else text

    def good(self, text):
        return self(text, "32")

    def bad(self, text):
        return self(text, "31")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _cmd_ex(args, style):
    points = enumerate_ex(args.n, args.d)
    if args.format == "json":
        return EXIT_OK, _dump([
            {"label": point_label(p), "point": point_to_json(p), "expansion": hvector_to_json(expand(args.n, p))}
            for p in points
        ])
    width = max(len(point_label(p)) for p in points)
    lines = [f"{point_label(p).ljust(width)}  {format_hvector(expand(args.n, p))}" for p in points]
    lines.append(f"{len(points)} extremal points of degree <= {args.d} (n={args.n})")
    return EXIT_OK, "\n".join(lines)


def _oracle_disagrees(n, h, cert):
    oracle = membership_oracle(n, h)
    if oracle.member != cert.member:
        return (f"internal error: decompose says member={cert.member} "
                f"but the LP oracle says member={oracle.member} for n={n} h={format_hvector(h)}")
    return None


def _cmd_decompose(args, style):
    cert = decompose(args.n, args.h)
    if args.check_oracle:
        problem = _oracle_disagrees(args.n, args.h, cert)
        if problem:
            return EXIT_INTERNAL, problem
    code = EXIT_OK if cert.member else EXIT_NOT_MEMBER
    if args.format == "json":
        return code, _dump(certificate_to_json(args.n, cert))
    if isinstance(cert, Member):
        return code, f"{style.good('member')}\n{format_decomposition(args.n, cert.decomposition)}"
    witness = f"step={cert.step} degree={cert.degree} depth={cert.depth}"
    if cert.index is not None:
        witness += f" index={cert.index}"
    return code, f"{style.bad('not a member')}\nwitness: {witness}"


def _cmd_member(args, style):
    cert = decompose(args.n, args.h)
    if cert.member:
        return EXIT_OK, style.good("member")
    return EXIT_NOT_MEMBER, style.bad("not a member")


def _cmd_lexseg(args, style):
    stair, gens = lex_segment(args.n, args.h)
    if args.format == "json":
        return EXIT_OK, _dump({"rows": list(stair), "generators": gens})
    if args.format == "svg":
        return EXIT_OK, render_staircase(args.n, stair, "svg")
    rows = ",".join(str(x) for x in stair)
    body = render_staircase(args.n, stair, "ascii")
    return EXIT_OK, f"staircase: ({rows})\ngenerators: {', '.join(gens)}" + (f"\n{body}" if body else "")


def _cmd_render(args, style):
    if args.rows is not None:
        return EXIT_OK, render_staircase(args.n, args.rows, args.format)
    cert = decompose(args.n, args.h)
    if not isinstance(cert, Member):
        return EXIT_NOT_MEMBER, style.bad("not a member") + ": nothing to draw"
    levels = decomposition_levels(args.n, cert.decomposition)
    if args.format == "svg":
        return EXIT_OK, "\n".join(
            f"<!-- weight {format_rational(q)} -->\n{render_staircase(args.n, s, 'svg')}" for q, s in levels
        )
    diag = diagram_from_levels(args.n, levels)
    return EXIT_OK, render_hdiagram(diag)


def _cmd_selftest(args, style):
    try:
        report = run_selftest(args.n_max, args.d_max, args.entry_max, args.seed,
                              force=args.force, workers=args.workers)
    except SweepTooLarge as exc:
        raise UsageError(f"hcone selftest: {exc}") from None
    text = report.render()
    if style.enabled:
        text = text.replace("\nPASS ", "\n" + style.good("PASS") + " ").replace("\nFAIL ", "\n" + style.bad("FAIL") + " ")
    return (EXIT_OK if report.ok else EXIT_INTERNAL), text


_COMMANDS = {
    "ex": _cmd_ex,
    "decompose": _cmd_decompose,
    "member": _cmd_member,
    "lexseg": _cmd_lexseg,
    "render": _cmd_render,
    "selftest": _cmd_selftest,
}


def run(argv: Sequence[str], color: Optional[bool] = None) -> tuple[int, str]:
    """Execute one command line; never raises for bad input.

    ``color=None`` means plain output.  ``HCONE_NO_COLOR`` always wins.
    """
    if os.environ.get("HCONE_NO_COLOR"):
        color = False
    style = _Style(bool(color))
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}"
    except _EarlyExit as exc:
        return exc.status, exc.message.rstrip("\n")
    try:
        return _COMMANDS[args.command](args, style)
    except UsageError as exc:
        return EXIT_USAGE, f"usage error: {exc}"
    except NotOSequenceError as exc:
        return EXIT_USAGE, f"error[not-o-sequence]: {exc}"
    except InternalInvariantError as exc:
        return EXIT_INTERNAL, f"internal error: {exc}"
    except HConeError as exc:
        return EXIT_USAGE, f"error[invalid-input]: {exc}"


def main(argv: Optional[Sequence[str]] = None) -> None:
    argv = sys.argv[1:] if argv is None else argv
    code, text = run(argv, color=sys.stdout.isatty())
    stream = sys.stdout if code in (EXIT_OK, EXIT_NOT_MEMBER) else sys.stderr
    if text:
        print(text, file=stream)
    sys.exit(code)


if __name__ == "__main__":
    main()
