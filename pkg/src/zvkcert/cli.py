"""Command line front end.  Exit codes: 0 PASS, 1 FAIL, 2 usage error."""
from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_verify_family(args) -> int:
    from .pipeline import CertificateReport, _family

    rep = CertificateReport()
    _family(rep)
    for ln in rep.section("FAMILY"):
        print(ln)
    print(f"VERDICT {rep.verdict}")
    return EXIT_PASS if rep.verdict == "PASS" else EXIT_FAIL


def cmd_zvk(args) -> int:
    from .arrangement import (
        ArrangementSyntaxError, DegenerateInput, NotMeridian, OnPuncture, PunctureCollision,
        parse_arrangement, parse_loops, zvk_presentation,
    )

    try:
        arr = parse_arrangement(_read(args.arrangement))
        names, loops, section = parse_loops(_read(args.loops))
    except (ArrangementSyntaxError, DegenerateInput) as exc:
        raise UsageError(str(exc)) from None
    try:
        p = zvk_presentation(arr, loops, names, section=section)
    except (NotMeridian, PunctureCollision, DegenerateInput, OnPuncture) as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print("strand-order: " + " ".join(p.strand_order))
    for y, b in zip(p.base_generators.names, p.braids):
        print(f"braid {y}: {b}")
    print(p.render())
    print("presentation: " + p.group_presentation().render())
    return EXIT_PASS


def _split_words(text: str) -> list[str]:
    return [w.strip() for w in text.split(",")]


def cmd_stallings(args) -> int:
    from .freegroup import Alphabet, WordSyntaxError, stallings_fold, subgroup_member

    words = _split_words(args.gens)
    if args.alphabet:
        names = args.alphabet.replace(",", " ").split()
    else:
        names = []
        for w in words + ([args.query] if args.query else []):
            for tok in re.findall(r"[A-Za-z_][A-Za-z0-9_']*", w):
                if tok not in names and tok not in ("e",):
                    names.append(tok)
    try:
        A = Alphabet(sorted(names))
        gens = [A.word(w) for w in words]
        query = A.word(args.query) if args.query is not None else None
    except (ValueError, WordSyntaxError) as exc:
        raise UsageError(str(exc)) from None
    g = stallings_fold(gens, A)
    print(g.render())
    index = g.num_vertices if g.is_complete() else "infinite"
    print(f"rank {g.rank} index {index} basis {'yes' if g.is_basis else 'no'}")
    if query is not None:
        member, spelling = subgroup_member(g, query, spell=g.is_basis)
        if not member:
            print("not a member")
        elif spelling is not None:
            text = " ".join(f"h{j + 1}" if s == 1 else f"h{j + 1}^-1" for j, s in spelling) or "e"
            print(f"member: {text}")
        else:
            print("member")
    return EXIT_PASS


def cmd_certificate(args) -> int:
    from .pipeline import run_paper_certificate

    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    try:
        rep = run_paper_certificate(args.n_max, args.out)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_FAIL
    checks = rep.check_lines
    print(f"{len(checks)} checks, verdict {rep.verdict}; report written to {args.out}")
    if rep.first_failure:
        print(f"first failure in {rep.first_failure[0]}: {rep.first_failure[1]}")
    return EXIT_PASS if rep.verdict == "PASS" else EXIT_FAIL


def _window(text: str):
    from .exact import Q

    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("window must be X0,X1,Y0,Y1")
    try:
        return tuple(Q(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational in {text!r}") from None


def cmd_plot_delta(args) -> int:
    from .plot import plot_delta

    try:
        svg = plot_delta(args.window, args.out)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_FAIL
    curves = svg.count('class="curve"')
    print(f"{curves} curves written to {args.out}")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zvkcert", description=__doc__)
    sub = p.add_subparsers(dest="command")

    s = sub.add_parser("verify-family", help="exact checks of the rational-map family")
    s.set_defaults(func=cmd_verify_family)

    s = sub.add_parser("zvk", help="braid monodromy presentation of a real line arrangement")
    s.add_argument("--arrangement", required=True, help="file of 'name a b c' lines (a*x + b*y = c)")
    s.add_argument("--loops", required=True, help="loop file (see README)")
    s.set_defaults(func=cmd_zvk)

    s = sub.add_parser("stallings", help="fold a subgroup of a free group and test membership")
    s.add_argument("--gens", required=True, help='comma separated words, e.g. "a a, b b, a b"')
    s.add_argument("--query", help="word to test for membership")
    s.add_argument("--alphabet", help="generator names (default: letters appearing, sorted)")
    s.set_defaults(func=cmd_stallings)

    s = sub.add_parser("certificate", help="run the full certificate and write the report")
    s.add_argument("--n-max", type=int, default=20, help="number of coset pairs to certify (default 20)")
    s.add_argument("--out", required=True, help="report file")
    s.set_defaults(func=cmd_certificate)

    s = sub.add_parser("plot-delta", help="SVG of the excluded curves and the diagonal")
    s.add_argument("--window", required=True, type=_window, help="X0,X1,Y0,Y1 (rationals)")
    s.add_argument("--out", required=True, help="SVG file")
    s.set_defaults(func=cmd_plot_delta)
    return p


def _glue_window(argv: list[str]) -> list[str]:
    # A window such as -2,3,-2,3 starts with '-' and would be taken for an option.
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--window" and i + 1 < len(argv):
            out.append(f"--window={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_window(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_PASS
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
