"""
Command-line front end.

Exit codes: 0 success, 1 invariant mismatch, 2 incomparable input,
3 parse error, 4 size guardrail exceeded (pass --force to lift it).
The environment variable POSET_MORSE_CACHE names a default cache file
for brute-force Mobius values; --cache overrides it.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import render
from .bijection import perm_to_word, verify_isomorphism, word_to_perm
from .chains import maximal_chains
from .closed_form import mobius_factor, mobius_pattern
from .crosscheck import crosscheck_json, crosscheck_text, run_crosscheck
from .isosearch import iso_search_json, iso_search_text, run_iso_search
from .morse import morse_report
from .posets import (FactorPoset, IncomparableError, MobiusCache,
                     PatternPoset, SizeLimitError, euler_characteristic,
                     mobius_bruteforce)
from .perms import format_permutation, parse_permutation
from .words import format_word, parse_word


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--poset", choices=("pattern", "factor"),
                        default="pattern", help="which poset to work in")
    parser.add_argument("--alphabet", default="ab",
                        help="letters for factor order (string or comma list)")
    parser.add_argument("--max-size", type=int, default=None, metavar="N",
                        help="size cap (top rank) for this run")
    parser.add_argument("--format", choices=("text", "table", "json"),
                        default="text", dest="fmt",
                        help="output format (table is an alias for text)")
    parser.add_argument("--cache", default=None, metavar="PATH",
                        help="brute-force Mobius cache file")
    parser.add_argument("--jobs", type=int, default=None, metavar="J",
                        help="worker processes for crosscheck")
    parser.add_argument("--force", action="store_true",
                        help="lift the size guardrails")


def parse_alphabet(text: str) -> tuple[str, ...]:
    letters = text.split(",") if "," in text else list(text)
    letters = [s for s in letters if s]
    if not letters:
        raise ValueError("alphabet must contain at least one letter")
    if len(set(letters)) != len(letters):
        raise ValueError(f"alphabet has repeated letters: {text!r}")
    return tuple(letters)


def make_poset(args):
    if args.force:
        cap = None
    elif args.max_size is not None:
        cap = args.max_size
    else:
        cap = PatternPoset.max_top if args.poset == "pattern" else FactorPoset.max_top
    if args.poset == "pattern":
        return PatternPoset(max_top=cap)
    return FactorPoset(alphabet=parse_alphabet(args.alphabet), max_top=cap)


def make_cache(args) -> MobiusCache:
    path = args.cache or os.environ.get("POSET_MORSE_CACHE") or None
    return MobiusCache(path)


def _emit(args, text_fn, json_obj) -> None:
    if args.fmt == "json":
        sys.stdout.write(render.dump_json(json_obj))
    else:
        sys.stdout.write(text_fn())


def cmd_mobius(args) -> int:
    poset = make_poset(args)
    bottom = poset.parse(args.bottom)
    top = poset.parse(args.top)
    poset.check_top(top)
    cache = make_cache(args)
    try:
        if poset.kind == "pattern":
            closed = mobius_pattern(bottom, top)
        else:
            closed = mobius_factor(bottom, top)
        report = morse_report(poset, bottom, top)
        brute = mobius_bruteforce(poset, bottom, top, cache)
    finally:
        cache.close()
    gap = poset.rank(top) - poset.rank(bottom)
    euler = euler_characteristic(poset, bottom, top) if gap >= 1 else None
    methods = {
        "closed_form": closed,
        "morse": report.mobius,
        "bruteforce": brute,
        "euler": euler,
    }
    values = {v for v in methods.values() if v is not None}
    agree = len(values) == 1

    def text() -> str:
        lines = [f"interval {render.interval_label(poset, bottom, top)} "
                 f"in the {poset.kind} poset"]
        lines.append(f"  closed form: {closed}")
        lines.append(f"  morse sum:   {report.mobius}")
        lines.append(f"  brute force: {brute}")
        if euler is not None:
            lines.append(f"  euler char:  {euler}")
        if agree:
            lines.append(f"mobius: {closed}")
        else:
            lines.append("mismatch: methods disagree")
        return "\n".join(lines) + "\n"

    _emit(args, text, {
        "poset": poset.tag,
        "bottom": poset.format(bottom),
        "top": poset.format(top),
        "rank_gap": gap,
        "methods": methods,
        "agree": agree,
        "mobius": closed if agree else None,
    })
    return 0 if agree else 1


def cmd_chains(args) -> int:
    poset = make_poset(args)
    bottom = poset.parse(args.bottom)
    top = poset.parse(args.top)
    poset.check_top(top)
    chains = maximal_chains(poset, bottom, top)

    def text() -> str:
        head = (f"{len(chains)} maximal chains of "
                f"{render.interval_label(poset, bottom, top)}\n")
        return head + render.chain_table(poset, chains) + "\n"

    _emit(args, text, render.chains_json(poset, bottom, top, chains))
    return 0


def cmd_morse_report(args) -> int:
    poset = make_poset(args)
    bottom = poset.parse(args.bottom)
    top = poset.parse(args.top)
    poset.check_top(top)
    report = morse_report(poset, bottom, top)
    _emit(args, lambda: render.morse_report_text(poset, report),
          render.morse_report_json(poset, report))
    return 0


def cmd_homotopy(args) -> int:
    poset = make_poset(args)
    bottom = poset.parse(args.bottom)
    top = poset.parse(args.top)
    poset.check_top(top)
    report = morse_report(poset, bottom, top)
    if report.homotopy is None:
        raise ValueError("degenerate interval: rank gap below two")
    _emit(args, lambda: f"{report.homotopy}\n", {
        "poset": poset.tag,
        "bottom": poset.format(bottom),
        "top": poset.format(top),
        "homotopy": str(report.homotopy),
        "mobius": report.mobius,
    })
    return 0


def cmd_bijection(args) -> int:
    if args.mode == "map":
        w = parse_word(args.word, ("a", "b"))
        p = word_to_perm(w)
        _emit(args, lambda: format_permutation(p) + "\n", {
            "word": format_word(w),
            "permutation": format_permutation(p),
        })
        return 0
    if args.mode == "unmap":
        p = parse_permutation(args.perm)
        w = perm_to_word(p)
        _emit(args, lambda: (format_word(w) or "eps") + "\n", {
            "permutation": format_permutation(p),
            "word": format_word(w),
        })
        return 0
    report = verify_isomorphism(args.max_length)

    def text() -> str:
        lines = [f"bijection check through length {report.max_length}",
                 f"  words checked: {report.words_checked}",
                 f"  ordered pairs checked: {report.pairs_checked}"]
        for m in sorted(report.avoider_counts):
            got, want = report.avoider_counts[m]
            lines.append(f"  avoiders of length {m}: {got} (expected {want})")
        lines.append("ok" if report.ok else
                     f"failed: {len(report.order_violations)} order "
                     f"violations, {len(report.roundtrip_failures)} "
                     f"round-trip failures, {len(report.image_mismatches)} "
                     "image mismatches")
        return "\n".join(lines) + "\n"

    _emit(args, text, {
        "max_length": report.max_length,
        "words_checked": report.words_checked,
        "pairs_checked": report.pairs_checked,
        "order_violations": len(report.order_violations),
        "roundtrip_failures": len(report.roundtrip_failures),
        "image_mismatches": len(report.image_mismatches),
        "avoider_counts": {str(m): list(v)
                           for m, v in report.avoider_counts.items()},
        "ok": report.ok,
    })
    return 0 if report.ok else 1


def cmd_crosscheck(args) -> int:
    poset = make_poset(args)
    max_size = args.max_size if args.max_size is not None else 5
    cache = make_cache(args)
    try:
        report = run_crosscheck(poset, max_size, cache, jobs=args.jobs)
    finally:
        cache.close()
    _emit(args, lambda: crosscheck_text(report),
          crosscheck_json(report, include_records=False))
    return 0 if report.ok else 1


def cmd_table1(args) -> int:
    sys.stdout.write(render.table1_text())
    return 0


def cmd_iso_search(args) -> int:
    alphabet = parse_alphabet(args.alphabet)
    if not args.force:
        if args.pattern_cap > 5:
            raise SizeLimitError(
                f"pattern cap {args.pattern_cap} above guardrail 5")
        if args.word_cap > 8:
            raise SizeLimitError(f"word cap {args.word_cap} above guardrail 8")
    report = run_iso_search(args.pattern_cap, args.word_cap, alphabet)
    _emit(args, lambda: iso_search_text(report), iso_search_json(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetmorse",
        description="Mobius functions and homotopy types of intervals in "
                    "the consecutive pattern poset and in factor order, "
                    "via closed forms, discrete Morse theory, and brute "
                    "force.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mobius", help="Mobius value by every method")
    p.add_argument("bottom")
    p.add_argument("top")
    _common_flags(p)
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("chains", help="maximal chains with labels")
    p.add_argument("bottom")
    p.add_argument("top")
    _common_flags(p)
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("morse-report",
                       help="chains, skipped intervals, critical cells")
    p.add_argument("bottom")
    p.add_argument("top")
    _common_flags(p)
    p.set_defaults(func=cmd_morse_report)

    p = sub.add_parser("homotopy", help="homotopy type of the open interval")
    p.add_argument("bottom")
    p.add_argument("top")
    _common_flags(p)
    p.set_defaults(func=cmd_homotopy)

    p = sub.add_parser("bijection",
                       help="factor order vs pattern containment on "
                            "{213,231}-avoiders")
    bsub = p.add_subparsers(dest="mode", required=True)
    pm = bsub.add_parser("map", help="word over {a,b} to permutation")
    pm.add_argument("word")
    _common_flags(pm)
    pm.set_defaults(func=cmd_bijection, mode="map")
    pu = bsub.add_parser("unmap", help="avoiding permutation to word")
    pu.add_argument("perm")
    _common_flags(pu)
    pu.set_defaults(func=cmd_bijection, mode="unmap")
    pv = bsub.add_parser("verify", help="exhaustive order-isomorphism check")
    pv.add_argument("--max-length", type=int, default=6, metavar="N")
    _common_flags(pv)
    pv.set_defaults(func=cmd_bijection, mode="verify")

    p = sub.add_parser("crosscheck",
                       help="run every method on every interval up to a cap")
    _common_flags(p)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("table1",
                       help="reference table for the interval [1, 213546]")
    _common_flags(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("iso-search",
                       help="look for factor intervals isomorphic to "
                            "pattern intervals")
    p.add_argument("--pattern-cap", type=int, default=4, metavar="N")
    p.add_argument("--word-cap", type=int, default=4, metavar="N")
    _common_flags(p)
    p.set_defaults(func=cmd_iso_search)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except IncomparableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
