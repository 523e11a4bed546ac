"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a counterexample or the
corpus check fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from .analysis import analyze, render_report
from .classify import AksakClass, StringClass
from .core import (
    RhythmError,
    format_distance_seq,
    format_subset,
    parse_rhythm,
    rotate,
    to_box,
    to_distance_seq,
)
from .corpus import CORPUS_ENV, CorpusError, corpus_problems, find, load_corpus, query, read_entries
from .evenness import enumeration_cap
from .generators import ALGORITHMS, generated
from .svg import write_svg
from .verify import SWEEPS

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# sweeps whose cost grows like 2^n or C(n, k) and so obey the enumeration cap
_CAPPED = {"even-uniqueness", "deep-characterization", "winograd-implies-erdos", "erd-deep-gcd"}


class UsageError(Exception):
    pass


def _print_rhythm(r) -> None:
    print(to_box(r))
    print(format_distance_seq(to_distance_seq(r)) if r.k else "()")
    print(format_subset(r))


def cmd_gen(args) -> int:
    algo = args.algo
    if algo.startswith("generated:"):
        try:
            m = int(algo.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad generator in {algo!r}") from None
        r = generated(args.k, args.n, m)
    elif algo in ALGORITHMS:
        r = ALGORITHMS[algo](args.k, args.n)
    else:
        raise UsageError(
            f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)} or generated:M"
        )
    if args.rotate:
        r = rotate(r, args.rotate)
    _print_rhythm(r)
    return EXIT_OK


def _patterns(args) -> list[str]:
    if args.patterns:
        return list(args.patterns)
    return [line.strip() for line in sys.stdin if line.strip()]


def cmd_analyze(args) -> int:
    patterns = _patterns(args)
    if not patterns:
        raise UsageError("no pattern given on the command line or standard input")
    rhythms = [parse_rhythm(p) for p in patterns]
    print("\n\n".join(render_report(analyze(r)) for r in rhythms))
    return EXIT_OK


def cmd_verify(args) -> int:
    fn, default_n = SWEEPS[args.theorem]
    max_n = args.max_n if args.max_n is not None else default_n
    if max_n < 1:
        raise UsageError("--max-n must be positive")
    if args.theorem in _CAPPED and max_n > enumeration_cap():
        raise UsageError(
            f"--max-n {max_n} exceeds the enumeration cap {enumeration_cap()}; "
            "raise EUCRHYTHM_MAX_N for longer runs"
        )
    res = fn(max_n)
    print(res.summary())
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_svg(args) -> int:
    r = parse_rhythm(args.pattern)
    try:
        write_svg(r, args.output)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {args.output}")
    return EXIT_OK


def _entry_row(e) -> str:
    return (
        f"{e.id:<9} {e.k:>2} {e.n:>2}  {e.pattern:<34} {e.aksak.value:<10} "
        f"{e.string_class.value:<17} {'; '.join(e.names)}"
    )


def cmd_corpus(args) -> int:
    path = args.corpus
    if args.action == "check":
        entries = read_entries(path)
        problems = corpus_problems(entries)
        for p in problems:
            print(p)
        if problems:
            print(f"FAIL corpus check: {len(problems)} problem(s) in {len(entries)} entries")
            return EXIT_FAIL
        print(f"PASS corpus check: {len(entries)} entries")
        return EXIT_OK
    entries = load_corpus(path)
    if args.action == "list":
        rows = query(
            entries,
            k=args.k,
            n=args.n,
            aksak=AksakClass(args.aksak) if args.aksak else None,
            string_cls=StringClass(args.string_class) if args.string_class else None,
            name=args.name,
        )
        for e in rows:
            print(_entry_row(e))
        return EXIT_OK
    if not args.id:
        raise UsageError("corpus show needs an entry id, e.g. 'E(3,8)'")
    e = find(entries, args.id)
    if e is None:
        raise UsageError(f"no corpus entry {args.id!r}")
    print(f"id                 {e.id}")
    print(f"names              {'; '.join(e.names)}")
    print(f"necklace only      {'yes' if e.is_necklace_only else 'no'}")
    if e.rotation_notes:
        print(f"notes              {e.rotation_notes}")
    print(render_report(analyze(e.rhythm)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="eucrhythm", description="Generate and analyse Euclidean and deep rhythms."
    )
    p.add_argument(
        "--corpus",
        default=os.environ.get(CORPUS_ENV),
        help=f"corpus data file (default: bundled file, or ${CORPUS_ENV})",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a rhythm")
    g.add_argument("k", type=int)
    g.add_argument("n", type=int)
    g.add_argument("--algo", default="bjorklund", help="bjorklund, euclid, clough, snap or generated:M")
    g.add_argument("--rotate", type=int, default=0, metavar="DELTA")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="report on patterns given as arguments or on stdin")
    a.add_argument("patterns", nargs="*")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run an exhaustive sweep")
    v.add_argument("theorem", choices=sorted(SWEEPS))
    v.add_argument("--max-n", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("svg", help="write a clock diagram")
    s.add_argument("pattern")
    s.add_argument("output")
    s.set_defaults(func=cmd_svg)

    c = sub.add_parser("corpus", help="query the bundled rhythm corpus")
    c.add_argument("action", choices=["list", "show", "check"])
    c.add_argument("id", nargs="?")
    c.add_argument("--k", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--aksak", choices=[a.value for a in AksakClass])
    c.add_argument("--string-class", choices=[s.value for s in StringClass])
    c.add_argument("--name")
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RhythmError, CorpusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
