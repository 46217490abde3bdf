"""Command-line front end.

Exit codes: 0 ok or legal, 1 illegal word or failed verification, 2 usage
or parse error, 3 size guard refusal, 4 precondition violation, 5 internal
invariant violation.
"""

import argparse
import contextlib
import json
import sys

from . import bijections, cylinder, enumeration, weights, words
from .errors import (
    InternalInvariantViolation,
    NotBalanced,
    NotOriginConnected,
    ParseError,
    PreconditionError,
    SizeGuardExceeded,
)
from .params import LegalityMode, Params

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_PRECONDITION = 4
EXIT_INTERNAL = 5

FORMATS = ("word", "cycle", "weights", "laps")


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _nonnegative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be a nonnegative integer, got {text}")
    return value


def _seed(text):
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"must be an unsigned 64-bit integer, got {text}")
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-a", type=_positive_int, required=True, help="up-step size")
    common.add_argument("-b", type=_positive_int, required=True, help="down-step size")
    common.add_argument("--format", choices=("text", "json"), default="text")

    moded = argparse.ArgumentParser(add_help=False)
    moded.add_argument(
        "--mode",
        choices=("strict", "modm"),
        help="legality rule (default: strict if gcd(a,b)=1, else modm)",
    )

    guarded = argparse.ArgumentParser(add_help=False)
    guarded.add_argument(
        "--guard-override",
        action="store_true",
        help=f"allow brute force beyond word length {enumeration.DEFAULT_GUARD}",
    )

    parser = argparse.ArgumentParser(
        prog="cylpaths",
        description="Legal zero-sum words over {+a,-b}, cylinder cycles, weight functions and lap sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common, moded], help="closed-form count of legal words")
    p.add_argument("-n", type=_nonnegative_int, required=True)

    p = sub.add_parser("enumerate", parents=[common, moded, guarded], help="list legal words by brute force")
    p.add_argument("-n", type=_nonnegative_int, required=True)

    p = sub.add_parser("check", parents=[common, moded], help="test a word for illegal subwords")
    p.add_argument("--word", required=True, help='e.g. "+3-2-2+3-2"')

    p = sub.add_parser("convert", parents=[common], help="convert between representations (reads stdin)")
    p.add_argument("--from", dest="source", choices=FORMATS, required=True)
    p.add_argument("--to", dest="target", choices=FORMATS, required=True)

    p = sub.add_parser("rank", parents=[common], help="rank of a legal word")
    p.add_argument("--word", required=True)

    p = sub.add_parser("unrank", parents=[common], help="legal word with a given rank")
    p.add_argument("-n", type=_nonnegative_int, required=True)
    p.add_argument("--rank", type=int, required=True)

    p = sub.add_parser("sample", parents=[common], help="uniformly random legal words")
    p.add_argument("-n", type=_nonnegative_int, required=True)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--count", type=_nonnegative_int, default=1)

    p = sub.add_parser("verify", parents=[common, moded, guarded], help="brute force vs formula vs bijections")
    p.add_argument("--n-max", type=_nonnegative_int, required=True)

    return parser


def _glue_word_values(argv):
    # a word such as "-2+3" would otherwise be taken for an option
    out = []
    it = iter(argv)
    for arg in it:
        if arg == "--word":
            value = next(it, None)
            out.append(arg if value is None else f"--word={value}")
        else:
            out.append(arg)
    return out


def _mode(args, params, err):
    mode = LegalityMode(args.mode) if args.mode else params.default_mode()
    reason = "given" if args.mode else f"default for gcd(a,b)={params.gcd}"
    print(f"mode: {mode.value} ({reason})", file=err)
    return mode


def _emit(out, args, text, payload):
    if args.format == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text)


def _header(params, **extra):
    return {"a": params.a, "b": params.b, **extra}


def cmd_count(args, params, out, err):
    mode = _mode(args, params, err)
    value = enumeration.count_formula(params, args.n, mode)
    _emit(out, args, f"{value}\n", _header(params, n=args.n, mode=mode.value, count=value))
    return EXIT_OK


def cmd_enumerate(args, params, out, err):
    mode = _mode(args, params, err)
    found = enumeration.brute_force_legal_words(params, args.n, mode, override=args.guard_override)
    texts = [words.format_word(w) for w in found]
    _emit(out, args, "".join(t + "\n" for t in texts), _header(params, n=args.n, mode=mode.value, words=texts))
    return EXIT_OK


def cmd_check(args, params, out, err):
    mode = _mode(args, params, err)
    word = words.parse_word(params, args.word)
    spans = words.find_illegal_subwords(word, mode)
    legal = words.is_legal(word, mode)
    if legal != (not spans):
        raise InternalInvariantViolation("linear-time legality check disagrees with the subword scan")
    text = ("legal\n" if legal else "illegal\n") + "".join(f"({i},{j})\n" for i, j in spans)
    payload = _header(
        params,
        mode=mode.value,
        word=words.format_word(word),
        zero_sum=words.is_zero_sum(word),
        legal=legal,
        illegal_subwords=[list(s) for s in spans],
    )
    _emit(out, args, text, payload)
    return EXIT_OK if legal else EXIT_FAIL


def _read_any(params, kind, text):
    if kind == "word":
        return words.parse_word(params, text.strip())
    if kind == "cycle":
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected exactly one cycle line, got {len(lines)}")
        return cylinder.parse_cycle(params, lines[0])
    if kind == "weights":
        return weights.parse_weights(params, text)
    return bijections.parse_laps(params, text)


def _to_weights(kind, obj):
    if kind == "word":
        return bijections.path_to_weights(words.word_to_cycle(obj))
    if kind == "cycle":
        return bijections.path_to_weights(obj)
    if kind == "weights":
        if not weights.is_balanced(obj):
            raise NotBalanced("weight function is not balanced")
        if not weights.is_origin_connected(obj):
            raise NotOriginConnected("weight function is not origin-connected")
        return obj
    return bijections.laps_to_weights(obj)


def _from_weights(kind, wf):
    if kind == "weights":
        return wf
    if kind == "laps":
        return bijections.weights_to_laps(wf)
    cycle = bijections.weights_to_path(wf)
    return words.cycle_to_word(cycle) if kind == "word" else cycle


def _render(kind, obj):
    """Text form and JSON form of a representation."""
    if kind == "word":
        text = words.format_word(obj)
        return text + "\n", text
    if kind == "cycle":
        text = cylinder.format_cycle(obj)
        return text + "\n", {"start": list(obj.start), "dirs": obj.dirs}
    if kind == "weights":
        return weights.format_weights(obj), [list(row) for row in weights.sorted_items(obj)]
    return bijections.format_laps(obj), list(obj.laps)


def cmd_convert(args, params, out, err):
    obj = _read_any(params, args.source, sys.stdin.read() if args.stdin is None else args.stdin)
    if {args.source, args.target} <= {"word", "cycle"}:
        # direct translation, no legality required
        if args.source == "word":
            obj = words.word_to_cycle(obj)
        result = words.cycle_to_word(obj) if args.target == "word" else obj
    else:
        result = _from_weights(args.target, _to_weights(args.source, obj))
    text, data = _render(args.target, result)
    _emit(out, args, text, _header(params, **{"from": args.source, "to": args.target, "value": data}))
    return EXIT_OK


def cmd_rank(args, params, out, err):
    word = words.parse_word(params, args.word)
    value = enumeration.rank_word(word)
    _emit(out, args, f"{value}\n", _header(params, word=words.format_word(word), rank=value))
    return EXIT_OK


def cmd_unrank(args, params, out, err):
    word = enumeration.unrank_word(params, args.n, args.rank)
    text = words.format_word(word)
    _emit(out, args, text + "\n", _header(params, n=args.n, rank=args.rank, word=text))
    return EXIT_OK


def cmd_sample(args, params, out, err):
    texts = [words.format_word(w) for w in enumeration.sample_words(params, args.n, args.seed, args.count)]
    _emit(out, args, "".join(t + "\n" for t in texts), _header(params, n=args.n, seed=args.seed, words=texts))
    return EXIT_OK


def _yes(flag):
    return "-" if flag is None else ("yes" if flag else "no")


def cmd_verify(args, params, out, err):
    mode = _mode(args, params, err)
    reports = enumeration.verify(params, args.n_max, mode, override=args.guard_override)
    rows = [("n", "formula", "brute", "agree", "bijection", "roundtrips", "result")]
    for r in reports:
        rows.append(
            (str(r.n), str(r.formula_count), str(r.brute_count), _yes(r.agree), _yes(r.bijection_ok),
             _yes(r.roundtrips_ok), "PASS" if r.passed else "FAIL")
        )
    widths = [max(len(row[k]) for row in rows) for k in range(len(rows[0]))]
    text = "".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in rows)
    for r in reports:
        for problem in r.problems:
            print(f"n={r.n}: {problem}", file=err)
    payload = _header(
        params,
        mode=mode.value,
        reports=[
            {
                "n": r.n,
                "formula_count": r.formula_count,
                "brute_count": r.brute_count,
                "agree": r.agree,
                "bijection_ok": r.bijection_ok,
                "roundtrips_ok": r.roundtrips_ok,
                "passed": r.passed,
                "problems": r.problems,
            }
            for r in reports
        ],
    )
    _emit(out, args, text, payload)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "check": cmd_check,
    "convert": cmd_convert,
    "rank": cmd_rank,
    "unrank": cmd_unrank,
    "sample": cmd_sample,
    "verify": cmd_verify,
}


def main(argv=None, stdin=None, out=None, err=None):
    """Run the CLI; returns the exit code. ``stdin`` overrides standard input
    for ``convert``."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = _glue_word_values(sys.argv[1:] if argv is None else list(argv))
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    args.stdin = stdin
    params = Params(args.a, args.b)
    try:
        return COMMANDS[args.command](args, params, out, err)
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SizeGuardExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_GUARD
    except InternalInvariantViolation as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_INTERNAL
    except (PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
