"""
Command-line front end.

Exit status: 0 for success or a positive answer, 1 for a negative
mathematical answer, 2 for usage errors, 3 for internal errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import dagger, equivalence, freegroup, geometry, render, tower, words
from .garside import garside_normal_form

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _word(text: str) -> words.BraidWord:
    try:
        return words.parse_word(text)
    except ValueError as exc:
        raise UsageError(f"bad braid word {text!r}: {exc}") from exc


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _tower(path: str, horizon: int) -> tower.OmegaBraidTower:
    try:
        t, _ = tower.parse_tower(_read(path))
    except ValueError as exc:
        raise UsageError(f"bad tower file {path}: {exc}") from exc
    if t.max_level is not None and horizon > t.max_level:
        raise UsageError(f"{path} defines levels only up to {t.max_level}, horizon is {horizon}")
    return t


def _dagger(path: str) -> dagger.DaggerAutomorphism:
    try:
        return dagger.parse_dagger(_read(path))
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad dagger file {path}: {exc}") from exc


def cmd_nf(args, out):
    nf = garside_normal_form(_word(args.word))
    print(nf, file=out)
    return EXIT_OK


def cmd_eq(args, out):
    f, g = _word(args.word1), _word(args.word2)
    if f.strands != g.strands:
        raise UsageError(f"strand counts differ: {f.strands} vs {g.strands}")
    same = equivalence.equivalent(f, g)
    print("equivalent" if same else "not equivalent", file=out)
    return EXIT_OK if same else EXIT_NO


def cmd_perm(args, out):
    print(words.underlying_permutation(_word(args.word)), file=out)
    return EXIT_OK


def cmd_expsum(args, out):
    print(words.exponent_sum(_word(args.word)), file=out)
    return EXIT_OK


def cmd_delete(args, out):
    f = _word(args.word)
    if not 0 <= args.strand < f.strands or f.strands == 1:
        raise UsageError(f"cannot delete strand {args.strand} of {f.strands}")
    print(words.delete_strand(f, args.strand), file=out)
    return EXIT_OK


def cmd_tower_check(args, out):
    n = args.horizon
    t = _tower(args.file, n)
    report = tower.validate_coherence(t, n)
    reached = sorted(tower.validate_surjectivity(t, n))
    if report.ok:
        print(f"coherent up to level {n}", file=out)
    for failure in report.failures:
        print(f"fail: {failure}", file=out)
    missing = [k for k in range(n) if k not in reached]
    print(f"endpoints reached up to level {n}: {','.join(map(str, reached))}", file=out)
    if missing:
        print(f"not yet reached below {n}: {','.join(map(str, missing))}", file=out)
    return EXIT_OK if report.ok else EXIT_NO


def cmd_tower_eq(args, out):
    n = args.horizon
    s, t = _tower(args.file1, n), _tower(args.file2, n)
    try:
        diff = tower.first_difference(s, t, n)
    except tower.TowerError as exc:
        print(f"not comparable: {exc}", file=out)
        return EXIT_NO
    if diff is None:
        print(f"equivalent up to level {n}", file=out)
        return EXIT_OK
    print(f"not equivalent: level {diff} differs (checked up to level {n})", file=out)
    return EXIT_NO


def cmd_act(args, out):
    f = _word(args.word)
    try:
        w = freegroup.parse_free(args.free)
        image = freegroup.artin_action(f, w)
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc)) from exc
    print(freegroup.format_free(image) or "1", file=out)
    return EXIT_OK


def cmd_dagger_check(args, out):
    h = _dagger(args.file)
    witness = _word(args.witness) if args.witness else None
    report = dagger.check_dagger(h, witness=witness, max_length=args.max_length)
    print("pass" if report.ok else "fail", file=out)
    for line in report.lines():
        print(line, file=out)
    return EXIT_OK if report.ok else EXIT_NO


def cmd_diagram_check(args, out):
    h_m, h_n = _dagger(args.upper), _dagger(args.lower)
    try:
        ok = dagger.check_diagram(h_m, h_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print("commutes" if ok else "does not commute", file=out)
    return EXIT_OK if ok else EXIT_NO


def cmd_reconstruct(args, out):
    h = _dagger(args.file)
    found = dagger.reconstruct_braid(h, args.max_length)
    if found is None:
        print(f"none within length {args.max_length}", file=out)
        return EXIT_NO
    print(found, file=out)
    return EXIT_OK


def _random_word(rng: random.Random, n: int, length: int) -> words.BraidWord:
    if n < 2:
        return words.BraidWord.identity(n)
    return words.BraidWord(n, tuple((rng.randrange(n - 1), rng.choice((1, -1))) for _ in range(length)))


def cmd_roundtrip(args, out):
    if args.word:
        f = _word(args.word)
        back = geometry.pl_to_word(geometry.word_to_pl(f))
        same = back.is_plain() and equivalence.equivalent(back.word, f)
        print(words.format_word(back.word), file=out)
        print("round trip equivalent" if same else "round trip NOT equivalent", file=out)
        return EXIT_OK if same else EXIT_NO
    rng = random.Random(args.seed)
    good = 0
    for _ in range(args.count):
        f = _random_word(rng, rng.randint(1, 5), rng.randint(0, args.max_length))
        back = geometry.pl_to_word(geometry.word_to_pl(f))
        good += back.is_plain() and equivalence.equivalent(back.word, f)
    print(f"{good}/{args.count} round trips equivalent (seed {args.seed})", file=out)
    return EXIT_OK if good == args.count else EXIT_NO


def cmd_render(args, out):
    src = args.source
    if src.lstrip().startswith("B") and ":" in src:
        b = geometry.word_to_pl(_word(src))
    else:
        try:
            b = geometry.parse_pl(_read(src))
        except ValueError as exc:
            raise UsageError(f"bad PL file {src}: {exc}") from exc
    out.write(render.render(b, args.format))
    return EXIT_OK


def cmd_push(args, out):
    f = _word(args.word)
    if not words.is_pure(f):
        raise UsageError("push needs a pure braid")
    print(tower.abelianization_push(f), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omegabraid", description="Finite and infinitary braid computations.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, fn, help_):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.set_defaults(fn=fn)
        return sp

    verb("nf", cmd_nf, "left-greedy Garside normal form").add_argument("word")
    sp = verb("eq", cmd_eq, "decide whether two braid words are equivalent")
    sp.add_argument("word1")
    sp.add_argument("word2")
    verb("perm", cmd_perm, "underlying permutation in cycle notation").add_argument("word")
    verb("expsum", cmd_expsum, "exponent sum").add_argument("word")
    sp = verb("delete", cmd_delete, "delete the strand starting at an index")
    sp.add_argument("word")
    sp.add_argument("--strand", type=int, required=True)
    sp = verb("tower-check", cmd_tower_check, "validate coherence and endpoint coverage of a tower file")
    sp.add_argument("file")
    sp.add_argument("--horizon", type=int, default=8)
    sp = verb("tower-eq", cmd_tower_eq, "compare two tower files level by level")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("--horizon", type=int, default=8)
    sp = verb("act", cmd_act, "Artin action of a braid on a free word")
    sp.add_argument("word")
    sp.add_argument("free")
    sp = verb("dagger-check", cmd_dagger_check, "check the (†) conditions for a DAGGER file")
    sp.add_argument("file")
    sp.add_argument("--witness")
    sp.add_argument("--max-length", type=int, default=12)
    sp = verb("diagram-check", cmd_diagram_check, "check projection compatibility of two DAGGER levels")
    sp.add_argument("upper", help="level m")
    sp.add_argument("lower", help="level n <= m")
    sp = verb("reconstruct", cmd_reconstruct, "search for a braid inducing a DAGGER map")
    sp.add_argument("file")
    sp.add_argument("--max-length", type=int, default=12)
    sp = verb("roundtrip", cmd_roundtrip, "word -> PL geometry -> word round trip")
    sp.add_argument("word", nargs="?")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--max-length", type=int, default=12)
    sp = verb("render", cmd_render, "draw a braid word or PL file")
    sp.add_argument("source")
    sp.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    verb("push", cmd_push, "move a pure braid's exponent sum onto the last two strands").add_argument("word")
    return p


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        sub = parser._subparsers._group_actions[0].choices[args.verb]
        sub.print_usage(sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - every other failure is internal
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
