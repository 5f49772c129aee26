"""Command-line front end.

Exit codes: 0 success, 1 I/O error, 2 internal error, 3 malformed input
file, 4 engine/oracle mismatch (verify, selftest), 5 input over the verification cap.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .builder import rcomp_build, reference_rlbwt
from .errors import MalformedFile, MalformedRlbwt, RcompError
from .fileformat import FLAG_GROUPED, RlbwtFile, parse, serialize
from .graph import BACKENDS, MIN_ALPHA
from .text import invert_rlbwt

EXIT_OK, EXIT_IO, EXIT_INTERNAL, EXIT_MALFORMED, EXIT_MISMATCH, EXIT_TOO_BIG = range(6)
DEFAULT_VERIFY_CAP = 1 << 20


class CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from exc


def _write(path: str, data: bytes) -> None:
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {path}: {exc.strerror or exc}") from exc


def _load(path: str) -> RlbwtFile:
    try:
        return parse(_read(path))
    except MalformedFile as exc:
        raise CliError(EXIT_MALFORMED, f"{path}: {exc}") from exc


def cmd_build(args: argparse.Namespace) -> int:
    data = _read(args.input)
    start = time.perf_counter()
    try:
        rlbwt, stats = rcomp_build(data, alpha=args.alpha, backend=args.backend,
                                   validate_steps=args.validate_steps)
    except RcompError as exc:
        raise CliError(EXIT_INTERNAL, f"build failed: {exc}") from exc
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    flags = FLAG_GROUPED if args.backend == "grouped" else 0
    _write(args.output, serialize(RlbwtFile(rlbwt, stats.n, stats.alpha, flags)))
    print(f"{stats.n} {stats.r} {stats.k} {stats.k_slow} {stats.k_fast} "
          f"{stats.k_split} {stats.alpha} {args.backend} {elapsed_ms:.1f}")
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    doc = _load(args.input)
    try:
        data = invert_rlbwt(doc.rlbwt)
    except MalformedRlbwt as exc:
        raise CliError(EXIT_MALFORMED, f"{args.input}: {exc}") from exc
    _write(args.output, data)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    data = _read(args.input)
    if len(data) > args.max_bytes:
        raise CliError(EXIT_TOO_BIG, f"{len(data)} bytes exceeds --max-bytes={args.max_bytes}")
    try:
        got, stats = rcomp_build(data, alpha=args.alpha)
    except RcompError as exc:
        raise CliError(EXIT_INTERNAL, f"build failed: {exc}") from exc
    want = reference_rlbwt(data)
    if got != want:
        got_pairs, want_pairs = got.pairs(), want.pairs()
        idx = next((i for i, (a, b) in enumerate(zip(got_pairs, want_pairs)) if a != b),
                   min(len(got_pairs), len(want_pairs)))
        print(f"MISMATCH at run {idx}: engine={got_pairs[idx:idx + 1]} "
              f"oracle={want_pairs[idx:idx + 1]} (engine r={got.r}, oracle r={want.r})")
        return EXIT_MISMATCH
    print(f"OK n={stats.n} r={stats.r}")
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    doc = _load(args.input)
    r = doc.rlbwt.r
    sigma = len({run.symbol for run in doc.rlbwt.runs if run.symbol != 0})
    ratio = doc.n / r
    print(f"n={doc.n} r={r} n/r={ratio:.2f} sigma={sigma}")
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    golden = "ab$bbabbbaaa"
    got, _ = rcomp_build(b"aabbabbabba")
    text = "".join("$" if s == 0 else chr(s - 1) for s in got.expand())
    failures = 0 if text == golden else 1
    rng = random.Random(args.seed)
    for _ in range(args.count):
        sigma = rng.choice((1, 2, 4, 16, 256))
        data = bytes(rng.randrange(sigma) for _ in range(rng.randint(1, 256)))
        rlbwt, _ = rcomp_build(data, backend=rng.choice(BACKENDS))
        if rlbwt != reference_rlbwt(data) or invert_rlbwt(rlbwt) != data:
            failures += 1
    if failures:
        print(f"FAIL {failures} of {args.count + 1} checks")
        return EXIT_MISMATCH
    print(f"OK {args.count + 1} checks")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rcomp", description="Online RLBWT construction.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the RLBWT of a file")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--alpha", type=int, default=MIN_ALPHA)
    p.add_argument("--backend", choices=BACKENDS, default="plain")
    p.add_argument("--validate-steps", action="store_true",
                   help="check every intermediate graph against the oracle (slow)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("decode", help="recover the original bytes")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="compare the engine with the brute-force oracle")
    p.add_argument("input")
    p.add_argument("--max-bytes", type=int, default=DEFAULT_VERIFY_CAP)
    p.add_argument("--alpha", type=int, default=MIN_ALPHA)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="print n, r, n/r and alphabet size of an RLBWT file")
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("selftest", help="run the golden example and random oracle checks")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"rcomp: {exc}", file=sys.stderr)
        return exc.code
    except (RcompError, AssertionError) as exc:
        print(f"rcomp: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
