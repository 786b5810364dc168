"""Command-line entry point.

Exit codes: 0 success, 2 parse error, 3 invalid element, 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import __version__
from . import polynomials as P
from .errors import (
    DimensionError,
    InvalidElementError,
    InvalidRankError,
    NotARootError,
    NotQuadraticEssentialError,
    ParseError,
    WeylError,
)
from .example7 import WORKED_TEXT, run_checks
from .parsing import ParsedElement, parse_element, parse_file
from .quadratic import decompose_quadratic, orbit_data
from .realizability import analyze
from .report import dumps, render_text, report_to_json
from .spectral import cyclotomic_split
from .weyl import char_poly, coxeter_element, length

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_INTERNAL = 4


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, (InvalidElementError, InvalidRankError, DimensionError, NotARootError,
                        NotQuadraticEssentialError)):
        return EXIT_INVALID
    return EXIT_INTERNAL


def _read_element(args) -> ParsedElement:
    if getattr(args, "file", None):
        return parse_file(args.file, args.n)
    if not args.element:
        raise ParseError("no element given (pass ELEMENT or --file)")
    return parse_element(args.element, args.n)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _analyze_one(parsed: ParsedElement, as_json: bool, timing: bool = False) -> str:
    start = time.perf_counter()
    report = analyze(parsed.element)
    elapsed = time.perf_counter() - start
    if as_json:
        doc = report_to_json(report, parsed.echo())
        if timing:
            doc["timing_seconds"] = round(elapsed, 6)
        return dumps(doc)
    text = render_text(report, parsed.text)
    if timing:
        text += f"\nelapsed: {elapsed:.3f} s"
    return text


def _batch_line(job: Tuple[int, str, Optional[int], bool]) -> Tuple[int, str, int]:
    lineno, line, n, as_json = job
    try:
        return lineno, _analyze_one(parse_element(line, n), as_json), EXIT_OK
    except ParseError as exc:
        exc = ParseError(str(exc), lineno, 1)
        return lineno, f"error: {exc}", EXIT_PARSE
    except WeylError as exc:
        return lineno, f"error (line {lineno}): {exc}", exit_code_for(exc)


def cmd_analyze(args) -> int:
    if args.batch:
        lines = Path(args.batch).read_text(encoding="utf-8").splitlines()
        jobs = [(k + 1, ln, args.n, args.json) for k, ln in enumerate(lines)
                if ln.strip() and not ln.lstrip().startswith("#")]
        if args.workers > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                results = list(pool.map(_batch_line, jobs))
        else:
            results = [_batch_line(j) for j in jobs]
        _emit(args, "\n".join(r[1] for r in results))
        return max((r[2] for r in results), default=EXIT_OK)
    parsed = _read_element(args)
    _emit(args, _analyze_one(parsed, args.json, args.timing))
    return EXIT_OK


def cmd_length(args) -> int:
    parsed = _read_element(args)
    k, word = length(parsed.element)
    print(f"length {k}")
    print("word " + (" ".join(f"s{i}" for i in word) if word else "(identity)"))
    return EXIT_OK


def cmd_charpoly(args) -> int:
    parsed = _read_element(args)
    cp = char_poly(parsed.element)
    split = cyclotomic_split(cp)
    print(f"char_poly {P.to_string(cp)}")
    print(f"coefficients {list(cp)}")
    print(f"salem_factor {P.to_string(split.salem_part)}")
    print("cyclotomic " + (", ".join(f"Phi_{k}^{m}" for k, m in split.factors) or "none"))
    print(f"verified {split.verified}")
    return EXIT_OK


def cmd_orbit_data(args) -> int:
    parsed = _read_element(args)
    dec = decompose_quadratic(parsed.element)
    if dec is None:
        raise InvalidElementError("element is not of the form cremona o permutation")
    od = orbit_data(parsed.element, dec)
    primes = ", ".join(f"{l}'={p}" for l, p in sorted(dec.primes.items()))
    print(f"triple {list(dec.triple)}  primes {primes}")
    print("lengths " + ", ".join(f"n_{l}={od.lengths[l]}" for l in od.triple))
    print("sigma " + ", ".join(f"{l}->{od.sigma[l]}" for l in od.triple) + f" ({od.sigma_kind()})")
    return EXIT_OK


def cmd_coxeter(args) -> int:
    parsed = parse_element(" ".join(f"s{i}" for i in range(args.n)), args.n)
    _emit(args, _analyze_one(parsed, args.json, args.timing))
    return EXIT_OK


def cmd_example7(args) -> int:
    start = time.perf_counter()
    parsed = parse_element(WORKED_TEXT)
    report = analyze(parsed.element)
    checks = run_checks(report)
    if args.json:
        doc = report_to_json(report, parsed.echo())
        doc["checks"] = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
        print(dumps(doc))
    else:
        print(render_text(report, WORKED_TEXT))
        print()
        for c in checks:
            print(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
        print(f"elapsed: {time.perf_counter() - start:.3f} s")
    return EXIT_OK if all(c.passed for c in checks) else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylreal", description="Analyze Weyl group elements of Z^{1,n}.")
    parser.add_argument("--version", action="version", version=f"weylreal {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def element_args(p, with_out: bool = False) -> None:
        p.add_argument("element", nargs="?", help="word 's0 s1 ...', quadratic spec or JSON")
        p.add_argument("--n", type=int, help="rank for word inputs")
        p.add_argument("--file", help="read the element from a file (JSON or text)")
        if with_out:
            p.add_argument("--json", action="store_true", help="machine-readable output")
            p.add_argument("--out", help="write the report to this path")
            p.add_argument("--timing", action="store_true", help="include elapsed time")

    p = sub.add_parser("analyze", help="full realizability report")
    element_args(p, with_out=True)
    p.add_argument("--batch", help="file with one element per line")
    p.add_argument("--workers", type=int, default=1, help="worker processes for --batch")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("length", help="Coxeter length and a reduced word")
    element_args(p)
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("charpoly", help="characteristic polynomial and Salem split")
    element_args(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("orbit-data", help="orbit data of a quadratic element")
    element_args(p)
    p.set_defaults(func=cmd_orbit_data)

    p = sub.add_parser("coxeter", help="analyze s0 s1 ... s(n-1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_coxeter)

    p = sub.add_parser("reproduce-example7", help="run the built-in W_13 example and its checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_example7)
    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WeylError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)


def main() -> None:
    sys.exit(run_cli())
