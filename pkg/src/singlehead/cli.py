"""Command-line front end.

    singlehead -f 'a->b' 'abd->c' 'b=d' 'b->c'
    singlehead -t tests/conditiontwo.txt
    singlehead -f 'bx->a' 'b->x' 'a->x' --graph semantic
    singlehead forget -f 'a->b' 'b->c' --vars b [--naive]

Exit codes: 0 success or TEST PASSED, 1 TEST FAILED, 2 usage or parse
error, 3 TEST INCONCLUSIVE.
"""

from __future__ import annotations

import argparse
import enum
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from .forgetting import forget_fast, forget_replace
from .horn import Clause, Formula, HornError, ParseError, format_body, format_clause, parse_clause_spec
from .shmin import ShminOutcome, ShminTraceEntry, shmin, shmin_restarts
from .structure import semantic_graph, syntactic_graph

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


class Verdict(enum.IntEnum):
    # ordered by severity; a file's verdict is the worst of its cases
    PASSED = 0
    INCONCLUSIVE = 1
    FAILED = 2


_EXIT = {Verdict.PASSED: EXIT_OK, Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
         Verdict.FAILED: EXIT_FAILED}


@dataclass(frozen=True)
class TestCase:
    name: str
    expect: bool | None
    clause_specs: tuple[str, ...]
    multi: bool = False

    __test__ = False  # not a pytest class


def build_formula(specs: Sequence[str], multi: bool = False) -> Formula:
    """Expand clause specs; clauses from ``p=q`` specs go first."""
    equivalences: list[Clause] = []
    implications: list[Clause] = []
    for s in specs:
        target = implications if "->" in s else equivalences
        target.extend(parse_clause_spec(s, multi))
    return Formula(equivalences + implications)


def verdict(expect: bool | None, equivalent: bool) -> Verdict:
    if equivalent:
        return Verdict.FAILED if expect is False else Verdict.PASSED
    if expect is False:
        return Verdict.PASSED
    return Verdict.INCONCLUSIVE


def render_entry(e: ShminTraceEntry, multi: bool = False) -> str:
    src = format_clause(e.source, multi)
    if e.skipped:
        return f"{src} | [head already in shmin]"
    order = " ".join(format_body(b, multi) for b in e.order_phase_bodies)
    subset = " ".join(format_body(b, multi) for b in e.subset_phase_bodies)
    return (f"{src} |{' ' + order if order else ''} |{' ' + subset if subset else ''}"
            f" | {format_clause(e.result, multi)}")


def _run_shmin(f: Formula, attempts: int, seed: int) -> ShminOutcome:
    if attempts <= 1:
        return shmin(f)
    return shmin_restarts(f, attempts, seed)


def analyze(title: str, specs: Sequence[str], expect: bool | None = None,
            multi: bool = False, attempts: int = 1, seed: int = 0) -> tuple[list[str], ShminOutcome]:
    f = build_formula(specs, multi)
    outcome = _run_shmin(f, attempts, seed)
    lines = [f"## {title} ##", "formula: " + " ".join(specs)]
    lines += [render_entry(e, multi) for e in outcome.trace]
    lines.append("shmin: " + " ".join(format_clause(c, multi) for c in outcome.formula))
    lines.append(f"shmin equivalent: {outcome.equivalent}")
    lines.append(f"expected result: {expect}")
    return lines, outcome


def run_formula_mode(specs: Sequence[str], multi: bool = False,
                     attempts: int = 1, seed: int = 0) -> tuple[int, str]:
    try:
        lines, _ = analyze("cmdline formula", specs, None, multi, attempts, seed)
    except HornError as e:
        return EXIT_USAGE, f"error: {e}\n"
    return EXIT_OK, "\n".join(lines) + "\n"


_EXPECT = {"true": True, "false": False, "none": None}


def parse_test_file(text: str, multi: bool = False) -> list[TestCase]:
    """Read the test-file format.

    Each case starts with ``name: <text>``, then ``expect: true|false|none``,
    then one clause spec per line.  ``#`` starts a comment; an optional
    ``vars: single|multi`` line before the first case sets the variable mode.
    """
    cases: list[TestCase] = []
    name = None
    expect: bool | None = None
    have_expect = False
    specs: list[str] = []

    def flush():
        if name is None:
            return
        if not have_expect:
            raise ParseError(f"test case {name!r} has no expect line")
        if not specs:
            raise ParseError(f"test case {name!r} has no clauses")
        cases.append(TestCase(name, expect, tuple(specs), multi))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip().lower()
        value = value.strip()
        if sep and key == "name":
            flush()
            name, have_expect, specs = value, False, []
        elif sep and key == "expect":
            if name is None or value.lower() not in _EXPECT:
                raise ParseError(f"line {lineno}: bad expect line {raw!r}")
            expect, have_expect = _EXPECT[value.lower()], True
        elif sep and key == "vars" and name is None:
            if value not in ("single", "multi"):
                raise ParseError(f"line {lineno}: vars must be single or multi")
            multi = value == "multi"
        else:
            if name is None:
                raise ParseError(f"line {lineno}: clause before any 'name:' line")
            parse_clause_spec(line, multi)
            specs.append(line)
    flush()
    if not cases:
        raise ParseError("no test cases")
    return cases


def corpus_names() -> list[str]:
    return sorted(p.name[:-4] for p in resources.files("singlehead.corpus").iterdir()
                  if p.name.endswith(".txt"))


def read_test_source(path: str) -> str:
    """File contents; a bare corpus name like ``chain`` reads the bundled file."""
    p = Path(path)
    if p.is_file():
        return p.read_text()
    bundled = resources.files("singlehead.corpus") / (path + ".txt")
    if bundled.is_file():
        return bundled.read_text()
    raise FileNotFoundError(path)


def run_test_mode(path: str, multi: bool = False, attempts: int = 1, seed: int = 0) -> tuple[int, str]:
    try:
        cases = parse_test_file(read_test_source(path), multi)
    except FileNotFoundError:
        return EXIT_USAGE, f"error: no such test file: {path}\n"
    except HornError as e:
        return EXIT_USAGE, f"error: {path}: {e}\n"
    lines: list[str] = []
    worst = Verdict.PASSED
    for case in cases:
        out, outcome = analyze(case.name, case.clause_specs, case.expect, case.multi, attempts, seed)
        v = verdict(case.expect, outcome.equivalent)
        worst = max(worst, v)
        lines += out
        lines.append(f"verdict: {v.name}")
    lines.append(f"TEST {worst.name}")
    return _EXIT[worst], "\n".join(lines) + "\n"


def parse_var_list(items: Sequence[str], multi: bool = False) -> list[str]:
    out: list[str] = []
    for item in items:
        if "," in item or multi:
            out += [v.strip() for v in item.split(",") if v.strip()]
        else:
            out += list(item)
    return out


def run_forget_mode(specs: Sequence[str], vars: Sequence[str], naive: bool = False,
                    multi: bool = False, attempts: int = 1, seed: int = 0) -> tuple[int, str]:
    try:
        f = build_formula(specs, multi)
        forgotten = parse_var_list(vars, multi)
        if naive:
            result = forget_replace(f, forgotten)
        else:
            result = forget_fast(f, forgotten, attempts, seed)
    except HornError as e:
        return EXIT_USAGE, f"error: {e}\n"
    lines = [
        "## forget ##",
        "formula: " + " ".join(specs),
        "forget: " + " ".join(sorted(set(forgotten))),
        "result: " + " ".join(format_clause(c, multi) for c in result.formula),
        f"branches: {result.branches}",
        f"preprocessed: {result.preprocessed}",
    ]
    return EXIT_OK, "\n".join(lines) + "\n"


def run_graph_mode(specs: Sequence[str], kind: str, multi: bool = False) -> tuple[int, str]:
    try:
        f = build_formula(specs, multi)
        g = syntactic_graph(f) if kind == "syntactic" else semantic_graph(f)
    except HornError as e:
        return EXIT_USAGE, f"error: {e}\n"
    return EXIT_OK, g.to_dot(kind)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="singlehead",
        description="Turn definite Horn formulae into single-head form.")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("-f", "--formula", nargs="+", metavar="CLAUSE",
                      help="clauses such as a->b, ab->cd, b=d")
    mode.add_argument("-t", "--test", metavar="FILE",
                      help="test file, or the name of a bundled corpus file")
    p.add_argument("--graph", choices=("syntactic", "semantic"),
                   help="print the graph of the formula in DOT instead")
    p.add_argument("--vars", dest="var_mode", choices=("single", "multi"), default="single",
                   help="single-character variables or comma-separated identifiers")
    p.add_argument("--attempts", type=int, default=1,
                   help="shmin runs on shuffled clause orders (default 1: given order)")
    p.add_argument("--seed", type=int, default=0)

    sub = p.add_subparsers(dest="command")
    fg = sub.add_parser("forget", help="forget variables from a formula")
    fg.add_argument("-f", "--formula", dest="forget_formula", nargs="+", required=True,
                    metavar="CLAUSE")
    fg.add_argument("--vars", dest="forget_vars", nargs="+", required=True,
                    metavar="VAR", help="variables to forget: bcde, b,c,d,e or b c d e")
    fg.add_argument("--naive", action="store_true", help="skip shmin preprocessing")
    fg.add_argument("--attempts", dest="forget_attempts", type=int, default=None)
    fg.add_argument("--seed", dest="forget_seed", type=int, default=None)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    multi = args.var_mode == "multi"
    if args.attempts < 1:
        parser.print_usage(sys.stderr)
        print("singlehead: error: --attempts must be at least 1", file=sys.stderr)
        return EXIT_USAGE

    if args.command == "forget":
        attempts = args.forget_attempts if args.forget_attempts is not None else args.attempts
        seed = args.forget_seed if args.forget_seed is not None else args.seed
        if attempts < 1:
            print("singlehead: error: --attempts must be at least 1", file=sys.stderr)
            return EXIT_USAGE
        code, text = run_forget_mode(args.forget_formula, args.forget_vars, args.naive,
                                     multi, attempts, seed)
    elif args.formula and args.graph:
        code, text = run_graph_mode(args.formula, args.graph, multi)
    elif args.formula:
        code, text = run_formula_mode(args.formula, multi, args.attempts, args.seed)
    elif args.test:
        code, text = run_test_mode(args.test, multi, args.attempts, args.seed)
    else:
        parser.print_usage(sys.stderr)
        print("singlehead: error: one of -f, -t or forget is required", file=sys.stderr)
        return EXIT_USAGE

    stream = sys.stderr if code == EXIT_USAGE else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
