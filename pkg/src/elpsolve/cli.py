"""Command-line driver.

Reads a program file (or generates a family instance), normalizes it, runs
the generate-and-test search, and prints the worldviews found.  Worldviews
are reported over the user's own atoms: witness atoms introduced by
normalization are projected away.

Exit status: 0 when at least one worldview is found (or all worldviews were
requested), 1 when there is none, 2 on input errors.
"""

from __future__ import annotations

import argparse
import sys

from .core import (
    AtomKind,
    Program,
    atoms_of,
    fold_constants,
    format_belief,
    interp_sort_key,
    program_to_text,
)
from .errors import ElpError, ParseError
from .family import propagation_family
from .normalform import normalize, restrict_worldview
from .oracle import DEFAULT_BUDGET, enumerate_worldviews
from .parser import parse_program_with_warnings
from .solver import SolveStats, SolverConfig, WorldviewResult, solve
from .transform import GeneratorKind, TransformBundle

_MAX_PRINTED_INTERPRETATIONS = 64


def _build_arg_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="elpsolve",
        description="Solve ground epistemic logic programs by generate-and-test.",
    )
    p.add_argument("file", nargs="?", help="program file (omit with --gen-family/--report)")
    p.add_argument(
        "--gen-family",
        type=int,
        metavar="N",
        help="solve the built-in propagation family instance of size N",
    )
    p.add_argument(
        "--generator",
        choices=["t0", "g0", "g1"],
        default="g1",
        help="generator program tier (default: g1, with epistemic propagation)",
    )
    p.add_argument(
        "--models",
        type=int,
        default=1,
        metavar="N",
        help="number of worldviews to compute, 0 for all (default: 1)",
    )
    p.add_argument("--stats", action="store_true", help="print search statistics")
    p.add_argument(
        "--verify",
        action="store_true",
        help="cross-check against the brute-force oracle (needs <= 4 user atoms) "
        "and validate every skipped tester check",
    )
    p.add_argument(
        "--emit",
        choices=["t0", "g0", "g1", "nf"],
        help="print a companion program instead of solving",
    )
    p.add_argument("--quiet", action="store_true", help="suppress worldview listings")
    p.add_argument(
        "--report",
        metavar="DIR",
        help="run the generator-comparison experiment on the propagation family "
        "and write CSV plus figures into DIR",
    )
    p.add_argument(
        "--report-max-n",
        type=int,
        default=10,
        metavar="N",
        help="largest family instance for --report (default: 10)",
    )
    return p


_GENERATORS = {
    "t0": GeneratorKind.TESTER,
    "g0": GeneratorKind.BASIC,
    "g1": GeneratorKind.PROPAGATING,
}


def _fail(message: str) -> int:
    print(f"elpsolve: error: {message}", file=sys.stderr)
    return 2


def _load_program(args) -> "tuple[Program, int] | Program":
    if args.gen_family is not None:
        if args.gen_family < 1:
            raise ElpError("--gen-family requires N >= 1")
        return propagation_family(args.gen_family)
    try:
        with open(args.file, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ElpError(str(exc)) from None
    program, warnings = parse_program_with_warnings(text)
    for diag in warnings:
        print(f"{args.file}:{diag}", file=sys.stderr)
    return program


def _user_atoms(program: Program) -> frozenset:
    return frozenset(a for a in atoms_of(program) if a.kind is AtomKind.USER)


def _signature_name(k) -> str:
    """Render a guess atom as the user-level subjective atom it stands for."""
    base = k.base
    if base.kind is AtomKind.NOT_WITNESS:
        return f"not {base.base.symbol}"
    if base.kind is AtomKind.NOTNOT_WITNESS:
        return f"not not {base.base.symbol}"
    return base.symbol


def _print_worldview(i: int, wv: WorldviewResult, user_atoms) -> None:
    signature = sorted(_signature_name(k) for k in wv.signature)
    belief = restrict_worldview(wv.belief_set, user_atoms)
    print(f"Worldview {i}:")
    print("  K: { " + ", ".join(signature) + " }" if signature else "  K: { }")
    if len(belief) <= _MAX_PRINTED_INTERPRETATIONS:
        print("  Belief set: " + format_belief(belief))
    else:
        print(f"  Belief set: {len(belief)} interpretations (elided)")


def _run_verify(original: Program, results, requested: int, quiet: bool) -> None:
    atoms = atoms_of(original)
    if len(atoms) > DEFAULT_BUDGET.max_atoms:
        print(
            "verify: oracle comparison skipped "
            f"({len(atoms)} atoms exceed the budget of {DEFAULT_BUDGET.max_atoms})",
            file=sys.stderr,
        )
        return
    user_atoms = _user_atoms(original)
    expected = {
        restrict_worldview(frozenset(wv), user_atoms)
        for wv in enumerate_worldviews(original)
    }
    got = {restrict_worldview(r.belief_set, user_atoms) for r in results}
    if requested == 0:
        agrees = got == expected
    else:
        agrees = got <= expected and len(got) == min(requested, len(expected))
    if not agrees:
        raise ElpError(
            "verification failed: solver found "
            f"{len(got)} worldview(s), oracle found {len(expected)}"
        )
    if not quiet:
        print(f"verify: ok ({len(got)} worldviews agree with the oracle)")


def main(argv=None) -> int:
    args = _build_arg_parser().parse_args(argv)
    if args.report is not None:
        from .report import write_family_report

        try:
            paths = write_family_report(args.report, max_n=args.report_max_n)
        except (ElpError, OSError, ValueError) as exc:
            return _fail(str(exc))
        if not args.quiet:
            for path in paths:
                print(f"wrote {path}")
        return 0
    if (args.file is None) == (args.gen_family is None):
        return _fail("give exactly one of FILE or --gen-family N")
    if args.models < 0:
        return _fail("--models takes a non-negative count")

    try:
        original = _load_program(args)
    except ParseError as exc:
        where = args.file or "<family>"
        for diag in exc.diagnostics:
            print(f"{where}:{diag}", file=sys.stderr)
        return 2
    except ElpError as exc:
        return _fail(str(exc))

    folded = fold_constants(original)
    normal = normalize(folded).program
    if args.emit == "nf":
        print(program_to_text(normal), end="")
        return 0
    if args.emit is not None:
        bundle = TransformBundle.build(normal)
        print(program_to_text(bundle.generator(_GENERATORS[args.emit])), end="")
        return 0

    config = SolverConfig(
        generator=_GENERATORS[args.generator],
        max_worldviews=None if args.models == 0 else args.models,
        verify_skips=args.verify,
    )
    try:
        results, stats = solve(normal, config)
        if args.verify:
            _run_verify(folded, results, args.models, args.quiet)
    except ElpError as exc:
        return _fail(str(exc))

    user_atoms = _user_atoms(folded)
    if not args.quiet:
        for i, wv in enumerate(results, start=1):
            _print_worldview(i, wv, user_atoms)
    if results:
        print(f"SATISFIABLE ({len(results)} worldviews)")
    else:
        print("UNSATISFIABLE")
    if args.stats:
        print(
            f"candidates={stats.candidates} tests={stats.tests_run} "
            f"skipped={stats.tests_skipped} worldviews={stats.worldviews}"
        )
    if results or args.models == 0:
        return 0
    return 1


if __name__ == "__main__":
    raise SystemExit(main())
