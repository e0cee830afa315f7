"""Worldview search: tester checks, skip checks, the full loop."""

import random

import pytest

from elpsolve.core import atoms_of, k_atom, kp_atom, user_atom
from elpsolve.errors import GeneratorMismatchError, NotNormalFormError
from elpsolve.family import propagation_family
from elpsolve.normalform import normalize
from elpsolve.oracle import enumerate_worldviews
from elpsolve.parser import parse_program
from elpsolve.solver import SolverConfig, build_worldview, skip_check, solve
from elpsolve.solver import test_candidate as candidate_check
from elpsolve.stable import enumerate_stable_models
from elpsolve.transform import GeneratorKind, TransformBundle, k_signature

from corpus import curated_programs, random_elp


a, b = user_atom("a"), user_atom("b")


def beliefs(results):
    return [
        sorted(sorted(x.symbol for x in i) for i in r.belief_set) for r in results
    ]


def test_candidate_check_program_one():
    bundle = TransformBundle.build(parse_program("b :- K a."))
    assert candidate_check(bundle.tester, frozenset(), bundle.k_universe)
    assert not candidate_check(
        bundle.tester, frozenset({b, k_atom(a)}), bundle.k_universe
    )


def test_candidate_check_self_support():
    bundle = TransformBundle.build(parse_program("a :- K a."))
    assert candidate_check(bundle.tester, frozenset({a, k_atom(a)}), bundle.k_universe)
    assert candidate_check(bundle.tester, frozenset(), bundle.k_universe)


def test_candidate_check_negative_self_support():
    bundle = TransformBundle.build(parse_program("a :- not K a."))
    for m in enumerate_stable_models(bundle.tester):
        if k_atom(a) in m:
            assert not candidate_check(bundle.tester, m, bundle.k_universe)


def test_skip_check_family_survivor():
    family = propagation_family(1)
    bundle = TransformBundle.build(family)
    (survivor,) = enumerate_stable_models(bundle.propagating_generator)
    assert skip_check(survivor, bundle.k_universe)


def test_skip_check_vacuous_and_failing():
    assert skip_check(frozenset(), ())
    universe = (k_atom(a),)
    assert not skip_check(frozenset({k_atom(a)}), universe)
    assert skip_check(frozenset({k_atom(a), kp_atom(a)}), universe)


def test_skip_check_generator_mismatch():
    with pytest.raises(GeneratorMismatchError):
        skip_check(frozenset(), (), generator=GeneratorKind.BASIC)
    with pytest.raises(GeneratorMismatchError):
        skip_check(frozenset(), (), generator=GeneratorKind.TESTER)


def test_build_worldview_program_one():
    bundle = TransformBundle.build(parse_program("b :- K a."))
    result = build_worldview(bundle, frozenset())
    assert result.belief_set == frozenset({frozenset()})
    assert result.signature == frozenset()


def test_build_worldview_self_support():
    bundle = TransformBundle.build(parse_program("a :- K a."))
    result = build_worldview(bundle, frozenset({a, k_atom(a)}))
    assert result.belief_set == frozenset({frozenset({a})})


def test_build_worldview_family():
    family = propagation_family(2)
    bundle = TransformBundle.build(family)
    (survivor,) = enumerate_stable_models(bundle.propagating_generator)
    result = build_worldview(bundle, survivor)
    user = frozenset(x for x in atoms_of(family) if x.kind.value == "user")
    projected = frozenset(i & user for i in result.belief_set)
    assert projected == frozenset({frozenset()})


def test_solve_program_one():
    results, stats = solve(
        parse_program("b :- K a."), SolverConfig(generator=GeneratorKind.BASIC)
    )
    assert beliefs(results) == [[[]]]
    assert results[0].signature == frozenset()
    assert stats.worldviews == 1


def test_solve_requires_normal_form():
    with pytest.raises(NotNormalFormError):
        solve(parse_program("a :- K not a."))


def test_solve_family_stats_basic():
    results, stats = solve(
        propagation_family(3), SolverConfig(generator=GeneratorKind.BASIC)
    )
    assert stats.candidates == 8
    assert stats.tests_run == 8
    assert stats.tests_skipped == 0
    assert stats.worldviews == 1


def test_solve_family_stats_propagating():
    results, stats = solve(
        propagation_family(3), SolverConfig(generator=GeneratorKind.PROPAGATING)
    )
    assert stats.candidates == 1
    assert stats.tests_skipped == 1
    assert stats.tests_run == 0
    assert stats.worldviews == 1


def test_solve_matches_oracle_all_generators():
    rng = random.Random(61)
    programs = curated_programs() + [random_elp(rng) for _ in range(60)]
    for program in programs:
        normal = normalize(program).program
        expected = {frozenset(w) for w in enumerate_worldviews(normal)}
        for kind in GeneratorKind:
            results, stats = solve(normal, SolverConfig(generator=kind))
            assert {r.belief_set for r in results} == expected
            assert stats.tests_run + stats.tests_skipped == stats.candidates


def test_skip_soundness_verification_mode():
    rng = random.Random(67)
    programs = curated_programs() + [random_elp(rng) for _ in range(40)]
    for program in programs:
        normal = normalize(program).program
        solve(
            normal,
            SolverConfig(generator=GeneratorKind.PROPAGATING, verify_skips=True),
        )


def test_dedup_equal_signatures_equal_beliefs():
    """Distinct candidates sharing a signature make one worldview."""
    program = parse_program("a | b. c :- K c.")
    bundle = TransformBundle.build(program)
    by_signature = {}
    for m in enumerate_stable_models(bundle.basic_generator):
        if not candidate_check(bundle.tester, m, bundle.k_universe):
            continue
        sig = k_signature(m, bundle.k_universe)
        wv = build_worldview(bundle, m).belief_set
        by_signature.setdefault(sig, set()).add(wv)
    assert by_signature
    for wvs in by_signature.values():
        assert len(wvs) == 1
    results, stats = solve(program, SolverConfig(generator=GeneratorKind.BASIC))
    assert stats.candidates > stats.worldviews == len(by_signature)


def test_budget_returns_prefix():
    rng = random.Random(71)
    checked = 0
    for program in curated_programs() + [random_elp(rng) for _ in range(30)]:
        normal = normalize(program).program
        unbounded, _ = solve(normal, SolverConfig(generator=GeneratorKind.BASIC))
        if len(unbounded) < 2:
            continue
        checked += 1
        for k in range(1, len(unbounded)):
            bounded, _ = solve(
                normal,
                SolverConfig(generator=GeneratorKind.BASIC, max_worldviews=k),
            )
            assert [r.belief_set for r in bounded] == [
                r.belief_set for r in unbounded[:k]
            ]
    assert checked >= 3


def test_candidate_dominance_across_generators():
    rng = random.Random(73)
    for program in curated_programs() + [random_elp(rng) for _ in range(30)]:
        normal = normalize(program).program
        counts = {}
        for kind in GeneratorKind:
            _, stats = solve(normal, SolverConfig(generator=kind))
            counts[kind] = stats.candidates
        assert (
            counts[GeneratorKind.PROPAGATING]
            <= counts[GeneratorKind.BASIC]
            <= counts[GeneratorKind.TESTER]
        )
