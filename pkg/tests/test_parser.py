"""Parser and pretty-printer: grammar coverage, errors, round-tripping."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from elpsolve.core import (
    ObjLiteral,
    SubjLiteral,
    make_program,
    make_rule,
    program_to_text,
    user_atom,
)
from elpsolve.errors import ParseError
from elpsolve.parser import Severity, parse_program, parse_program_with_warnings

from corpus import CURATED_TEXTS, curated_programs, random_elp, random_inner_elp


a, b = user_atom("a"), user_atom("b")


def test_single_knowledge_rule():
    program = parse_program("b :- K a.")
    assert program == make_program(
        [make_rule((b,), (SubjLiteral(ObjLiteral(a)),))]
    )


def test_nested_negation_literal():
    program = parse_program("a :- not K not a.")
    assert program.rules[0].body == (SubjLiteral(ObjLiteral(a, 1), 1),)


def test_reserved_prefix_is_an_error():
    with pytest.raises(ParseError) as exc:
        parse_program("k_x :- a.")
    assert "reserved prefix" in str(exc.value)


def test_choice_head_width_error():
    with pytest.raises(ParseError) as exc:
        parse_program("{a, b}.")
    assert "single atom" in str(exc.value)


def test_error_positions():
    with pytest.raises(ParseError) as exc:
        parse_program("a :- b.\nc :- K .\n")
    diag = exc.value.diagnostics[0]
    assert (diag.line, diag.column) == (2, 8)


def test_multiple_errors_reported():
    with pytest.raises(ParseError) as exc:
        parse_program("a :- .\nb :- K .\n")
    assert len(exc.value.diagnostics) == 2


def test_duplicate_rule_warning():
    program, warnings = parse_program_with_warnings("a :- b.\na :- b.\n")
    assert len(program.rules) == 2
    assert [w.severity for w in warnings] == [Severity.WARNING]
    assert warnings[0].line == 2


def test_comments_and_separators():
    program = parse_program("% a comment\na | b. % trailing\nc ; d :- a.\n")
    assert [r.head for r in program.rules] == [
        (a, b),
        (user_atom("c"), user_atom("d")),
    ]


def test_constraint_forms_agree():
    assert parse_program(":- a.") == parse_program("#false :- a.")


def test_empty_body_constraint_prints_as_false():
    program = parse_program("#false.")
    assert program_to_text(program) == "#false.\n"
    assert parse_program(program_to_text(program)) == program


def test_term_tuple_atoms_verbatim():
    program = parse_program("d(1,x) :- K d(2).")
    assert sorted(atom.symbol for atom in program.rules[0].head) == ["d(1,x)"]
    assert program_to_text(program) == "d(1,x) :- K d(2).\n"


def test_upper_case_identifier_rejected():
    with pytest.raises(ParseError):
        parse_program("a :- Kb.")
    with pytest.raises(ParseError):
        parse_program("a :- X.")


def test_triple_not_rejected():
    with pytest.raises(ParseError):
        parse_program("a :- not not not b.")


def test_constants_fold_at_parse_time():
    assert parse_program("a :- #true, b.") == parse_program("a :- b.")
    assert parse_program("a :- K #false.") == make_program(())


def test_curated_round_trip():
    for text in CURATED_TEXTS:
        program = parse_program(text)
        assert parse_program(program_to_text(program)) == program


@given(st.integers(0, 10**9))
@settings(max_examples=150, deadline=None)
def test_random_round_trip(seed):
    rng = random.Random(seed)
    program = random_elp(rng) if seed % 2 else random_inner_elp(rng)
    assert parse_program(program_to_text(program)) == program


def test_parse_is_deterministic():
    text = "".join(CURATED_TEXTS)
    assert parse_program(text) == parse_program(text)
