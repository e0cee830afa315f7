"""The built-in propagation family."""

import pytest

from elpsolve.core import is_normal_form, program_to_text
from elpsolve.family import propagation_family
from elpsolve.normalform import normalize
from elpsolve.stable import enumerate_stable_models
from elpsolve.transform import build_basic_generator


def test_smallest_instance():
    program = propagation_family(1)
    assert len(program.rules) == 4
    assert program_to_text(program) == (
        "a1 :- not K not1_a1.\n"
        "not1_a1 :- not a1.\n"
        "g :- a1.\n"
        ":- K g.\n"
    )


def test_instances_are_normal_form():
    for n in (1, 2, 5):
        program = propagation_family(n)
        assert is_normal_form(program)
        assert normalize(program).program is program


def test_rule_count_and_generator_models():
    program = propagation_family(3)
    assert len(program.rules) == 10
    assert len(enumerate_stable_models(build_basic_generator(program))) == 8


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        propagation_family(0)
