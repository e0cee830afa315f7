"""Solver for ground epistemic logic programs.

Worldviews under the classic 1994 world-view semantics are found by
generate-and-test: an objective generator program proposes candidates, a
tester program validates them, and an optional propagation layer in the
generator prunes candidates (often exponentially) before any tester call.
"""

from .core import (
    AtomId,
    AtomKind,
    ObjLiteral,
    Program,
    Rule,
    SubjLiteral,
    TruthConst,
    atoms_of,
    fold_constants,
    make_program,
    make_rule,
    program_to_text,
    user_atom,
)
from .errors import ElpError, ParseError
from .family import propagation_family
from .normalform import NormalFormResult, normalize, restrict_worldview
from .oracle import OracleBudget, enumerate_worldviews, is_worldview, subjective_reduct
from .parser import parse_program, parse_program_with_warnings
from .solver import SolveStats, SolverConfig, WorldviewResult, solve
from .stable import (
    Assumption,
    StableModelSet,
    cautious_consequences,
    enumerate_stable_models,
    is_model,
    is_stable_model,
    least_model_horn,
    reduct,
    satisfies_ext,
    stable_models_under_assumption,
)
from .transform import GeneratorKind, TransformBundle

__all__ = [
    "Assumption",
    "AtomId",
    "AtomKind",
    "ElpError",
    "GeneratorKind",
    "NormalFormResult",
    "ObjLiteral",
    "OracleBudget",
    "ParseError",
    "Program",
    "Rule",
    "SolveStats",
    "SolverConfig",
    "StableModelSet",
    "SubjLiteral",
    "TransformBundle",
    "TruthConst",
    "WorldviewResult",
    "atoms_of",
    "cautious_consequences",
    "enumerate_stable_models",
    "enumerate_worldviews",
    "fold_constants",
    "is_model",
    "is_stable_model",
    "is_worldview",
    "least_model_horn",
    "make_program",
    "make_rule",
    "normalize",
    "parse_program",
    "parse_program_with_warnings",
    "program_to_text",
    "propagation_family",
    "reduct",
    "restrict_worldview",
    "satisfies_ext",
    "solve",
    "stable_models_under_assumption",
    "subjective_reduct",
    "user_atom",
]

__version__ = "0.1.0"
