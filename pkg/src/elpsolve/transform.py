"""Objective companion programs for a normal-form epistemic program.

Starting from a program whose subjective literals are all of the form
``K a`` (up to two outer negations), this module builds:

  * the renaming that replaces each ``K a`` by a guess atom ``k_a``;
  * the tester: the renamed program plus one choice rule per guess atom;
  * the basic generator: the tester plus a consistency constraint
    ``:- k_a, not a`` per guess atom;
  * the propagation rules deriving ``kp_a`` ("K a is forced by the guesses")
    and ``kpn_a`` ("K not a is forced"), with one blocked-rule atom
    ``kpn_rI`` per source rule;
  * the propagating generator: the basic generator, the propagation rules,
    and a constraint ``:- kp_a, not k_a`` per guess atom.

All rule orders are deterministic: source order first, then per-atom
families in sorted symbol order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    AtomId,
    ObjLiteral,
    Program,
    Rule,
    SubjLiteral,
    atoms_of,
    is_normal_form,
    k_atom,
    kp_atom,
    kpn_atom,
    kpn_rule_atom,
    make_program,
    make_rule,
)
from .errors import CollisionError, NotNormalFormError

Interpretation = frozenset[AtomId]
BeliefInterpretation = frozenset[Interpretation]
KSignature = frozenset[AtomId]


class GeneratorKind(enum.Enum):
    TESTER = "t0"
    BASIC = "g0"
    PROPAGATING = "g1"


def _require_normal_form(program: Program) -> None:
    if not is_normal_form(program):
        raise NotNormalFormError("program has negation or constants under K")


def guessed_atoms(program: Program) -> tuple[AtomId, ...]:
    """The guess-atom universe: one k_ atom per atom occurring under K,
    in sorted base-symbol order."""
    _require_normal_form(program)
    bases = {
        lit.inner.core
        for rule in program.rules
        for lit in rule.body
        if isinstance(lit, SubjLiteral)
    }
    return tuple(k_atom(a) for a in sorted(bases))


def _renamed(lit: SubjLiteral) -> ObjLiteral:
    return ObjLiteral(k_atom(lit.inner.core), lit.neg)


def k_rename(program: Program) -> Program:
    """Replace each subjective literal by its guess atom, preserving the
    outer negation depth."""
    _require_normal_form(program)
    rules = []
    for rule in program.rules:
        body = tuple(
            _renamed(lit) if isinstance(lit, SubjLiteral) else lit
            for lit in rule.body
        )
        if rule.choice:
            body = body[:-1]
        rules.append(make_rule(rule.head, body, rule.choice))
    return make_program(rules)


def build_tester(program: Program) -> Program:
    """Renamed program plus one choice rule per guess atom."""
    renamed = k_rename(program)
    choices = [make_rule((k,), (), choice=True) for k in guessed_atoms(program)]
    return make_program(tuple(renamed.rules) + tuple(choices))


def build_basic_generator(program: Program) -> Program:
    """Tester plus consistency constraints: a guessed K a forces a."""
    tester = build_tester(program)
    constraints = [
        make_rule((), (ObjLiteral(k), ObjLiteral(k.base, 1)))
        for k in guessed_atoms(program)
    ]
    return make_program(tuple(tester.rules) + tuple(constraints))


def _complement(lit: ObjLiteral) -> ObjLiteral:
    # Double negation collapses before complementing.
    return ObjLiteral(lit.core, 0 if lit.neg == 1 else 1)


def build_propagation_rules(program: Program) -> Program:
    """Forced-consequence rules over kp_/kpn_ atoms.

    A body literal counts as positive when it holds exactly where its atom
    does (depth 0 or 2) and as negated at depth 1; subjective literals enter
    through their renamed guess atoms.
    """
    _require_normal_form(program)
    atoms = sorted(atoms_of(program))
    atom_witnesses = {kpn_atom(a).symbol for a in atoms}
    for rule in program.rules:
        blocked = kpn_rule_atom(rule.index)
        if blocked.symbol in atom_witnesses:
            raise CollisionError(
                f"derived symbol {blocked.symbol!r} is claimed by both an atom "
                "and a rule index"
            )
    rules: list[Rule] = []
    for rule in program.rules:
        blocked = kpn_rule_atom(rule.index)
        if len(rule.head) == 1:
            body = []
            for lit in rule.body:
                if isinstance(lit, SubjLiteral):
                    body.append(_renamed(lit))
                elif lit.neg == 1:
                    body.append(ObjLiteral(kpn_atom(lit.core)))
                else:
                    body.append(ObjLiteral(kp_atom(lit.core)))
            rules.append(make_rule((kp_atom(rule.head[0]),), body))
        for lit in rule.body:
            if isinstance(lit, SubjLiteral):
                reason = _complement(_renamed(lit))
            elif lit.neg == 1:
                reason = ObjLiteral(kp_atom(lit.core))
            else:
                reason = ObjLiteral(kpn_atom(lit.core))
            rules.append(make_rule((blocked,), (reason,)))
    head_rules: dict[AtomId, list[AtomId]] = {a: [] for a in atoms}
    for rule in program.rules:
        for a in rule.head:
            head_rules[a].append(kpn_rule_atom(rule.index))
    for a in atoms:
        body = tuple(ObjLiteral(r) for r in head_rules[a])
        rules.append(make_rule((kpn_atom(a),), body))
    return make_program(rules)


def build_propagating_generator(program: Program) -> Program:
    """Basic generator plus propagation rules plus their consistency
    constraints: a forced K a must have been guessed."""
    basic = build_basic_generator(program)
    propagation = build_propagation_rules(program)
    constraints = [
        make_rule((), (ObjLiteral(kp_atom(k.base)), ObjLiteral(k, 1)))
        for k in guessed_atoms(program)
    ]
    return make_program(
        tuple(basic.rules) + tuple(propagation.rules) + tuple(constraints)
    )


def program_size(program: Program) -> int:
    return sum(len(r.head) + len(r.body) for r in program.rules)


@dataclass(frozen=True)
class TransformBundle:
    """All companion programs of one normal-form source program."""

    source: Program
    k_universe: tuple[AtomId, ...]
    tester: Program
    basic_generator: Program
    propagating_generator: Program
    propagation_rules: Program

    @classmethod
    def build(cls, program: Program) -> "TransformBundle":
        _require_normal_form(program)
        propagation = build_propagation_rules(program)
        bundle = cls(
            source=program,
            k_universe=guessed_atoms(program),
            tester=build_tester(program),
            basic_generator=build_basic_generator(program),
            propagating_generator=build_propagating_generator(program),
            propagation_rules=propagation,
        )
        bound = (
            3 * program_size(program)
            + 2 * len(program.rules)
            + len(atoms_of(program))
        )
        assert program_size(propagation) <= bound, "propagation rules exceed size bound"
        return bundle

    def generator(self, kind: GeneratorKind) -> Program:
        return {
            GeneratorKind.TESTER: self.tester,
            GeneratorKind.BASIC: self.basic_generator,
            GeneratorKind.PROPAGATING: self.propagating_generator,
        }[kind]


def k_signature(interp: Interpretation, universe: tuple[AtomId, ...]) -> KSignature:
    """The guess atoms of an interpretation: its candidate K-signature."""
    return frozenset(k for k in universe if k in interp)


def worldview_signature(
    wv: BeliefInterpretation, universe: tuple[AtomId, ...]
) -> KSignature:
    """Guess atoms whose base holds in every member interpretation."""
    return frozenset(
        k for k in universe if all(k.base in interp for interp in wv)
    )
