"""Normal form: eliminate negation inside the scope of K.

Every subjective literal over ``not a`` or ``not not a`` is rewritten to one
over a fresh witness atom whose single defining rule reproduces the negated
literal objectively.  Worldviews are preserved up to restriction onto the
original atoms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AtomId,
    ObjLiteral,
    Program,
    SubjLiteral,
    TruthConst,
    is_normal_form,
    make_program,
    make_rule,
    not_witness,
    notnot_witness,
)

Interpretation = frozenset[AtomId]
BeliefInterpretation = frozenset[Interpretation]


@dataclass(frozen=True)
class NormalFormResult:
    program: Program
    introduced: dict[AtomId, AtomId]  # witness atom -> its base atom

    def __iter__(self):
        yield self.program
        yield self.introduced


def normalize(program: Program) -> NormalFormResult:
    """Rewrite the program into normal form.

    ``K not a`` becomes ``K not1_a`` with defining rule ``not1_a :- not a``;
    ``K not not a`` becomes ``K not2_a`` with ``not2_a :- not not a``.  Each
    defining rule is added once per base atom, however many occurrences there
    are.  Already-normal programs are returned unchanged.
    """
    if is_normal_form(program):
        return NormalFormResult(program, {})
    introduced: dict[AtomId, AtomId] = {}
    defining = []
    rewritten = []
    for rule in program.rules:
        body = []
        for lit in rule.body:
            if isinstance(lit, SubjLiteral) and isinstance(lit.inner.core, TruthConst):
                raise ValueError("constants under K must be folded before normalization")
            if isinstance(lit, SubjLiteral) and lit.inner.neg != 0:
                base = lit.inner.core
                if lit.inner.neg == 1:
                    witness = not_witness(base)
                else:
                    witness = notnot_witness(base)
                if witness not in introduced:
                    introduced[witness] = base
                    defining.append(
                        make_rule((witness,), (ObjLiteral(base, lit.inner.neg),))
                    )
                body.append(SubjLiteral(ObjLiteral(witness), lit.neg))
            else:
                body.append(lit)
        if rule.choice:
            body = body[:-1]
        rewritten.append(make_rule(rule.head, body, rule.choice))
    return NormalFormResult(make_program(rewritten + defining), introduced)


def restrict_interpretation(interp: Interpretation, atoms: frozenset[AtomId]) -> Interpretation:
    return interp & atoms


def restrict_worldview(
    wv: BeliefInterpretation, atoms: frozenset[AtomId]
) -> BeliefInterpretation:
    """Project every member interpretation onto the given atoms."""
    if not wv:
        raise ValueError("belief interpretations are nonempty")
    return frozenset(interp & atoms for interp in wv)
