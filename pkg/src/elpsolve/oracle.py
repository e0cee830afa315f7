"""Reference semantics by exhaustive enumeration.

Everything here goes straight from the definitions: a worldview is a
nonempty set of interpretations that equals the stable models of its own
subjective reduct.  The enumerator walks every nonempty set of
interpretations over the program's atoms, which is doubly exponential and
therefore budgeted; interpretations and belief interpretations are encoded
as bitmasks so the walk stays affordable at the default budget of four
atoms (65535 candidate belief interpretations).

These functions back the test suite and the CLI's --verify mode.  They
deliberately share no search machinery with the engine in `stable`; the
stable-model side is definitional subset enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AtomId,
    ObjLiteral,
    Program,
    SubjLiteral,
    TruthConst,
    atoms_of,
    belief_sort_key,
    fold_constants,
    interp_sort_key,
    make_program,
    make_rule,
)
from .errors import BudgetExceededError
from .stable import is_stable_model, satisfies_ext

Interpretation = frozenset[AtomId]
BeliefInterpretation = frozenset[Interpretation]


@dataclass(frozen=True)
class OracleBudget:
    """Enumeration touches 2**(2**max_atoms) - 1 belief interpretations, so
    the default keeps that at 65535."""

    max_atoms: int = 4
    max_interpretations: int = 16


DEFAULT_BUDGET = OracleBudget()


def satisfies_subjective(wv: BeliefInterpretation, lit: SubjLiteral) -> bool:
    """W satisfies K l iff every member satisfies l; one outer negation
    flips that, a second one restores it."""
    value = all(satisfies_ext(interp, lit.inner) for interp in wv)
    if lit.neg == 1:
        return not value
    return value


def subjective_reduct(program: Program, wv: BeliefInterpretation) -> Program:
    """Replace each subjective literal by #true or #false according to the
    belief interpretation, then fold constants.  The result is objective."""
    rules = []
    for rule in program.rules:
        body = []
        for lit in rule.body:
            if isinstance(lit, SubjLiteral):
                value = satisfies_subjective(wv, lit)
                body.append(
                    ObjLiteral(TruthConst.TRUE if value else TruthConst.FALSE)
                )
            else:
                body.append(lit)
        if rule.choice:
            body = body[:-1]
        rules.append(make_rule(rule.head, body, rule.choice))
    return fold_constants(make_program(rules))


def brute_force_stable_models(program: Program) -> list[Interpretation]:
    """Stable models by checking every subset of the program's atoms."""
    atoms = sorted(atoms_of(program))
    if len(atoms) > 20:
        raise BudgetExceededError("brute-force stable models capped at 20 atoms")
    found = []
    for mask in range(1 << len(atoms)):
        interp = frozenset(a for i, a in enumerate(atoms) if mask >> i & 1)
        if is_stable_model(program, interp):
            found.append(interp)
    found.sort(key=interp_sort_key)
    return found


def is_worldview(program: Program, wv: BeliefInterpretation) -> bool:
    """Definitional check: W equals the stable models of its reduct."""
    if not wv:
        return False
    reduct = subjective_reduct(program, wv)
    return frozenset(brute_force_stable_models(reduct)) == frozenset(wv)


class BeliefTable:
    """Bitmask evaluation tables for one program's belief space.

    Interpretations over the n program atoms are numbered 0..2**n-1; a
    belief interpretation is a bitmask with one bit per interpretation.
    Stable-model sets of subjective reducts are memoized per truth vector
    of the distinct subjective literals.  Besides the worldview enumerator,
    the test suite uses this table to walk every belief interpretation of a
    small program.
    """

    def __init__(self, program: Program):
        self.program = program
        self.atoms = sorted(atoms_of(program))
        self.interps = [
            frozenset(a for i, a in enumerate(self.atoms) if mask >> i & 1)
            for mask in range(1 << len(self.atoms))
        ]
        self.subjective = sorted(
            {
                lit.inner
                for rule in program.rules
                for lit in rule.body
                if isinstance(lit, SubjLiteral)
            },
            key=lambda l: (str(l.core), l.neg),
        )
        # sat_masks[j]: interpretations satisfying the j-th subjective body
        self.sat_masks = [
            sum(
                1 << i
                for i, interp in enumerate(self.interps)
                if satisfies_ext(interp, inner)
            )
            for inner in self.subjective
        ]
        self.full = (1 << len(self.interps)) - 1
        self._reduct_sm: dict[tuple[bool, ...], int] = {}
        self._atom_masks: dict[AtomId, int] = {}

    def truth_vector(self, wv_mask: int) -> tuple[bool, ...]:
        # K l holds iff every member interpretation satisfies l.
        return tuple(wv_mask & ~m == 0 for m in self.sat_masks)

    def atom_mask(self, atom: AtomId) -> int:
        """Interpretations containing the atom, as a bitmask."""
        if atom not in self._atom_masks:
            self._atom_masks[atom] = sum(
                1 << i for i, interp in enumerate(self.interps) if atom in interp
            )
        return self._atom_masks[atom]

    def interp_mask(self, interp: Interpretation) -> int:
        if not interp <= set(self.atoms):
            raise ValueError("interpretation mentions atoms outside the table")
        index = 0
        for i, a in enumerate(self.atoms):
            if a in interp:
                index |= 1 << i
        return 1 << index

    def wv_mask(self, wv: BeliefInterpretation) -> int:
        mask = 0
        for interp in wv:
            mask |= self.interp_mask(interp)
        return mask

    def decode(self, wv_mask: int) -> BeliefInterpretation:
        return frozenset(
            self.interps[i] for i in range(len(self.interps)) if wv_mask >> i & 1
        )

    def reduct_models_mask(self, vector: tuple[bool, ...]) -> int:
        if vector not in self._reduct_sm:
            values = dict(zip(self.subjective, vector))
            rules = []
            for rule in self.program.rules:
                body = []
                for lit in rule.body:
                    if isinstance(lit, SubjLiteral):
                        value = values[lit.inner]
                        if lit.neg == 1:
                            value = not value
                        body.append(
                            ObjLiteral(
                                TruthConst.TRUE if value else TruthConst.FALSE
                            )
                        )
                    else:
                        body.append(lit)
                if rule.choice:
                    body = body[:-1]
                rules.append(make_rule(rule.head, body, rule.choice))
            reduct = fold_constants(make_program(rules))
            mask = 0
            for interp in brute_force_stable_models(reduct):
                mask |= self.interp_mask(interp)
            self._reduct_sm[vector] = mask
        return self._reduct_sm[vector]


def enumerate_worldviews(
    program: Program, budget: OracleBudget = DEFAULT_BUDGET
) -> list[BeliefInterpretation]:
    """Every worldview, by checking all nonempty belief interpretations."""
    atoms = sorted(atoms_of(program))
    if len(atoms) > budget.max_atoms:
        raise BudgetExceededError(
            f"program has {len(atoms)} atoms, budget allows {budget.max_atoms}"
        )
    table = BeliefTable(program)
    found = []
    for wv_mask in range(1, table.full + 1):
        vector = table.truth_vector(wv_mask)
        if table.reduct_models_mask(vector) == wv_mask:
            found.append(table.decode(wv_mask))
    found.sort(key=belief_sort_key)
    return found
