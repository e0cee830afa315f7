"""Stable-model semantics for objective programs.

Two routes coexist on purpose.  `is_stable_model` is the definitional check
(model of the reduct, no smaller model) and backs every brute-force oracle.
`enumerate_stable_models` is the search engine: backtracking over atom truth
values with clause unit propagation and a no-external-support rule, plus a
stability check at each leaf.  The engine targets correctness at desk scale,
not industrial ASP performance.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import (
    AtomId,
    ObjLiteral,
    Program,
    Rule,
    SubjLiteral,
    TruthConst,
    atoms_of,
    fold_constants,
    interp_sort_key,
    is_objective,
    make_program,
    make_rule,
)
from .errors import InconsistentAssumptionError, NotHornError, NotObjectiveError

Interpretation = frozenset[AtomId]

# Minimality checks enumerate proper subsets below this size and switch to a
# co-search for a smaller model above it.
_SUBSET_ENUM_LIMIT = 12


def _require_objective(program: Program) -> None:
    if not is_objective(program):
        raise NotObjectiveError("program contains subjective literals")


def satisfies_ext(interp: Interpretation, lit: ObjLiteral) -> bool:
    """Truth of an extended objective literal in an interpretation."""
    if isinstance(lit.core, TruthConst):
        value = lit.core is TruthConst.TRUE
    else:
        value = lit.core in interp
    if lit.neg == 1:
        return not value
    return value


def _body_satisfied(interp: Interpretation, rule: Rule) -> bool:
    return all(satisfies_ext(interp, lit) for lit in rule.body)


def is_model(interp: Interpretation, program: Program) -> bool:
    """Classical satisfaction: every applicable rule has a true head atom."""
    _require_objective(program)
    for rule in program.rules:
        if _body_satisfied(interp, rule) and not any(a in interp for a in rule.head):
            return False
    return True


def reduct(program: Program, interp: Interpretation) -> Program:
    """Drop rules with an unsatisfied negated body literal, then strip all
    negated literals from the survivors.  The result is constant-folded, so
    bodies contain positive atoms only."""
    _require_objective(program)
    rules = []
    for rule in program.rules:
        body = []
        keep = True
        for lit in rule.body:
            if lit.neg == 0:
                body.append(lit)
            elif satisfies_ext(interp, lit):
                continue
            else:
                keep = False
                break
        if keep:
            rules.append(make_rule(rule.head, body))
    return fold_constants(make_program(rules))


def _has_smaller_model(program: Program, interp: Interpretation) -> bool:
    """Does the (positive) program have a model strictly below `interp`?"""
    members = sorted(interp, key=lambda a: a.symbol)
    if len(members) <= _SUBSET_ENUM_LIMIT:
        for k in range(len(members)):
            for subset in itertools.combinations(members, k):
                if is_model(frozenset(subset), program):
                    return True
        return False
    return _cosearch_smaller(program, interp)


def _cosearch_smaller(program: Program, interp: Interpretation) -> bool:
    """Clause search for a model N of a positive program with N a proper
    subset of `interp`.  Atoms outside `interp` are pinned false."""
    atoms = sorted(interp, key=lambda a: a.symbol)
    index = {a: i for i, a in enumerate(atoms)}
    clauses = []
    for rule in program.rules:
        clause = set()
        vacuous = False
        for lit in rule.body:
            if isinstance(lit.core, TruthConst):
                if lit.core is TruthConst.FALSE:
                    vacuous = True
                    break
                continue
            if lit.core not in index:
                vacuous = True  # positive body atom pinned false
                break
            clause.add(-(index[lit.core] + 1))
        if vacuous:
            continue
        for a in rule.head:
            if a in index:
                clause.add(index[a] + 1)
        clauses.append(clause)
    clauses.append({-(i + 1) for i in range(len(atoms))})  # strictly smaller
    return _sat_any(clauses, len(atoms))


def _sat_any(clauses: list[set[int]], n_vars: int) -> bool:
    """Tiny DPLL satisfiability check over integer literals."""
    values: dict[int, bool] = {}

    def propagate(local) -> bool:
        changed = True
        while changed:
            changed = False
            for clause in clauses:
                unknown = []
                satisfied = False
                for lit in clause:
                    var, want = abs(lit), lit > 0
                    if var in local:
                        if local[var] == want:
                            satisfied = True
                            break
                    else:
                        unknown.append(lit)
                if satisfied:
                    continue
                if not unknown:
                    return False
                if len(unknown) == 1:
                    lit = unknown[0]
                    local[abs(lit)] = lit > 0
                    changed = True
        return True

    def search(local) -> bool:
        if not propagate(local):
            return False
        for var in range(1, n_vars + 1):
            if var not in local:
                for val in (False, True):
                    branch = dict(local)
                    branch[var] = val
                    if search(branch):
                        return True
                return False
        return True

    return search(values)


def is_stable_model(program: Program, interp: Interpretation) -> bool:
    """Definitional stability: `interp` is a minimal model of its own reduct."""
    _require_objective(program)
    red = reduct(program, interp)
    if not is_model(interp, red):
        return False
    return not _has_smaller_model(red, interp)


@dataclass(frozen=True)
class StableModelSet:
    """Stable models in deterministic order (cardinality, then symbols)."""

    models: tuple[Interpretation, ...]
    program: Program

    def __iter__(self):
        return iter(self.models)

    def __len__(self) -> int:
        return len(self.models)

    def __contains__(self, interp) -> bool:
        return interp in self.models

    def as_set(self) -> frozenset[Interpretation]:
        return frozenset(self.models)


@dataclass(frozen=True)
class Assumption:
    """Signed atoms constraining stable-model search."""

    positive: frozenset[AtomId] = frozenset()
    negative: frozenset[AtomId] = frozenset()

    def __post_init__(self):
        clash = self.positive & self.negative
        if clash:
            names = ", ".join(sorted(a.symbol for a in clash))
            raise InconsistentAssumptionError(f"assumption clashes on: {names}")


EMPTY_ASSUMPTION = Assumption()


# --------------------------------------------------------------------------
# Search engine
# --------------------------------------------------------------------------

_UNKNOWN, _TRUE, _FALSE = 0, 1, -1


@dataclass
class _Compiled:
    atoms: list[AtomId]
    clauses: list[list[int]]  # +i / -i over 1-based atom indices
    # Per rule: (heads, positive body atoms, [(atom, depth)] negated literals)
    rules: list[tuple[list[int], list[int], list[tuple[int, int]]]]
    supports: dict[int, list[int]] = field(default_factory=dict)
    disjunctive: bool = False


def _compile(program: Program) -> _Compiled:
    atoms = sorted(atoms_of(program), key=lambda a: a.symbol)
    index = {a: i + 1 for i, a in enumerate(atoms)}
    comp = _Compiled(atoms=atoms, clauses=[], rules=[])
    comp.supports = {i + 1: [] for i in range(len(atoms))}
    for rule in program.rules:
        heads = [index[a] for a in rule.head]
        pos: list[int] = []
        negs: list[tuple[int, int]] = []
        clause = set(heads)
        dead = False
        for lit in rule.body:
            if isinstance(lit.core, TruthConst):
                if (lit.core is TruthConst.FALSE) != (lit.neg == 1):
                    dead = True  # literal is classically false
                    break
                continue
            i = index[lit.core]
            if lit.neg == 0:
                pos.append(i)
                clause.add(-i)
            else:
                negs.append((i, lit.neg))
                clause.add(i if lit.neg == 1 else -i)
        if dead:
            continue
        rule_no = len(comp.rules)
        comp.rules.append((heads, pos, negs))
        for h in heads:
            comp.supports[h].append(rule_no)
        if len(heads) > 1:
            comp.disjunctive = True
        if not any(-l in clause for l in clause):
            comp.clauses.append(sorted(clause))
    return comp


def _lit_false(values: list[int], atom: int, depth: int) -> bool:
    v = values[atom]
    if depth == 1:
        return v == _TRUE
    return v == _FALSE


def _propagate(comp: _Compiled, values: list[int]) -> bool:
    """Unit propagation plus no-external-support falsification; returns False
    on conflict.  Both steps only prune assignments that cannot extend to a
    stable model."""
    changed = True
    while changed:
        changed = False
        for clause in comp.clauses:
            unknown = 0
            last = 0
            satisfied = False
            for lit in clause:
                v = values[abs(lit)]
                if v == _UNKNOWN:
                    unknown += 1
                    last = lit
                elif (v == _TRUE) == (lit > 0):
                    satisfied = True
                    break
            if satisfied:
                continue
            if unknown == 0:
                return False
            if unknown == 1:
                values[abs(last)] = _TRUE if last > 0 else _FALSE
                changed = True
        for atom in range(1, len(comp.atoms) + 1):
            if values[atom] == _FALSE:
                continue
            supported = False
            for rule_no in comp.supports[atom]:
                _, pos, negs = comp.rules[rule_no]
                if any(values[p] == _FALSE for p in pos):
                    continue
                if any(_lit_false(values, a, d) for a, d in negs):
                    continue
                supported = True
                break
            if not supported:
                if values[atom] == _TRUE:
                    return False
                values[atom] = _FALSE
                changed = True
    return True


def _leaf_stable(comp: _Compiled, values: list[int]) -> bool:
    """Exact stability check for a total assignment known to be a model."""
    true_atoms = [i for i in range(1, len(comp.atoms) + 1) if values[i] == _TRUE]
    # Reduct relative to the total assignment: surviving rules keep only
    # their positive body part.
    survivors = []
    for heads, pos, negs in comp.rules:
        if any(_lit_false(values, a, d) for a, d in negs):
            continue
        survivors.append((heads, pos))
    if not comp.disjunctive:
        derived = [False] * (len(comp.atoms) + 1)
        changed = True
        while changed:
            changed = False
            for heads, pos in survivors:
                if not heads or derived[heads[0]]:
                    continue
                if all(derived[p] for p in pos):
                    derived[heads[0]] = True
                    changed = True
        return all(derived[a] for a in true_atoms) and not any(
            derived[i] and values[i] != _TRUE for i in range(1, len(comp.atoms) + 1)
        )
    return not _smaller_model_exists(survivors, true_atoms)


def _smaller_model_exists(survivors, true_atoms) -> bool:
    inside = {a: i + 1 for i, a in enumerate(true_atoms)}
    clauses = []
    for heads, pos in survivors:
        clause = set()
        vacuous = False
        for p in pos:
            if p not in inside:
                vacuous = True
                break
            clause.add(-inside[p])
        if vacuous:
            continue
        for h in heads:
            if h in inside:
                clause.add(inside[h])
        clauses.append(clause)
    clauses.append({-(i + 1) for i in range(len(true_atoms))})
    return _sat_any(clauses, len(true_atoms))


def _search(comp: _Compiled, values: list[int], out: list[Interpretation]) -> None:
    if not _propagate(comp, values):
        return
    for atom in range(1, len(comp.atoms) + 1):
        if values[atom] == _UNKNOWN:
            for val in (_FALSE, _TRUE):
                branch = values.copy()
                branch[atom] = val
                _search(comp, branch, out)
            return
    if _leaf_stable(comp, values):
        out.append(
            frozenset(
                comp.atoms[i - 1]
                for i in range(1, len(comp.atoms) + 1)
                if values[i] == _TRUE
            )
        )


def enumerate_stable_models(program: Program) -> StableModelSet:
    """All stable models of an objective program, deterministically ordered."""
    _require_objective(program)
    comp = _compile(fold_constants(program))
    found: list[Interpretation] = []
    _search(comp, [_UNKNOWN] * (len(comp.atoms) + 1), found)
    found.sort(key=interp_sort_key)
    return StableModelSet(tuple(found), program)


def assumption_constraints(assumption: Assumption) -> list[Rule]:
    """The two constraint families forcing an assumption."""
    rules = [
        make_rule((), (ObjLiteral(a, 1),))
        for a in sorted(assumption.positive, key=lambda a: a.symbol)
    ]
    rules += [
        make_rule((), (ObjLiteral(a, 0),))
        for a in sorted(assumption.negative, key=lambda a: a.symbol)
    ]
    return rules


def stable_models_under_assumption(
    program: Program, assumption: Assumption
) -> StableModelSet:
    """Stable models of the program extended with assumption constraints."""
    _require_objective(program)
    extended = make_program(tuple(program.rules) + tuple(assumption_constraints(assumption)))
    result = enumerate_stable_models(extended)
    return StableModelSet(result.models, program)


def cautious_consequences(
    program: Program, assumption: Assumption = EMPTY_ASSUMPTION
) -> "frozenset[AtomId] | None":
    """Intersection of all stable models under the assumption, or None when
    no stable model exists.  The None case is deliberately explicit: callers
    must not confuse "everything follows" with "nothing is there"."""
    models = stable_models_under_assumption(program, assumption)
    if not models.models:
        return None
    result = set(models.models[0])
    for m in models.models[1:]:
        result &= m
    return frozenset(result)


def least_model_horn(program: Program) -> Interpretation:
    """Least model of a definite Horn program by the usual fixpoint."""
    _require_objective(program)
    compiled = []
    for rule in program.rules:
        if len(rule.head) != 1:
            raise NotHornError(f"rule {rule.index} is not definite: {rule}")
        pos = []
        for lit in rule.body:
            if (
                isinstance(lit, SubjLiteral)
                or lit.neg != 0
                or not isinstance(lit.core, AtomId)
            ):
                raise NotHornError(f"rule {rule.index} has a non-positive body: {rule}")
            pos.append(lit.core)
        compiled.append((rule.head[0], pos))
    derived: set[AtomId] = set()
    changed = True
    while changed:
        changed = False
        for head, pos in compiled:
            if head not in derived and all(p in derived for p in pos):
                derived.add(head)
                changed = True
    return frozenset(derived)
