"""Core program representation: atoms, literals, rules, and programs.

Atoms are immutable value objects compared by symbol, so equal symbols always
denote the same atom regardless of where they were created.  Atoms introduced
by transformations carry their origin (kind plus base atom or rule index), and
their symbols live in reserved namespaces that user programs may not touch:

    not1_x   negation witness for x          (normal form)
    not2_x   double-negation witness for x   (normal form)
    k_x      epistemic guess for K x         (tester/generator programs)
    kp_x     "K x is a forced consequence"   (propagation rules)
    kpn_x    "K not x is a forced consequence"
    kpn_rI   "rule I is blocked in every interpretation"
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Iterable, Union

from .errors import ReservedPrefixError

RESERVED_PREFIXES = ("k_", "kp_", "kpn_", "not1_", "not2_")


class AtomKind(enum.Enum):
    USER = "user"
    NOT_WITNESS = "not1"
    NOTNOT_WITNESS = "not2"
    GUESS = "k"
    PROPAGATED_TRUE = "kp"
    PROPAGATED_FALSE = "kpn"
    RULE_BLOCKED = "kpn_r"


@dataclass(frozen=True, order=True)
class AtomId:
    """An interned atom.  Equality, hashing and ordering use the symbol only;
    kind/base/rule_index are origin metadata for derived atoms."""

    symbol: str
    kind: AtomKind = field(default=AtomKind.USER, compare=False)
    base: "AtomId | None" = field(default=None, compare=False)
    rule_index: "int | None" = field(default=None, compare=False)

    def __str__(self) -> str:
        return self.symbol


def user_atom(symbol: str) -> AtomId:
    return AtomId(symbol)


def check_reserved(symbol: str) -> None:
    """Reject user atoms that would collide with derived-atom namespaces."""
    base = symbol.split("(", 1)[0]
    for prefix in RESERVED_PREFIXES:
        if base.startswith(prefix):
            raise ReservedPrefixError(
                f"atom {symbol!r} uses reserved prefix {prefix!r}"
            )


_PREFIX = {
    AtomKind.NOT_WITNESS: "not1_",
    AtomKind.NOTNOT_WITNESS: "not2_",
    AtomKind.GUESS: "k_",
    AtomKind.PROPAGATED_TRUE: "kp_",
    AtomKind.PROPAGATED_FALSE: "kpn_",
}


def derived_atom(kind: AtomKind, base: "AtomId | int") -> AtomId:
    """Deterministically derive a fresh atom of the given kind.

    The same (kind, base) pair always yields the same atom.  Rule-blocked
    atoms take a rule index instead of a base atom.
    """
    if kind is AtomKind.RULE_BLOCKED:
        if not isinstance(base, int) or base < 0:
            raise ValueError("rule-blocked atoms need a rule index")
        return AtomId(f"kpn_r{base}", kind=kind, rule_index=base)
    if not isinstance(base, AtomId):
        raise ValueError(f"{kind} atoms need a base atom")
    return AtomId(_PREFIX[kind] + base.symbol, kind=kind, base=base)


def not_witness(a: AtomId) -> AtomId:
    return derived_atom(AtomKind.NOT_WITNESS, a)


def notnot_witness(a: AtomId) -> AtomId:
    return derived_atom(AtomKind.NOTNOT_WITNESS, a)


def k_atom(a: AtomId) -> AtomId:
    return derived_atom(AtomKind.GUESS, a)


def kp_atom(a: AtomId) -> AtomId:
    return derived_atom(AtomKind.PROPAGATED_TRUE, a)


def kpn_atom(a: AtomId) -> AtomId:
    return derived_atom(AtomKind.PROPAGATED_FALSE, a)


def kpn_rule_atom(index: int) -> AtomId:
    return derived_atom(AtomKind.RULE_BLOCKED, index)


class TruthConst(enum.Enum):
    TRUE = "#true"
    FALSE = "#false"


@dataclass(frozen=True)
class ObjLiteral:
    """An extended objective literal: atom or truth constant under 0-2 "not"s."""

    core: Union[AtomId, TruthConst]
    neg: int = 0

    def __post_init__(self):
        if self.neg not in (0, 1, 2):
            raise ValueError("negation depth must be 0, 1 or 2")

    def __str__(self) -> str:
        core = self.core.symbol if isinstance(self.core, AtomId) else self.core.value
        return "not " * self.neg + core


@dataclass(frozen=True)
class SubjLiteral:
    """A subjective literal: K applied to an extended objective literal,
    itself under 0-2 outer "not"s."""

    inner: ObjLiteral
    neg: int = 0

    def __post_init__(self):
        if self.neg not in (0, 1, 2):
            raise ValueError("negation depth must be 0, 1 or 2")

    def __str__(self) -> str:
        return "not " * self.neg + "K " + str(self.inner)


Literal = Union[ObjLiteral, SubjLiteral]

TOP = ObjLiteral(TruthConst.TRUE)
BOT = ObjLiteral(TruthConst.FALSE)


@dataclass(frozen=True)
class Rule:
    """A rule with a (possibly empty, possibly disjunctive) head.

    Choice rules are stored desugared: ``{a} :- B`` keeps ``choice=True`` and
    carries ``not not a`` as its final body literal, so the semantics modules
    never special-case choices.  The pretty-printer reverses the sugar.
    """

    head: tuple[AtomId, ...]
    body: tuple[Literal, ...]
    choice: bool = False
    index: int = -1

    def __post_init__(self):
        if self.choice:
            if len(self.head) != 1:
                raise ValueError("choice rules have exactly one head atom")
            if not self.body or self.body[-1] != ObjLiteral(self.head[0], 2):
                raise ValueError("choice rule body must end with its desugared literal")

    def __str__(self) -> str:
        if self.choice:
            head = "{" + self.head[0].symbol + "}"
            body = self.body[:-1]
        else:
            head = " | ".join(a.symbol for a in self.head)
            body = self.body
        body_text = ", ".join(str(lit) for lit in body)
        if not self.head:
            return (":- " + body_text + ".") if body else "#false."
        return (head + " :- " + body_text + ".") if body else head + "."


def make_rule(
    head: Iterable[AtomId],
    body: Iterable[Literal] = (),
    choice: bool = False,
    index: int = -1,
) -> Rule:
    """Build a rule, desugaring choice heads."""
    head = tuple(head)
    body = tuple(body)
    if choice:
        if len(head) != 1:
            raise ValueError("choice rules have exactly one head atom")
        body = body + (ObjLiteral(head[0], 2),)
    return Rule(head, body, choice, index)


@dataclass(frozen=True)
class Program:
    """An ordered, immutable collection of rules."""

    rules: tuple[Rule, ...]

    def __str__(self) -> str:
        return program_to_text(self)

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)


def make_program(rules: Iterable[Rule]) -> Program:
    """Build a program, reassigning rule indices by position."""
    return Program(tuple(replace(r, index=i) for i, r in enumerate(rules)))


EMPTY_PROGRAM = make_program(())


def program_to_text(program: Program) -> str:
    return "".join(str(r) + "\n" for r in program.rules)


def _literal_atoms(lit: Literal):
    if isinstance(lit, SubjLiteral):
        lit = lit.inner
    if isinstance(lit.core, AtomId):
        yield lit.core


def atoms_of(program: Program) -> frozenset[AtomId]:
    """All atoms occurring in the program, including under K; never constants."""
    found = set()
    for rule in program.rules:
        found.update(rule.head)
        for lit in rule.body:
            found.update(_literal_atoms(lit))
    return frozenset(found)


def is_objective(program: Program) -> bool:
    return not any(
        isinstance(lit, SubjLiteral) for rule in program.rules for lit in rule.body
    )


def is_normal_form(program: Program) -> bool:
    """No negation and no constants inside the scope of K."""
    for rule in program.rules:
        for lit in rule.body:
            if isinstance(lit, SubjLiteral):
                if lit.inner.neg != 0 or not isinstance(lit.inner.core, AtomId):
                    return False
    return True


def _fold_obj(lit: ObjLiteral) -> ObjLiteral:
    """Collapse negations on constants to depth 0; atoms pass through."""
    if isinstance(lit.core, TruthConst) and lit.neg:
        value = lit.core is TruthConst.TRUE
        if lit.neg == 1:
            value = not value
        return TOP if value else BOT
    return lit


def _fold_literal(lit: Literal) -> Literal:
    if isinstance(lit, ObjLiteral):
        return _fold_obj(lit)
    inner = _fold_obj(lit.inner)
    if isinstance(inner.core, TruthConst):
        # K #true holds in every belief interpretation, K #false in none;
        # outer negations then collapse onto the constant.
        value = inner.core is TruthConst.TRUE
        if lit.neg == 1:
            value = not value
        return TOP if value else BOT
    return SubjLiteral(inner, lit.neg)


def fold_constants(program: Program) -> Program:
    """Remove truth constants from rule bodies.

    Literals equivalent to #true disappear; a literal equivalent to #false
    drops its whole rule.  Subjective literals over constants fold first, so
    downstream transformations only ever see atoms under K.
    """
    rules = []
    for rule in program.rules:
        body = []
        dropped = False
        for lit in rule.body:
            folded = _fold_literal(lit)
            if folded == TOP:
                continue
            if folded == BOT:
                dropped = True
                break
            body.append(folded)
        if dropped:
            continue
        rules.append(make_rule(rule.head, _strip_choice(rule, body), rule.choice))
    return make_program(rules)


def _strip_choice(rule: Rule, body: list[Literal]) -> list[Literal]:
    # make_rule re-appends the desugared literal of a choice rule; drop the
    # last surviving copy (the printer strips the last, so body order must
    # be preserved exactly for round-tripping).
    if rule.choice:
        marker = ObjLiteral(rule.head[0], 2)
        trimmed = list(body)
        for i in range(len(trimmed) - 1, -1, -1):
            if trimmed[i] == marker:
                del trimmed[i]
                break
        return trimmed
    return body


def interp_sort_key(interp: frozenset[AtomId]):
    """Deterministic order for interpretations: cardinality, then symbols."""
    return (len(interp), sorted(a.symbol for a in interp))


def belief_sort_key(wv: frozenset[frozenset[AtomId]]):
    """Deterministic order for belief interpretations."""
    return (len(wv), sorted(interp_sort_key(i) for i in wv))


def format_interp(interp: frozenset[AtomId]) -> str:
    return "{" + ", ".join(sorted(a.symbol for a in interp)) + "}"


def format_belief(wv: Iterable[frozenset[AtomId]]) -> str:
    members = sorted(wv, key=interp_sort_key)
    return "{ " + ", ".join(format_interp(i) for i in members) + " }"
