"""Built-in benchmark family exercising epistemic propagation.

The n-th instance consists of n independent subjective choices whose
positive branches all feed one goal atom that a constraint forbids knowing:

    a1 :- not K not1_a1.     ...   an :- not K not1_an.
    not1_a1 :- not a1.       ...   not1_an :- not an.
    g :- a1.                 ...   g :- an.
    :- K g.

The basic generator admits 2^n candidates, exactly one of which survives
testing; the propagating generator prunes the search to that single
candidate up front.  The programs are emitted in normal form directly, the
witness atoms included.
"""

from __future__ import annotations

from .core import ObjLiteral, Program, SubjLiteral, make_program, make_rule
from .core import not_witness, user_atom


def propagation_family(n: int) -> Program:
    """The 3n+1 rules of the n-th family instance; n must be positive."""
    if n < 1:
        raise ValueError("the family is defined for n >= 1")
    a = [user_atom(f"a{i}") for i in range(1, n + 1)]
    g = user_atom("g")
    rules = [
        make_rule((a[i],), (SubjLiteral(ObjLiteral(not_witness(a[i])), 1),))
        for i in range(n)
    ]
    rules += [
        make_rule((not_witness(a[i]),), (ObjLiteral(a[i], 1),)) for i in range(n)
    ]
    rules += [make_rule((g,), (ObjLiteral(a[i]),)) for i in range(n)]
    rules.append(make_rule((), (SubjLiteral(ObjLiteral(g)),)))
    return make_program(rules)
