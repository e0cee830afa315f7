"""Generate-and-test worldview search.

The solver iterates the stable models of the chosen generator program in
deterministic order.  Each candidate is either accepted by the linear-time
skip check (propagating generator only: every guessed K a has been forced,
every unguessed one refuted) or put through the full tester check, which
compares the candidate's K-signature against the cautious consequences of
the tester program under that signature.  Accepted candidates are expanded
into worldviews and deduplicated by signature.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AtomId, Program, kp_atom, kpn_atom
from .errors import (
    EmptyWorldviewError,
    GeneratorMismatchError,
    NotNormalFormError,
    SkipSoundnessError,
)
from .stable import (
    Assumption,
    StableModelSet,
    cautious_consequences,
    enumerate_stable_models,
    stable_models_under_assumption,
)
from .transform import (
    GeneratorKind,
    KSignature,
    TransformBundle,
    k_signature,
    worldview_signature,
)
from .core import atoms_of, is_normal_form

Interpretation = frozenset[AtomId]
BeliefInterpretation = frozenset[Interpretation]


@dataclass(frozen=True)
class SolverConfig:
    generator: GeneratorKind = GeneratorKind.PROPAGATING
    max_worldviews: "int | None" = None  # None enumerates all worldviews
    collect_stats: bool = True
    verify_skips: bool = False  # run the tester on skipped candidates too

    def __post_init__(self):
        if self.max_worldviews is not None and self.max_worldviews < 1:
            raise ValueError("max_worldviews must be positive or None")


@dataclass
class SolveStats:
    candidates: int = 0
    tests_run: int = 0
    tests_skipped: int = 0
    worldviews: int = 0
    tester_calls: int = 0


@dataclass(frozen=True)
class WorldviewResult:
    signature: KSignature
    belief_set: BeliefInterpretation  # over the atoms of the source program
    witness: Interpretation  # the generator stable model that produced it


def signature_assumption(sig: KSignature, universe: tuple[AtomId, ...]) -> Assumption:
    """Pin every guess atom: the signature positively, its complement
    negatively.  This makes the tester reproduce the subjective reduct."""
    return Assumption(
        positive=frozenset(sig), negative=frozenset(universe) - frozenset(sig)
    )


def tester_models(
    tester: Program, sig: KSignature, universe: tuple[AtomId, ...]
) -> StableModelSet:
    return stable_models_under_assumption(
        tester, signature_assumption(sig, universe)
    )


def test_candidate(
    tester: Program, m: Interpretation, universe: tuple[AtomId, ...]
) -> bool:
    """Full tester check: the candidate's signature must equal the guess
    atoms whose base is a cautious consequence of the tester under that
    signature.  No stable models means the candidate fails."""
    sig = k_signature(m, universe)
    cautious = cautious_consequences(
        tester, signature_assumption(sig, universe)
    )
    if cautious is None:
        return False
    return sig == frozenset(k for k in universe if k.base in cautious)


def skip_check(
    m: Interpretation,
    universe: tuple[AtomId, ...],
    generator: GeneratorKind = GeneratorKind.PROPAGATING,
) -> bool:
    """Linear-time acceptance for propagating-generator candidates: every
    guess is justified by a forced consequence and every non-guess refuted."""
    if generator is not GeneratorKind.PROPAGATING:
        raise GeneratorMismatchError(
            "the skip check applies to propagating-generator candidates only"
        )
    for k in universe:
        if k in m:
            if kp_atom(k.base) not in m:
                return False
        elif kpn_atom(k.base) not in m:
            return False
    return True


class _Tester:
    """Caches tester solves per signature; counts engine invocations."""

    def __init__(self, bundle: TransformBundle, stats: SolveStats):
        self.bundle = bundle
        self.stats = stats
        self._cache: dict[KSignature, StableModelSet] = {}

    def models(self, sig: KSignature) -> StableModelSet:
        if sig not in self._cache:
            self.stats.tester_calls += 1
            self._cache[sig] = tester_models(
                self.bundle.tester, sig, self.bundle.k_universe
            )
        return self._cache[sig]

    def accepts(self, sig: KSignature) -> bool:
        models = self.models(sig)
        if not models.models:
            return False
        cautious = frozenset.intersection(*models.models)
        return sig == frozenset(
            k for k in self.bundle.k_universe if k.base in cautious
        )


def build_worldview(
    bundle: TransformBundle, m: Interpretation, tester: "_Tester | None" = None
) -> WorldviewResult:
    """Expand an accepted candidate into its worldview: tester stable models
    under the signature assumption, restricted to the source atoms."""
    sig = k_signature(m, bundle.k_universe)
    if tester is None:
        models = tester_models(bundle.tester, sig, bundle.k_universe)
    else:
        models = tester.models(sig)
    atoms = atoms_of(bundle.source)
    belief = frozenset(interp & atoms for interp in models.models)
    if not belief:
        raise EmptyWorldviewError(
            "accepted candidate produced no stable models; this is a bug"
        )
    assert worldview_signature(belief, bundle.k_universe) == sig
    return WorldviewResult(signature=sig, belief_set=belief, witness=m)


def solve(
    program: Program, config: SolverConfig = SolverConfig()
) -> tuple[list[WorldviewResult], SolveStats]:
    """Enumerate worldviews of a normal-form program.

    Candidates are consumed in deterministic stable-model order; the result
    list is in discovery order.  With a worldview budget the run stops once
    the budget is filled, so a bounded run returns a prefix of the unbounded
    one.
    """
    if not is_normal_form(program):
        raise NotNormalFormError("solve requires a normal-form program")
    bundle = TransformBundle.build(program)
    return solve_bundle(bundle, config)


def solve_bundle(
    bundle: TransformBundle, config: SolverConfig = SolverConfig()
) -> tuple[list[WorldviewResult], SolveStats]:
    stats = SolveStats()
    tester = _Tester(bundle, stats)
    generator = bundle.generator(config.generator)
    results: list[WorldviewResult] = []
    seen: set[KSignature] = set()
    for m in enumerate_stable_models(generator):
        stats.candidates += 1
        sig = k_signature(m, bundle.k_universe)
        if config.generator is GeneratorKind.PROPAGATING and skip_check(
            m, bundle.k_universe
        ):
            stats.tests_skipped += 1
            accepted = True
            if config.verify_skips and not tester.accepts(sig):
                raise SkipSoundnessError(
                    "skip check accepted a candidate the tester rejects: "
                    f"{sorted(a.symbol for a in m)}"
                )
        else:
            stats.tests_run += 1
            accepted = tester.accepts(sig)
        if not accepted or sig in seen:
            continue
        seen.add(sig)
        results.append(build_worldview(bundle, m, tester))
        stats.worldviews += 1
        if config.max_worldviews is not None and len(results) >= config.max_worldviews:
            break
    return results, stats
