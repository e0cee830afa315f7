"""Exception hierarchy shared across the package."""


class ElpError(Exception):
    """Base class for all errors raised by this package."""


class CollisionError(ElpError):
    """A generated atom symbol clashes with an existing atom of different origin."""


class ReservedPrefixError(ElpError):
    """A user atom uses one of the reserved derived-atom prefixes."""


class NotObjectiveError(ElpError):
    """An objective-program operation received a program with subjective literals."""


class NotHornError(ElpError):
    """A Horn-only operation received a program outside the definite fragment."""


class NotNormalFormError(ElpError):
    """A transformation requires normal form (no negation under K)."""


class InconsistentAssumptionError(ElpError):
    """An assumption contains an atom both positively and negatively."""


class GeneratorMismatchError(ElpError):
    """The propagation skip check was invoked for a non-propagating generator."""


class EmptyWorldviewError(ElpError):
    """An accepted candidate produced an empty belief set (soundness bug)."""


class SkipSoundnessError(ElpError):
    """Verification mode found a skip-accepted candidate the tester rejects."""


class BudgetExceededError(ElpError):
    """A brute-force oracle was asked to enumerate beyond its configured budget."""


class ParseError(ElpError):
    """Input program text could not be parsed; carries the error diagnostics."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        summary = "; ".join(str(d) for d in self.diagnostics) or "parse error"
        super().__init__(summary)
