"""Bell functionals: sparse linear forms on behaviors, with a bound R."""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Tuple

from bellmono.core.behavior import Behavior
from bellmono.core.rational import RationalLike, as_fraction
from bellmono.core.scenario import Index, Scenario
from bellmono.errors import FunctionalFormError, ScenarioMismatchError

TermKey = Tuple[Index, Index]


class FunctionalForm(str, Enum):
    """Coefficient convention of a functional."""

    PROBABILITY = "probability"  # α(s⃗, o⃗) on P(o⃗|s⃗)
    CORRELATOR = "correlator"    # c(s⃗) on E(s⃗) = Σ (-1)^{Σo} P(o⃗|s⃗), binary outcomes only


@dataclass(frozen=True)
class BellFunctional:
    """
    Linear expression Σ coefficient × P(o⃗|s⃗) (or × E(s⃗)) with bound R.

    Terms are stored sorted by key with zero coefficients dropped, so two
    functionals with the same content compare equal.
    """

    scenario: Scenario
    terms: Mapping[TermKey, Fraction]
    bound: Fraction
    form: FunctionalForm = FunctionalForm.PROBABILITY
    label: str = field(default="", compare=False)

    def __post_init__(self):
        form = FunctionalForm(self.form)
        object.__setattr__(self, 'form', form)
        object.__setattr__(self, 'bound', as_fraction(self.bound))

        if form is FunctionalForm.CORRELATOR and not self.scenario.is_binary():
            raise FunctionalFormError(
                f"correlator form needs binary outcomes, scenario is {self.scenario.describe()}", "bell-core")

        canonical: Dict[TermKey, Fraction] = {}
        for (settings, outcomes), coefficient in self.terms.items():
            settings = self.scenario.check_settings(settings)
            if form is FunctionalForm.CORRELATOR:
                if tuple(outcomes):
                    raise FunctionalFormError(
                        f"correlator term at settings {settings} carries outcomes {tuple(outcomes)}", "bell-core")
                outcomes = ()
            else:
                outcomes = self.scenario.check_outcomes(outcomes)
            coefficient = as_fraction(coefficient)
            if coefficient:
                canonical[(settings, outcomes)] = coefficient
        object.__setattr__(self, 'terms', MappingProxyType(dict(sorted(canonical.items()))))

    @classmethod
    def from_terms(
        cls,
        scenario: Scenario,
        terms: Iterable[Tuple[Index, Index, RationalLike]],
        bound: RationalLike,
        form: FunctionalForm = FunctionalForm.PROBABILITY,
        label: str = ""
    ) -> 'BellFunctional':
        """Build from (settings, outcomes, coefficient) triples; repeated keys add up."""
        merged: Dict[TermKey, Fraction] = {}
        for settings, outcomes, coefficient in terms:
            key = (tuple(settings), tuple(outcomes))
            merged[key] = merged.get(key, Fraction(0)) + as_fraction(coefficient)
        return cls(scenario, merged, as_fraction(bound), form, label)

    def coefficient(self, settings: Index, outcomes: Index = ()) -> Fraction:
        return self.terms.get((tuple(settings), tuple(outcomes)), Fraction(0))

    def is_nonnegative(self) -> bool:
        """True when every coefficient is >= 0."""
        return all(c >= 0 for c in self.terms.values())

    def is_bipartite(self) -> bool:
        return self.scenario.num_parties == 2

    def relabel(self, label: str) -> 'BellFunctional':
        return BellFunctional(self.scenario, self.terms, self.bound, self.form, label)


def evaluate(f: BellFunctional, p: Behavior) -> Fraction:
    """
    Value of the functional on a behavior, exactly.

    Raises:
        ScenarioMismatchError: when f and p live on different scenarios
    """
    if f.scenario != p.scenario:
        raise ScenarioMismatchError(
            f"functional scenario {f.scenario.describe()} != behavior scenario {p.scenario.describe()}", "bell-core")
    f = probability_form(f)
    table = p.table
    return sum((c * table[s + o] for (s, o), c in f.terms.items()), Fraction(0))


def expand_correlators(f: BellFunctional) -> BellFunctional:
    """
    Rewrite correlator coefficients as signed probability coefficients.

    c·E(s⃗) becomes +c on outcome tuples of even parity and −c on odd ones.
    """
    if f.form is not FunctionalForm.CORRELATOR:
        raise FunctionalFormError("expand_correlators needs a correlator-form functional", "bell-core")
    triples = []
    for (settings, _), c in f.terms.items():
        for outcomes in f.scenario.outcomes_tuples():
            sign = -1 if sum(outcomes) % 2 else 1
            triples.append((settings, outcomes, sign * c))
    return BellFunctional.from_terms(f.scenario, triples, f.bound, FunctionalForm.PROBABILITY, f.label)


def probability_form(f: BellFunctional) -> BellFunctional:
    """The functional in probability coefficients (expanding correlators if needed)."""
    if f.form is FunctionalForm.CORRELATOR:
        return expand_correlators(f)
    return f


def normalize_nonneg(f: BellFunctional) -> Tuple[BellFunctional, Fraction]:
    """
    Complement substitution of negative coefficients.

    Each −c·P(o⃗|s⃗) is replaced by c·Σ_{o⃗'≠o⃗} P(o⃗'|s⃗) − c; the replacement
    coefficients are added to whatever already sits on those keys.

    Returns:
        (g, C): g has all coefficients >= 0 and bound R + C, and
        evaluate(g, p) = evaluate(f, p) + C on every behavior p
    """
    if f.form is not FunctionalForm.PROBABILITY:
        raise FunctionalFormError("normalize_nonneg needs probability coefficients; expand correlators first", "bell-core")

    merged: Dict[TermKey, Fraction] = {k: c for k, c in f.terms.items() if c > 0}
    offset = Fraction(0)
    for (settings, outcomes), c in f.terms.items():
        if c >= 0:
            continue
        offset += -c
        for other in f.scenario.outcomes_tuples():
            if other != outcomes:
                key = (settings, other)
                merged[key] = merged.get(key, Fraction(0)) - c
    return BellFunctional(f.scenario, merged, f.bound + offset, FunctionalForm.PROBABILITY, f.label), offset
