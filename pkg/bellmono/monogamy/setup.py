"""
Extended scenario (Alice plus n copies of Bob) and the chained expressions.

Bobs are numbered m = 1..n (party index m of the extended scenario, Alice
is party 0); settings and outcomes are 0-based. In the chained expression
B_m, Bob j takes setting (j - m + 1) mod n, so that base setting y is
measured by Bob (y + m - 1) mod n. Both directions of that rule live in
``fixed_bob_settings`` / ``bob_for_setting``.
"""
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import product
from typing import List

from bellmono.bounds.local import DeterministicStrategy
from bellmono.core.behavior import Behavior, deterministic_behavior
from bellmono.core.functional import BellFunctional, FunctionalForm, normalize_nonneg, probability_form
from bellmono.core.scenario import Index, Scenario
from bellmono.errors import FunctionalFormError, ScenarioError


@dataclass(frozen=True)
class MonogamySetup:
    """
    One Alice and n Bobs, each Bob a copy of the base functional's Bob.

    ``base`` is in non-negative probability form. ``offset`` is the constant
    added by normalize_nonneg when the setup was prepared from a signed
    functional (0 otherwise); ``source_form`` is the form of that input.
    """

    base: BellFunctional
    n: int
    extended: Scenario
    offset: Fraction = Fraction(0)
    source_form: FunctionalForm = FunctionalForm.PROBABILITY

    @property
    def bound(self) -> Fraction:
        """R of the non-negative base functional."""
        return self.base.bound

    @property
    def monogamy_bound(self) -> Fraction:
        return self.n * self.bound

    @property
    def signed_bound(self) -> Fraction:
        """n·R_g − n·C: the monogamy bound in the source functional's own convention."""
        return self.n * (self.bound - self.offset)

    @property
    def alice(self):
        return self.extended.parties[0]

    @property
    def bob(self):
        return self.extended.parties[1]

    def check_chain(self, m: int) -> int:
        if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= self.n:
            raise ScenarioError(f"Bob index m must be in 1..{self.n}, got {m!r}", "monogamy")
        return m


def extend_scenario(f: BellFunctional) -> MonogamySetup:
    """
    Build the Alice + n Bobs scenario, n being Bob's setting count.

    Raises:
        ScenarioError: f is not bipartite
        FunctionalFormError: f is in correlator form, has a negative
            coefficient or a negative bound (apply normalize_nonneg first)
    """
    if not f.is_bipartite():
        raise ScenarioError(f"monogamy needs a bipartite functional, got {f.scenario.num_parties} parties", "monogamy")
    if f.form is not FunctionalForm.PROBABILITY or not f.is_nonnegative():
        raise FunctionalFormError(
            "monogamy needs a non-negative probability-form functional; "
            "apply expand_correlators and normalize_nonneg first", "monogamy")
    if f.bound < 0:
        raise FunctionalFormError(f"monogamy needs a bound R >= 0, got {f.bound}", "monogamy")

    alice, bob = f.scenario.parties
    n = bob.settings
    return MonogamySetup(base=f, n=n, extended=Scenario((alice,) + (bob,) * n))


def prepare_monogamy(f: BellFunctional) -> MonogamySetup:
    """Expand correlators, normalize to non-negative form, then extend."""
    g, offset = normalize_nonneg(probability_form(f))
    return replace(extend_scenario(g), offset=offset, source_form=f.form)


def fixed_bob_settings(n: int, m: int) -> Index:
    """Settings of Bobs 1..n in B_m: Bob j (0-based) measures (j - m + 1) mod n."""
    return tuple((j - (m - 1)) % n for j in range(n))


def bob_for_setting(n: int, m: int, y: int) -> int:
    """0-based Bob that measures base setting y in B_m: (y + m - 1) mod n."""
    return (y + m - 1) % n


@dataclass(frozen=True)
class ChainTerm:
    """One base term α(x,y,a,b) relabeled onto Bob ``bob`` (0-based) of B_m."""

    alice_setting: int
    alice_outcome: int
    bob: int
    bob_setting: int
    bob_outcome: int
    coefficient: Fraction


def chain_terms(setup: MonogamySetup, m: int) -> List[ChainTerm]:
    """One relabeled term per base term, in base-term order."""
    setup.check_chain(m)
    return [
        ChainTerm(x, a, bob_for_setting(setup.n, m, y), y, b, c)
        for ((x, y), (a, b)), c in setup.base.terms.items()
    ]


def chain_functional(setup: MonogamySetup, m: int) -> BellFunctional:
    """
    B_m on the extended scenario, in aggregated form.

    Every term sits at settings (x, fixed Bob settings of B_m); the outcomes
    of the Bobs a term does not involve are summed explicitly.
    """
    setup.check_chain(m)
    settings_tail = fixed_bob_settings(setup.n, m)
    others = range(setup.bob.outcomes)
    triples = []
    for term in chain_terms(setup, m):
        settings = (term.alice_setting,) + settings_tail
        for rest in product(others, repeat=setup.n - 1):
            bobs = list(rest)
            bobs.insert(term.bob, term.bob_outcome)
            triples.append((settings, (term.alice_outcome,) + tuple(bobs), term.coefficient))
    return BellFunctional.from_terms(
        setup.extended, triples, setup.bound, FunctionalForm.PROBABILITY, f"{setup.base.label}:B{m}")


def pair_functional(setup: MonogamySetup, m: int) -> BellFunctional:
    """
    B(A, Bob m) as a functional on the extended scenario, with the other
    Bobs held at setting 0 and their outcomes summed. On non-signaling
    behaviors its value does not depend on that choice.
    """
    setup.check_chain(m)
    others = range(setup.bob.outcomes)
    triples = []
    for ((x, y), (a, b)), c in setup.base.terms.items():
        settings = [0] * setup.n
        settings[m - 1] = y
        for rest in product(others, repeat=setup.n - 1):
            bobs = list(rest)
            bobs.insert(m - 1, b)
            triples.append(((x,) + tuple(settings), (a,) + tuple(bobs), c))
    return BellFunctional.from_terms(
        setup.extended, triples, setup.bound, FunctionalForm.PROBABILITY, f"{setup.base.label}:A-B{m}")


def clone_strategy(setup: MonogamySetup, strategy: DeterministicStrategy) -> Behavior:
    """Extended behavior where Alice plays her part and every Bob copies Bob's responses."""
    alice, bob = strategy.responses
    return deterministic_behavior(setup.extended, (alice,) + (bob,) * setup.n)
