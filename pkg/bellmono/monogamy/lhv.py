"""Local hidden-variable model reproducing the fixed-settings slice of B_m."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Tuple

from bellmono.core.behavior import Behavior, is_nonsignaling
from bellmono.core.scenario import Index
from bellmono.errors import BehaviorError, ScenarioMismatchError, SignalingError
from bellmono.monogamy.setup import MonogamySetup, chain_functional, fixed_bob_settings


@dataclass(frozen=True)
class LhvModel:
    """
    Hidden variable = the Bobs' joint outcome vector b⃗.

    ``hidden[b⃗]`` is its weight; ``responses[(b⃗, x)][a]`` is Alice's
    response distribution. The model describes P(a, b⃗ | x) at the Bobs'
    settings ``bob_settings`` of chain ``chain``.
    """

    chain: int
    bob_settings: Index
    hidden: Mapping[Index, Fraction]
    responses: Mapping[Tuple[Index, int], Tuple[Fraction, ...]]

    def probability(self, x: int, a: int, bobs: Index) -> Fraction:
        bobs = tuple(bobs)
        return self.hidden[bobs] * self.responses[(bobs, x)][a]

    def check(self):
        """
        Raises:
            BehaviorError: weights or a response distribution are not a probability distribution
        """
        if any(w < 0 for w in self.hidden.values()) or sum(self.hidden.values(), Fraction(0)) != 1:
            raise BehaviorError("hidden weights must be >= 0 and sum to 1", context="monogamy")
        for key, distribution in self.responses.items():
            if any(v < 0 for v in distribution) or sum(distribution, Fraction(0)) != 1:
                raise BehaviorError(f"response distribution at {key} is not normalized", context="monogamy")


def fixed_setting_lhv(setup: MonogamySetup, p: Behavior, m: int) -> LhvModel:
    """
    LHV model of p restricted to the Bobs' settings of B_m.

    P(b⃗) is the Bobs' marginal at those settings (any Alice setting gives
    the same value on a non-signaling p); P(a | b⃗, x) = p(a, b⃗ | x) / P(b⃗),
    uniform where P(b⃗) = 0.

    Raises:
        SignalingError: p is signaling
    """
    setup.check_chain(m)
    if p.scenario != setup.extended:
        raise ScenarioMismatchError("behavior is not on the extended scenario", "monogamy")
    verdict = is_nonsignaling(p)
    if not verdict:
        raise SignalingError(
            f"LHV reconstruction needs a non-signaling behavior: {verdict.witness.describe()}",
            verdict.witness, "monogamy")

    ybar = fixed_bob_settings(setup.n, m)
    alice = setup.alice
    uniform = tuple(Fraction(1, alice.outcomes) for _ in range(alice.outcomes))
    bob_outcomes = setup.extended.subscenario(range(1, setup.n + 1)).outcomes_tuples()

    hidden = {}
    responses = {}
    for bobs in bob_outcomes:
        weight = sum((p.probability((0,) + ybar, (a,) + bobs) for a in range(alice.outcomes)), Fraction(0))
        hidden[bobs] = weight
        for x in range(alice.settings):
            if weight:
                responses[(bobs, x)] = tuple(
                    p.probability((x,) + ybar, (a,) + bobs) / weight for a in range(alice.outcomes)
                )
            else:
                responses[(bobs, x)] = uniform
    return LhvModel(m, ybar, hidden, responses)


def reconstruction_residual(setup: MonogamySetup, model: LhvModel, p: Behavior) -> Fraction:
    """max |model P(a, b⃗ | x) - p(a, b⃗ | x, fixed settings)| over the slice."""
    residual = Fraction(0)
    for (bobs, x), distribution in model.responses.items():
        for a in range(len(distribution)):
            observed = p.probability((x,) + model.bob_settings, (a,) + bobs)
            residual = max(residual, abs(model.probability(x, a, bobs) - observed))
    return residual


def lhv_chain_value(setup: MonogamySetup, model: LhvModel) -> Fraction:
    """B_m evaluated on the model's own distribution."""
    f = chain_functional(setup, model.chain)
    value = Fraction(0)
    for (settings, outcomes), c in f.terms.items():
        value += c * model.probability(settings[0], outcomes[0], outcomes[1:])
    return value
