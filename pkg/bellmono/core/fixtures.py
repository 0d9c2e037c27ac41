"""Built-in scenarios, functionals and behaviors."""
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Union

import numpy as np

from bellmono.core.behavior import Behavior, deterministic_behavior, uniform_behavior
from bellmono.core.functional import BellFunctional, FunctionalForm
from bellmono.core.rational import inv_sqrt2_approximation
from bellmono.core.scenario import Scenario

Fixture = Union[Scenario, BellFunctional, Behavior]

# 0-based setting pairs of the chained inequality E11+E21+E22+E32+E33-E13
CHAINED3_PAIRS = ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2))
CHAINED3_ANTI = (0, 2)


def chsh_scenario() -> Scenario:
    return Scenario.of((2, 2), (2, 2))


def chained3_scenario() -> Scenario:
    return Scenario.of((3, 2), (3, 2))


def mermin_scenario() -> Scenario:
    return Scenario.of((2, 2), (2, 2), (2, 2))


def chsh_prob() -> BellFunctional:
    """P(a=b|00) + P(a=b|01) + P(a=b|10) + P(a≠b|11) <= 3."""
    scenario = chsh_scenario()
    terms = [
        ((x, y), (a, b), 1)
        for x, y in scenario.settings_tuples()
        for a, b in scenario.outcomes_tuples()
        if a ^ b == x * y
    ]
    return BellFunctional.from_terms(scenario, terms, 3, label="chsh-prob")


def chsh_corr() -> BellFunctional:
    """E00 + E01 + E10 - E11 <= 2."""
    terms = [((0, 0), (), 1), ((0, 1), (), 1), ((1, 0), (), 1), ((1, 1), (), -1)]
    return BellFunctional.from_terms(chsh_scenario(), terms, 2, FunctionalForm.CORRELATOR, "chsh-corr")


def chained3_corr() -> BellFunctional:
    """Chained inequality with three settings per side, correlator form, R = 4."""
    terms = [(pair, (), 1) for pair in CHAINED3_PAIRS] + [(CHAINED3_ANTI, (), -1)]
    return BellFunctional.from_terms(chained3_scenario(), terms, 4, FunctionalForm.CORRELATOR, "chained3-corr")


def chained3_prob() -> BellFunctional:
    """Chained inequality as a sum of agreement / disagreement probabilities, R = 5."""
    scenario = chained3_scenario()
    terms = []
    for a, b in scenario.outcomes_tuples():
        if a == b:
            terms.extend((pair, (a, b), 1) for pair in CHAINED3_PAIRS)
        else:
            terms.append((CHAINED3_ANTI, (a, b), 1))
    return BellFunctional.from_terms(scenario, terms, 5, label="chained3-prob")


def mermin() -> BellFunctional:
    """E001 + E010 + E100 - E111 <= 2."""
    terms = [((0, 0, 1), (), 1), ((0, 1, 0), (), 1), ((1, 0, 0), (), 1), ((1, 1, 1), (), -1)]
    return BellFunctional.from_terms(mermin_scenario(), terms, 2, FunctionalForm.CORRELATOR, "mermin")


def pr_box() -> Behavior:
    """P(a,b|x,y) = 1/2 iff a⊕b = xy."""
    scenario = chsh_scenario()
    table = np.full(scenario.table_shape, Fraction(0), dtype=object)
    for x, y, a, b in np.ndindex(*scenario.table_shape):
        if a ^ b == x * y:
            table[x, y, a, b] = Fraction(1, 2)
    return Behavior(scenario, table)


def tsirelson() -> Behavior:
    """
    P(a,b|x,y) = (1 + (-1)^{a⊕b⊕xy} r)/4 with r the rational approximation of 1/√2.
    """
    r = inv_sqrt2_approximation()
    scenario = chsh_scenario()
    table = np.full(scenario.table_shape, Fraction(0), dtype=object)
    for x, y, a, b in np.ndindex(*scenario.table_shape):
        sign = -1 if (a ^ b ^ (x * y)) else 1
        table[x, y, a, b] = (1 + sign * r) / 4
    return Behavior(scenario, table)


def signaling_example() -> Behavior:
    """P(a,b|x,y) = [a=0][b=x]: Bob's outcome reveals Alice's setting."""
    scenario = chsh_scenario()
    table = np.full(scenario.table_shape, Fraction(0), dtype=object)
    for x, y in scenario.settings_tuples():
        table[x, y, 0, x] = Fraction(1)
    return Behavior(scenario, table)


def double_pr() -> Behavior:
    """
    Alice and two Bobs: a uniform, b1 = a ⊕ x·y1, b2 = a ⊕ x·y2.

    Each Alice-Bob pair is a PR box at the canonical settings, and the table is
    signaling (b1 ⊕ b2 = x·(y1 ⊕ y2) depends on Alice's setting).
    """
    scenario = mermin_scenario()
    table = np.full(scenario.table_shape, Fraction(0), dtype=object)
    for x, y1, y2 in scenario.settings_tuples():
        for a in range(2):
            table[x, y1, y2, a, a ^ (x * y1), a ^ (x * y2)] = Fraction(1, 2)
    return Behavior(scenario, table)


FIXTURES: Dict[str, Callable[[], Fixture]] = {
    'chsh-scenario': chsh_scenario,
    'chained3-scenario': chained3_scenario,
    'mermin-scenario': mermin_scenario,
    'chsh-prob': chsh_prob,
    'chsh-corr': chsh_corr,
    'chained3-corr': chained3_corr,
    'chained3-prob': chained3_prob,
    'mermin': mermin,
    'pr-box': pr_box,
    'uniform': lambda: uniform_behavior(chsh_scenario()),
    'deterministic-zero': lambda: deterministic_behavior(chsh_scenario(), ((0, 0), (0, 0))),
    'tsirelson': tsirelson,
    'signaling-example': signaling_example,
    'double-pr': double_pr,
}


@lru_cache(maxsize=None)
def _library() -> Dict[str, Fixture]:
    return {name: build() for name, build in FIXTURES.items()}


def fixtures() -> Dict[str, Fixture]:
    """Named library of every built-in fixture (values are immutable)."""
    return dict(_library())
