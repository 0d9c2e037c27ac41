"""Flattening an N-party scenario into two composite parties along a cut."""
from dataclasses import dataclass, replace
from math import prod
from typing import Sequence, Tuple

import numpy as np

from bellmono.bounds.local import local_bound
from bellmono.config.settings import Config, config
from bellmono.core.behavior import Behavior
from bellmono.core.functional import BellFunctional, FunctionalForm, probability_form
from bellmono.core.scenario import Index, Scenario, ravel, unravel
from bellmono.errors import CapExceededError, ScenarioError


@dataclass(frozen=True)
class Bipartition:
    """Two ordered, disjoint, non-empty groups of party indices."""

    group_a: Tuple[int, ...]
    group_b: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'group_a', tuple(self.group_a))
        object.__setattr__(self, 'group_b', tuple(self.group_b))
        if not self.group_a or not self.group_b:
            raise ScenarioError("both sides of a cut must be non-empty", "multipartite")
        members = self.group_a + self.group_b
        if len(set(members)) != len(members):
            raise ScenarioError(f"cut groups overlap or repeat a party: {self.describe()}", "multipartite")

    @classmethod
    def of(cls, group_a: Sequence[int], num_parties: int) -> 'Bipartition':
        """Cut with ``group_a`` as listed and the remaining parties, ascending, as group_b."""
        return cls(tuple(group_a), tuple(i for i in range(num_parties) if i not in group_a))

    def check(self, scenario: Scenario):
        members = sorted(self.group_a + self.group_b)
        if members != list(range(scenario.num_parties)):
            raise ScenarioError(
                f"cut {self.describe()} does not cover parties 0..{scenario.num_parties - 1}", "multipartite")

    def describe(self) -> str:
        return ",".join(map(str, self.group_a)) + "|" + ",".join(map(str, self.group_b))


@dataclass(frozen=True)
class IndexMaps:
    """Forward and inverse maps between member indices and composite indices."""

    scenario: Scenario
    cut: Bipartition
    flat: Scenario

    def _radices(self, group: Tuple[int, ...], kind: str) -> Tuple[int, ...]:
        shape = self.scenario.settings_shape if kind == "settings" else self.scenario.outcomes_shape
        return tuple(shape[i] for i in group)

    def _forward(self, index: Sequence[int], kind: str) -> Index:
        return tuple(
            ravel([index[i] for i in group], self._radices(group, kind))
            for group in (self.cut.group_a, self.cut.group_b)
        )

    def _inverse(self, composite: Sequence[int], kind: str) -> Index:
        index = [0] * self.scenario.num_parties
        for value, group in zip(composite, (self.cut.group_a, self.cut.group_b)):
            for party, digit in zip(group, unravel(value, self._radices(group, kind))):
                index[party] = digit
        return tuple(index)

    def settings_forward(self, settings: Sequence[int]) -> Index:
        return self._forward(settings, "settings")

    def settings_inverse(self, composite: Sequence[int]) -> Index:
        return self._inverse(composite, "settings")

    def outcomes_forward(self, outcomes: Sequence[int]) -> Index:
        return self._forward(outcomes, "outcomes")

    def outcomes_inverse(self, composite: Sequence[int]) -> Index:
        return self._inverse(composite, "outcomes")


def flattened_scenario(scenario: Scenario, cut: Bipartition, cfg: Config = config) -> Scenario:
    """
    Two composite parties; member indices combine in mixed radix, first
    listed member most significant.

    Raises:
        CapExceededError: a composite setting or outcome count above FLATTEN_CAP
    """
    cut.check(scenario)
    parties = []
    for group in (cut.group_a, cut.group_b):
        settings = prod(scenario.parties[i].settings for i in group)
        outcomes = prod(scenario.parties[i].outcomes for i in group)
        for what, count in (("composite setting", settings), ("composite outcome", outcomes)):
            if count > cfg.FLATTEN_CAP:
                raise CapExceededError(what, count, cfg.FLATTEN_CAP, "multipartite")
        parties.append((settings, outcomes))
    return Scenario.of(*parties)


def flatten_bipartition(
    f: BellFunctional,
    cut: Bipartition,
    cfg: Config = config
) -> Tuple[BellFunctional, IndexMaps]:
    """
    Bipartite functional on the composite parties of ``cut``.

    Correlator coefficients are expanded first (composite parties are not
    binary-outcome in general).

    Returns:
        (flattened functional, index maps)
    """
    maps = IndexMaps(f.scenario, cut, flattened_scenario(f.scenario, cut, cfg))
    g = probability_form(f)
    triples = [
        (maps.settings_forward(settings), maps.outcomes_forward(outcomes), c)
        for (settings, outcomes), c in g.terms.items()
    ]
    label = f"{f.label}[{cut.describe()}]" if f.label else ""
    flat = BellFunctional.from_terms(maps.flat, triples, g.bound, FunctionalForm.PROBABILITY, label)
    return flat, maps


def flatten_behavior(p: Behavior, cut: Bipartition, cfg: Config = config) -> Behavior:
    """The same index bijection applied to a probability table."""
    flat = flattened_scenario(p.scenario, cut, cfg)
    n = p.scenario.num_parties
    order = (list(cut.group_a) + list(cut.group_b)
             + [n + i for i in cut.group_a] + [n + i for i in cut.group_b])
    table = np.asarray(p.table).transpose(order).reshape(flat.table_shape)
    return Behavior(flat, table)


def flatten_with_local_bound(
    f: BellFunctional,
    cut: Bipartition,
    cfg: Config = config
) -> Tuple[BellFunctional, IndexMaps]:
    """
    Flatten, then replace the bound by the local bound across the cut.

    A composite party may coordinate its members' outcomes, so the local
    bound of the flattened functional can exceed the N-party bound (Mermin
    at {A,B}|{C}: 4 instead of 2). This is the R that the monogamy relation
    of the flattened functional is stated with.
    """
    flat, maps = flatten_bipartition(f, cut, cfg)
    value, _ = local_bound(flat, cfg)
    return replace(flat, bound=value), maps
