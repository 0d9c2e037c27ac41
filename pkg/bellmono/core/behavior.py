"""Behaviors: dense tables of conditional probabilities P(outcomes | settings)."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from bellmono.core.rational import format_rational
from bellmono.core.scenario import Index, Scenario
from bellmono.errors import BehaviorError, ScenarioMismatchError

_to_fraction = np.frompyfunc(Fraction, 1, 1)


def _fraction_table(values, shape: Index) -> np.ndarray:
    table = np.asarray(values, dtype=object)
    if table.shape != shape:
        if table.size != int(np.prod(shape)):
            raise BehaviorError(f"table has {table.size} entries, scenario needs {int(np.prod(shape))}")
        table = table.reshape(shape)
    table = np.asarray(_to_fraction(table), dtype=object).reshape(shape)
    table.flags.writeable = False
    return table


@dataclass(frozen=True, eq=False)
class Behavior:
    """
    Conditional probability table over a scenario.

    ``table`` has shape ``settings_shape + outcomes_shape``; flattening it in
    C order gives the settings-major lexicographic layout of the documents.
    Construction only checks the shape: use ``validate_behavior`` for the
    probability invariants.
    """

    scenario: Scenario
    table: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'table', _fraction_table(self.table, self.scenario.table_shape))

    @classmethod
    def from_entries(cls, scenario: Scenario, entries: Sequence) -> 'Behavior':
        """Build from a flat settings-major list of entries."""
        return cls(scenario, np.array(list(entries), dtype=object))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Behavior):
            return NotImplemented
        return self.scenario == other.scenario and bool(np.all(self.table == other.table))

    __hash__ = None

    def entries(self) -> List[Fraction]:
        """Flat settings-major list of entries."""
        return list(self.table.reshape(-1))

    def probability(self, settings: Sequence[int], outcomes: Sequence[int]) -> Fraction:
        return self.table[tuple(settings) + tuple(outcomes)]

    def marginal(
        self,
        parties: Sequence[int],
        fixed_settings: Optional[Dict[int, int]] = None
    ) -> 'Behavior':
        """
        Marginal behavior of a subset of parties.

        Discarded parties' outcomes are summed out; their settings are held at
        ``fixed_settings`` (setting 0 when not given). On a non-signaling
        behavior the result does not depend on those settings.

        Args:
            parties: Kept parties, in the order they appear in the result
            fixed_settings: Setting per discarded party

        Returns:
            Behavior on the sub-scenario of the kept parties
        """
        n = self.scenario.num_parties
        keep = list(parties)
        fixed = fixed_settings or {}
        drop = [i for i in range(n) if i not in keep]

        table = self.table
        if drop:
            table = table.sum(axis=tuple(n + i for i in drop))
            index = tuple(fixed.get(i, 0) if i in drop else slice(None) for i in range(n))
            table = table[index]

        ordered = sorted(keep)
        k = len(keep)
        perm = [ordered.index(p) for p in keep] + [k + ordered.index(p) for p in keep]
        return Behavior(self.scenario.subscenario(keep), np.asarray(table, dtype=object).transpose(perm))

    def to_frame(self) -> pd.DataFrame:
        """Render as a settings x outcomes table of exact rationals."""
        settings = [",".join(map(str, s)) for s in self.scenario.settings_tuples()]
        outcomes = [",".join(map(str, o)) for o in self.scenario.outcomes_tuples()]
        flat = self.table.reshape(self.scenario.joint_settings, self.scenario.joint_outcomes)
        cells = [[format_rational(v) for v in row] for row in flat]
        frame = pd.DataFrame(cells, index=settings, columns=outcomes)
        frame.index.name = "settings"
        frame.columns.name = "outcomes"
        return frame


@dataclass(frozen=True)
class NsWitness:
    """Evidence that a party's setting changes the others' marginal."""

    party: int
    settings_pair: Tuple[int, int]
    other_settings: Index
    other_outcomes: Index
    difference: Fraction

    def describe(self) -> str:
        s, t = self.settings_pair
        return (
            f"party {self.party} setting {s} vs {t}: marginal of the other parties at "
            f"settings {self.other_settings}, outcomes {self.other_outcomes} differs by {format_rational(self.difference)}"
        )


@dataclass(frozen=True)
class NsVerdict:
    nonsignaling: bool
    witness: Optional[NsWitness] = None

    def __bool__(self) -> bool:
        return self.nonsignaling


def validate_behavior(p: Behavior) -> None:
    """
    Check non-negativity and per-setting normalization exactly.

    Raises:
        BehaviorError: naming the first offending index
    """
    n = p.scenario.num_parties
    negative = np.argwhere(p.table < 0)
    if len(negative):
        index = tuple(int(i) for i in negative[0])
        raise BehaviorError(
            f"negative entry {format_rational(p.table[index])} at settings {index[:n]} outcomes {index[n:]}",
            index=index, context="bell-core")

    sums = p.table.sum(axis=tuple(range(n, 2 * n)))
    unnormalized = np.argwhere(sums != 1)
    if len(unnormalized):
        index = tuple(int(i) for i in unnormalized[0])
        raise BehaviorError(
            f"settings {index} sum to {format_rational(sums[index])}, expected 1",
            index=index, context="bell-core")


def is_nonsignaling(p: Behavior) -> NsVerdict:
    """
    Exact no-signaling test.

    For every party, the marginal of all the other parties must be the same
    for every setting of that party. Each setting is compared with setting 0.

    Returns:
        NsVerdict, with the first violation found (C order) as witness
    """
    n = p.scenario.num_parties
    if n == 1:
        return NsVerdict(True)

    for party in range(n):
        others = p.table.sum(axis=n + party)
        reference = np.take(others, 0, axis=party)
        for setting in range(1, p.scenario.parties[party].settings):
            current = np.take(others, setting, axis=party)
            mismatch = np.argwhere(current != reference)
            if len(mismatch):
                index = tuple(int(i) for i in mismatch[0])
                witness = NsWitness(
                    party=party,
                    settings_pair=(0, setting),
                    other_settings=index[:n - 1],
                    other_outcomes=index[n - 1:],
                    difference=current[index] - reference[index],
                )
                return NsVerdict(False, witness)
    return NsVerdict(True)


def uniform_behavior(scenario: Scenario) -> Behavior:
    return Behavior(scenario, np.full(scenario.table_shape, Fraction(1, scenario.joint_outcomes), dtype=object))


def deterministic_behavior(scenario: Scenario, strategy: Sequence[Sequence[int]]) -> Behavior:
    """
    Behavior of a deterministic local strategy.

    Args:
        scenario: Scenario
        strategy: Per party, the outcome returned for each setting

    Returns:
        0/1 behavior
    """
    if len(strategy) != scenario.num_parties:
        raise ScenarioMismatchError(
            f"strategy covers {len(strategy)} parties, scenario has {scenario.num_parties}", "bell-core")
    for party, (responses, spec) in enumerate(zip(strategy, scenario.parties)):
        if len(responses) != spec.settings or any(not 0 <= o < spec.outcomes for o in responses):
            raise ScenarioMismatchError(f"party {party}: invalid responses {tuple(responses)}", "bell-core")

    table = np.full(scenario.table_shape, Fraction(0), dtype=object)
    for settings in scenario.settings_tuples():
        outcomes = tuple(strategy[i][s] for i, s in enumerate(settings))
        table[settings + outcomes] = Fraction(1)
    return Behavior(scenario, table)


def product_behavior(parts: Sequence[Behavior]) -> Behavior:
    """
    Independent composition: parties of ``parts[0]`` first, then ``parts[1]``, ...
    """
    scenario = Scenario(tuple(spec for part in parts for spec in part.scenario.parties))
    table = parts[0].table
    k = parts[0].scenario.num_parties
    for part in parts[1:]:
        m = part.scenario.num_parties
        outer = np.multiply.outer(table, part.table)
        # (S_left, O_left, S_right, O_right) -> (S_left, S_right, O_left, O_right)
        perm = (list(range(k)) + list(range(2 * k, 2 * k + m))
                + list(range(k, 2 * k)) + list(range(2 * k + m, 2 * k + 2 * m)))
        table = outer.transpose(perm)
        k += m
    return Behavior(scenario, table)


def mix_behaviors(weights: Sequence[Fraction], behaviors: Sequence[Behavior]) -> Behavior:
    """Convex combination Σ w_i p_i (weights are not required to sum to 1 here)."""
    scenario = behaviors[0].scenario
    for q in behaviors[1:]:
        if q.scenario != scenario:
            raise ScenarioMismatchError("cannot mix behaviors on different scenarios", "bell-core")
    table = sum((Fraction(w) * q.table for w, q in zip(weights, behaviors)),
                np.full(scenario.table_shape, Fraction(0), dtype=object))
    return Behavior(scenario, table)
