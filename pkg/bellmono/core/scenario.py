"""Bell scenarios: ordered parties with setting and outcome counts."""
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterator, Sequence, Tuple

from bellmono.config.settings import config
from bellmono.errors import CapExceededError, ScenarioError

Index = Tuple[int, ...]


def ravel(digits: Sequence[int], radices: Sequence[int]) -> int:
    """
    Convert mixed-radix digits to a linear index.

    The first digit is the most significant.

    Args:
        digits: One digit per position
        radices: Base of each position

    Returns:
        Linear index
    """
    index = 0
    for digit, radix in zip(digits, radices):
        index = index * radix + digit
    return index


def unravel(index: int, radices: Sequence[int]) -> Index:
    """
    Convert a linear index to mixed-radix digits (first digit most significant).

    Args:
        index: Linear index
        radices: Base of each position

    Returns:
        Tuple of digits
    """
    digits = []
    for radix in reversed(radices):
        digits.append(index % radix)
        index //= radix
    return tuple(reversed(digits))


@dataclass(frozen=True)
class PartySpec:
    """One party: number of settings and (uniform) number of outcomes."""

    settings: int
    outcomes: int


@dataclass(frozen=True)
class Scenario:
    """Ordered list of parties of a Bell experiment."""

    parties: Tuple[PartySpec, ...]

    def __post_init__(self):
        parties = tuple(
            p if isinstance(p, PartySpec) else PartySpec(*p) for p in self.parties
        )
        object.__setattr__(self, 'parties', parties)

        if not parties:
            raise ScenarioError("scenario needs at least one party", "bell-core")
        if len(parties) > config.MAX_PARTIES:
            raise CapExceededError("party", len(parties), config.MAX_PARTIES, "bell-core")
        for i, party in enumerate(parties):
            if not _is_count(party.settings) or party.settings < 1:
                raise ScenarioError(f"party {i}: settings must be >= 1, got {party.settings!r}", "bell-core")
            if not _is_count(party.outcomes) or party.outcomes < 2:
                raise ScenarioError(f"party {i}: outcomes must be >= 2, got {party.outcomes!r}", "bell-core")

        if self.joint_settings > config.MAX_JOINT_SETTINGS:
            raise CapExceededError("joint setting", self.joint_settings, config.MAX_JOINT_SETTINGS, "bell-core")
        if self.joint_outcomes > config.MAX_JOINT_OUTCOMES:
            raise CapExceededError("joint outcome", self.joint_outcomes, config.MAX_JOINT_OUTCOMES, "bell-core")
        entries = self.joint_settings * self.joint_outcomes
        if entries > config.MAX_TABLE_ENTRIES:
            raise CapExceededError("table entry", entries, config.MAX_TABLE_ENTRIES, "bell-core")

    @classmethod
    def of(cls, *parties: Tuple[int, int]) -> 'Scenario':
        """Build a scenario from (settings, outcomes) pairs."""
        return cls(tuple(PartySpec(s, o) for s, o in parties))

    @property
    def num_parties(self) -> int:
        return len(self.parties)

    @property
    def settings_shape(self) -> Index:
        return tuple(p.settings for p in self.parties)

    @property
    def outcomes_shape(self) -> Index:
        return tuple(p.outcomes for p in self.parties)

    @property
    def table_shape(self) -> Index:
        return self.settings_shape + self.outcomes_shape

    @property
    def joint_settings(self) -> int:
        return prod(self.settings_shape)

    @property
    def joint_outcomes(self) -> int:
        return prod(self.outcomes_shape)

    def is_binary(self) -> bool:
        """True when every party has exactly two outcomes."""
        return all(p.outcomes == 2 for p in self.parties)

    def settings_tuples(self) -> Iterator[Index]:
        """Iterate joint settings in lexicographic order."""
        return product(*(range(s) for s in self.settings_shape))

    def outcomes_tuples(self) -> Iterator[Index]:
        """Iterate joint outcomes in lexicographic order."""
        return product(*(range(o) for o in self.outcomes_shape))

    def check_settings(self, settings: Sequence[int]) -> Index:
        return _check_index(settings, self.settings_shape, "settings")

    def check_outcomes(self, outcomes: Sequence[int]) -> Index:
        return _check_index(outcomes, self.outcomes_shape, "outcomes")

    def subscenario(self, parties: Sequence[int]) -> 'Scenario':
        """Scenario restricted to the given parties, in the given order."""
        return Scenario(tuple(self.parties[i] for i in parties))

    def describe(self) -> str:
        return " x ".join(f"({p.settings},{p.outcomes})" for p in self.parties)


def _is_count(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _check_index(index: Sequence[int], shape: Index, what: str) -> Index:
    index = tuple(index)
    if len(index) != len(shape):
        raise ScenarioError(f"{what} tuple {index} has {len(index)} entries, scenario has {len(shape)} parties", "bell-core")
    for party, (value, size) in enumerate(zip(index, shape)):
        if not _is_count(value) or not 0 <= value < size:
            raise ScenarioError(f"{what} tuple {index}: party {party} index {value!r} outside 0..{size - 1}", "bell-core")
    return index
