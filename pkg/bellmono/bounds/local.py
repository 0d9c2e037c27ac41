"""Local-realistic bound by enumeration of deterministic strategies."""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple

from bellmono.config.settings import Config, config
from bellmono.core.behavior import Behavior, deterministic_behavior
from bellmono.core.functional import BellFunctional, evaluate, probability_form
from bellmono.core.scenario import Index, Scenario, unravel
from bellmono.errors import CapExceededError

# settings tuple -> {outcomes tuple: coefficient}
SettingsTerms = List[Tuple[Index, Dict[Index, Fraction]]]


@dataclass(frozen=True)
class DeterministicStrategy:
    """Per party, the outcome produced for each of its settings."""

    responses: Tuple[Tuple[int, ...], ...]

    def outcomes(self, settings: Sequence[int]) -> Index:
        return tuple(self.responses[i][s] for i, s in enumerate(settings))

    def behavior(self, scenario: Scenario) -> Behavior:
        return deterministic_behavior(scenario, self.responses)

    def describe(self) -> str:
        return " ".join(
            f"party{i}:" + ",".join(str(o) for o in party) for i, party in enumerate(self.responses)
        )


def strategy_count(scenario: Scenario) -> int:
    """Π_i outcomes_i ** settings_i."""
    return prod(p.outcomes ** p.settings for p in scenario.parties)


def strategy_radices(scenario: Scenario) -> Tuple[int, ...]:
    """Digit bases of the strategy counter: party 0 first, then each party's settings in order."""
    return tuple(p.outcomes for p in scenario.parties for _ in range(p.settings))


def strategy_at(scenario: Scenario, index: int) -> DeterministicStrategy:
    """The index-th strategy of the mixed-radix counter (first digit most significant)."""
    digits = unravel(index, strategy_radices(scenario))
    responses = []
    offset = 0
    for party in scenario.parties:
        responses.append(tuple(digits[offset:offset + party.settings]))
        offset += party.settings
    return DeterministicStrategy(tuple(responses))


def _settings_terms(f: BellFunctional) -> SettingsTerms:
    grouped: Dict[Index, Dict[Index, Fraction]] = {}
    for (settings, outcomes), c in f.terms.items():
        grouped.setdefault(settings, {})[outcomes] = c
    return sorted(grouped.items())


def _best_in_range(
    scenario: Scenario,
    terms: SettingsTerms,
    start: int,
    stop: int
) -> Tuple[Fraction, int]:
    """Best (value, first index) among strategies start..stop-1."""
    radices = strategy_radices(scenario)
    offsets = []
    offset = 0
    for party in scenario.parties:
        offsets.append(offset)
        offset += party.settings

    best_value: Optional[Fraction] = None
    best_index = start
    zero = Fraction(0)
    for index in range(start, stop):
        digits = unravel(index, radices)
        value = zero
        for settings, coefficients in terms:
            outcomes = tuple(digits[offsets[i] + s] for i, s in enumerate(settings))
            c = coefficients.get(outcomes)
            if c is not None:
                value += c
        if best_value is None or value > best_value:
            best_value, best_index = value, index
    return best_value, best_index


class LocalBoundEnumerator:
    """
    Exhaustive search over deterministic local strategies.

    The strategy space is split into fixed-size chunks; with more than one
    worker the chunks are scanned in a process pool. Chunk results are
    combined by maximum value, ties going to the smallest strategy index,
    so the witness does not depend on the partitioning.
    """

    def __init__(self, cfg: Config = config):
        self.config = cfg
        self.enumerated = 0

    def run(self, f: BellFunctional) -> Tuple[Fraction, DeterministicStrategy]:
        scenario = f.scenario
        total = strategy_count(scenario)
        if total > self.config.STRATEGY_CAP:
            raise CapExceededError("deterministic strategy", total, self.config.STRATEGY_CAP, "bounds")

        terms = _settings_terms(probability_form(f))
        chunk = max(1, self.config.ENUMERATION_CHUNK)
        ranges = [(start, min(start + chunk, total)) for start in range(0, total, chunk)]

        workers = self.config.ENUMERATION_WORKERS
        if workers > 1 and len(ranges) > 1:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                results = list(executor.map(
                    _best_in_range,
                    [scenario] * len(ranges),
                    [terms] * len(ranges),
                    [start for start, _ in ranges],
                    [stop for _, stop in ranges],
                ))
        else:
            results = [_best_in_range(scenario, terms, start, stop) for start, stop in ranges]

        self.enumerated += total
        value, index = min(results, key=lambda result: (-result[0], result[1]))
        return value, strategy_at(scenario, index)


def local_bound(f: BellFunctional, cfg: Config = config) -> Tuple[Fraction, DeterministicStrategy]:
    """
    Exact maximum of f over deterministic local strategies.

    Correlator-form functionals are expanded first.

    Returns:
        (value, first maximizing strategy in counter order)

    Raises:
        CapExceededError: more strategies than STRATEGY_CAP
    """
    return LocalBoundEnumerator(cfg).run(f)


def strategy_value(f: BellFunctional, strategy: DeterministicStrategy) -> Fraction:
    return evaluate(f, strategy.behavior(f.scenario))
