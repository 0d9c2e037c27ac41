"""No-signaling polytope: exact maximization and seeded vertex sampling."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from bellmono.config.settings import Config, config
from bellmono.core.behavior import Behavior, mix_behaviors
from bellmono.core.functional import BellFunctional, probability_form
from bellmono.core.scenario import Index, Scenario, ravel
from bellmono.errors import CapExceededError, LpError, ScenarioMismatchError
from bellmono.lp.simplex import LpProblem, LpSolution, LpStatus, basis_duals, solve_lp

Constraint = Tuple[Tuple[Fraction, ...], Fraction]
# (parties, their settings, their outcomes), every outcome below the party's last one
Coordinate = Tuple[Index, Index, Index]


@dataclass(frozen=True)
class NsCoordinates:
    """
    Collins-Gisin coordinates of the no-signaling polytope.

    One coordinate per marginal P(a_U | x_U) over a non-empty set of parties U
    with no party of U at its last outcome. Every table entry is an
    inclusion-exclusion combination of coordinates plus a constant, and a
    table is no-signaling exactly when it has this form; the polytope is the
    set of coordinate vectors whose entries are all non-negative.
    """

    scenario: Scenario
    coordinates: Tuple[Coordinate, ...]
    rows: Tuple[Dict[int, int], ...]  # per table entry: coordinate -> coefficient
    constants: Tuple[int, ...]  # per table entry

    @property
    def dimension(self) -> int:
        return len(self.coordinates)

    def entries(self, q: Sequence[Fraction]) -> List[Fraction]:
        """Flat table (settings-major) of the coordinate vector q."""
        return [
            Fraction(constant) + sum((c * q[k] for k, c in row.items()), Fraction(0))
            for row, constant in zip(self.rows, self.constants)
        ]

    def of_behavior(self, p: Behavior) -> List[Fraction]:
        """Coordinates of p, read from its marginals (other parties at setting 0)."""
        if p.scenario != self.scenario:
            raise ScenarioMismatchError(
                f"behavior scenario {p.scenario.describe()} != {self.scenario.describe()}", "bounds")
        marginals = {}
        q = []
        for parties, settings, outcomes in self.coordinates:
            if parties not in marginals:
                marginals[parties] = p.marginal(list(parties))
            q.append(marginals[parties].probability(settings, outcomes))
        return q

    def pull_back(self, vector: Sequence[Fraction]) -> Tuple[List[Fraction], Fraction]:
        """
        Rewrite a linear form over the table in coordinates.

        Returns:
            (coefficients, constant) with vector·p = coefficients·q + constant
        """
        coefficients = [Fraction(0)] * self.dimension
        constant = Fraction(0)
        for weight, row, offset in zip(vector, self.rows, self.constants):
            if not weight:
                continue
            constant += weight * offset
            for k, c in row.items():
                coefficients[k] += weight * c
        return coefficients, constant


@lru_cache(maxsize=32)
def ns_coordinates(scenario: Scenario) -> NsCoordinates:
    """Coordinates and the entry-wise reconstruction map of a scenario."""
    n = scenario.num_parties
    last = [party.outcomes - 1 for party in scenario.parties]

    index: Dict[Coordinate, int] = {}
    for size in range(1, n + 1):
        for parties in combinations(range(n), size):
            settings_range = product(*(range(scenario.parties[i].settings) for i in parties))
            for settings in settings_range:
                for outcomes in product(*(range(last[i]) for i in parties)):
                    index[(parties, settings, outcomes)] = len(index)

    rows: List[Dict[int, int]] = []
    constants: List[int] = []
    for settings in scenario.settings_tuples():
        for outcomes in scenario.outcomes_tuples():
            shown = [i for i in range(n) if outcomes[i] != last[i]]
            hidden = [i for i in range(n) if outcomes[i] == last[i]]
            row: Dict[int, int] = {}
            constant = 0
            # P(last) = 1 - sum of the other outcomes, for every hidden party
            for size in range(len(hidden) + 1):
                sign = -1 if size % 2 else 1
                for swapped in combinations(hidden, size):
                    parties = tuple(sorted(shown + list(swapped)))
                    if not parties:
                        constant += sign
                        continue
                    for alternative in product(*(range(last[i]) for i in swapped)):
                        replaced = dict(zip(swapped, alternative))
                        key = (
                            parties,
                            tuple(settings[i] for i in parties),
                            tuple(replaced.get(i, outcomes[i]) for i in parties),
                        )
                        k = index[key]
                        row[k] = row.get(k, 0) + sign
            rows.append({k: c for k, c in row.items() if c})
            constants.append(constant)
    return NsCoordinates(scenario, tuple(index), tuple(rows), tuple(constants))


def functional_objective(f: BellFunctional) -> List[Fraction]:
    """Coefficient vector of f over the flat table (probability form)."""
    g = probability_form(f)
    shape = g.scenario.table_shape
    objective = [Fraction(0)] * (g.scenario.joint_settings * g.scenario.joint_outcomes)
    for (settings, outcomes), c in g.terms.items():
        objective[ravel(settings + outcomes, shape)] += c
    return objective


@dataclass(frozen=True)
class NsOptimum:
    """
    Maximizer of a linear objective over the no-signaling polytope.

    ``problem`` and ``solution`` are the LP actually solved (the dual over
    the coordinates); ``value`` = ``offset`` - ``solution.value``.
    """

    value: Fraction
    behavior: Behavior
    problem: LpProblem
    solution: LpSolution
    offset: Fraction


class NsPolytope:
    """The no-signaling polytope of one scenario, as an exact LP feasible set."""

    def __init__(self, scenario: Scenario, cfg: Config = config):
        self.scenario = scenario
        self.config = cfg
        self.num_vars = scenario.joint_settings * scenario.joint_outcomes
        if self.num_vars > cfg.LP_VARIABLE_CAP:
            raise CapExceededError("LP variable", self.num_vars, cfg.LP_VARIABLE_CAP, "bounds")
        self.coordinates = ns_coordinates(scenario)

    def problem(
        self,
        objective: Sequence[Fraction],
        extra: Sequence[Constraint] = ()
    ) -> Tuple[LpProblem, Fraction]:
        """
        LP dual of maximizing objective·p over the polytope cut by ``extra``.

        The primal is: maximize c·q subject to entries(q) >= 0 and
        e·entries(q) = v per extra equality, q free. Its dual has one row per
        coordinate; its columns are the table entries followed by a split
        free multiplier per extra equality.

        Returns:
            (problem, offset): the primal maximum is offset minus the
            problem's optimal value
        """
        coords = self.coordinates
        target, offset = coords.pull_back(objective)
        pulled = [coords.pull_back(row) + (Fraction(rhs),) for row, rhs in extra]

        columns = self.num_vars + 2 * len(pulled)
        matrix = [[0] * columns for _ in range(coords.dimension)]
        for t, row in enumerate(coords.rows):
            for k, c in row.items():
                matrix[k][t] = -c
        costs: List[Union[int, Fraction]] = [-c for c in coords.constants]
        for e, (row, constant, rhs) in enumerate(pulled):
            plus, minus = self.num_vars + 2 * e, self.num_vars + 2 * e + 1
            for k, c in enumerate(row):
                if c:
                    matrix[k][plus] = c
                    matrix[k][minus] = -c
            slack = rhs - constant
            costs += [-slack, slack]

        problem = LpProblem(columns, costs, [(matrix[k], target[k]) for k in range(coords.dimension)])
        return problem, offset

    def maximize(
        self,
        objective: Union[BellFunctional, Sequence[Fraction]],
        extra: Sequence[Constraint] = ()
    ) -> Optional[NsOptimum]:
        """
        Maximize over the polytope (optionally cut by extra equalities).

        The witness is read off the simplex multipliers of the optimal basis.

        Returns:
            NsOptimum, or None when the extra equalities make the LP infeasible

        Raises:
            LpError: the plain polytope reported infeasible or unbounded
        """
        if isinstance(objective, BellFunctional):
            if objective.scenario != self.scenario:
                raise ScenarioMismatchError(
                    f"functional scenario {objective.scenario.describe()} != {self.scenario.describe()}", "bounds")
            objective = functional_objective(objective)
        problem, offset = self.problem(objective, extra)
        solution = solve_lp(problem)
        if not solution.optimal:
            # an empty cut polytope shows up as an unbounded dual
            if extra and solution.status is LpStatus.UNBOUNDED:
                return None
            raise LpError(f"no-signaling LP returned {solution.status.value}", "bounds")

        q = [-w for w in basis_duals(problem, solution.basis)]
        behavior = Behavior.from_entries(self.scenario, self.coordinates.entries(q))
        return NsOptimum(offset - solution.value, behavior, problem, solution, offset)


def ns_optimum(f: BellFunctional, cfg: Config = config) -> NsOptimum:
    """Full LP result behind ns_bound (problem and solution kept for certificates)."""
    return NsPolytope(f.scenario, cfg).maximize(f)


def ns_bound(f: BellFunctional, cfg: Config = config) -> Tuple[Fraction, Behavior]:
    """
    Exact maximum of f over the no-signaling polytope.

    Correlator-form functionals are expanded first.

    Returns:
        (value, witness behavior attaining it)
    """
    optimum = ns_optimum(f, cfg)
    return optimum.value, optimum.behavior


def sample_ns_behavior(
    scenario: Scenario,
    seed: int,
    mixing: int,
    objective: Optional[Union[BellFunctional, Sequence[Fraction]]] = None,
    cfg: Config = config
) -> Behavior:
    """
    Seeded convex mixture of no-signaling vertices.

    Each vertex maximizes a pseudorandom objective with coefficients k/64,
    k uniform in [-64, 64]; mixture weights are random integers in [1, 64]
    normalized to sum 1. Identical arguments give identical behaviors.

    Args:
        scenario: Scenario to sample on
        seed: Generator seed, any integer (taken modulo 2**64)
        mixing: Number of vertices mixed (>= 1)
        objective: Debug hook replacing the first vertex's random objective

    Returns:
        Non-signaling behavior
    """
    if mixing < 1:
        raise ValueError(f"mixing must be >= 1, got {mixing}")
    polytope = NsPolytope(scenario, cfg)
    rng = np.random.default_rng(seed % 2**64)
    resolution = cfg.SAMPLE_RESOLUTION

    vertices = []
    for k in range(mixing):
        draws = rng.integers(-resolution, resolution, size=polytope.num_vars, endpoint=True)
        target = objective if (k == 0 and objective is not None) else [
            Fraction(int(d), resolution) for d in draws
        ]
        vertices.append(polytope.maximize(target).behavior)
    if mixing == 1:
        return vertices[0]

    raw = [int(w) for w in rng.integers(1, resolution, size=mixing, endpoint=True)]
    total = sum(raw)
    return mix_behaviors([Fraction(w, total) for w in raw], vertices)
