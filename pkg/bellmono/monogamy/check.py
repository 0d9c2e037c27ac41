"""Monogamy relation Σ_m B(A, Bob m) <= nR: behavior checks, LP maximum, trade-offs."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from bellmono.bounds.nonsignaling import NsOptimum, NsPolytope, functional_objective
from bellmono.config.settings import Config, config
from bellmono.core.behavior import Behavior, NsWitness, is_nonsignaling, validate_behavior
from bellmono.core.functional import evaluate
from bellmono.errors import ScenarioError, ScenarioMismatchError, SignalingError
from bellmono.lp.simplex import LpProblem, LpSolution
from bellmono.monogamy.setup import MonogamySetup, chain_functional, pair_functional


def _check_extended(setup: MonogamySetup, p: Behavior):
    if p.scenario != setup.extended:
        raise ScenarioMismatchError(
            f"behavior scenario {p.scenario.describe()} != extended scenario {setup.extended.describe()}", "monogamy")


def _pair_value(setup: MonogamySetup, p: Behavior, m: int) -> Fraction:
    # other Bobs held at their first setting
    return evaluate(setup.base, p.marginal([0, m]))


def pair_value(setup: MonogamySetup, p: Behavior, m: int) -> Fraction:
    """
    B(A, Bob m) on the (Alice, Bob m) marginal of p.

    Raises:
        SignalingError: p is signaling (the marginal would depend on the
            other Bobs' settings); carries the witness
    """
    setup.check_chain(m)
    _check_extended(setup, p)
    verdict = is_nonsignaling(p)
    if not verdict:
        raise SignalingError(
            f"pair marginal is ill-defined on a signaling behavior: {verdict.witness.describe()}",
            verdict.witness, "monogamy")
    return _pair_value(setup, p, m)


def chain_value(setup: MonogamySetup, p: Behavior, m: int) -> Fraction:
    _check_extended(setup, p)
    return evaluate(chain_functional(setup, m), p)


@dataclass(frozen=True)
class MonogamyReport:
    """Per-pair values and their sum against nR, with the no-signaling verdict."""

    per_pair: Tuple[Fraction, ...]
    total: Fraction
    bound: Fraction
    holds: bool
    nonsignaling: bool
    witness: Optional[NsWitness]
    offset: Fraction
    signed_total: Fraction
    signed_bound: Fraction

    @property
    def signed_per_pair(self) -> Tuple[Fraction, ...]:
        return tuple(v - self.offset for v in self.per_pair)


def monogamy_check(setup: MonogamySetup, p: Behavior) -> MonogamyReport:
    """
    Evaluate Σ_m B(A, Bob m) on p and compare it with nR exactly.

    Signaling behaviors are not refused: their pair marginals are taken
    with the other Bobs at setting 0 and the report carries the witness.

    Raises:
        BehaviorError: p violates non-negativity or normalization
    """
    _check_extended(setup, p)
    validate_behavior(p)
    verdict = is_nonsignaling(p)
    per_pair = tuple(_pair_value(setup, p, m) for m in range(1, setup.n + 1))
    total = sum(per_pair, Fraction(0))
    bound = setup.monogamy_bound
    return MonogamyReport(
        per_pair=per_pair,
        total=total,
        bound=bound,
        holds=total <= bound,
        nonsignaling=verdict.nonsignaling,
        witness=verdict.witness,
        offset=setup.offset,
        signed_total=total - setup.n * setup.offset,
        signed_bound=setup.signed_bound,
    )


def monogamy_objective(setup: MonogamySetup) -> List[Fraction]:
    """Σ_m B_m as a coefficient vector over the extended table."""
    total = functional_objective(chain_functional(setup, 1))
    for m in range(2, setup.n + 1):
        total = [a + b for a, b in zip(total, functional_objective(chain_functional(setup, m)))]
    return total


@dataclass(frozen=True)
class MonogamyLpResult:
    value: Fraction
    bound: Fraction
    witness: Behavior
    problem: LpProblem
    solution: LpSolution

    @property
    def tight(self) -> bool:
        return self.value == self.bound


def monogamy_lp_solve(setup: MonogamySetup, cfg: Config = config) -> MonogamyLpResult:
    """
    Maximize Σ_m B_m over the no-signaling polytope of the extended scenario.

    Raises:
        CapExceededError: extended table larger than LP_VARIABLE_CAP
    """
    optimum = NsPolytope(setup.extended, cfg).maximize(monogamy_objective(setup))
    return MonogamyLpResult(optimum.value, setup.monogamy_bound, optimum.behavior, optimum.problem, optimum.solution)


def monogamy_lp_max(setup: MonogamySetup, cfg: Config = config) -> Fraction:
    return monogamy_lp_solve(setup, cfg).value


@dataclass(frozen=True)
class TradeoffResult:
    """Range of B(A, Bob target) once the other listed pairs are pinned."""

    target: int
    fixed: Dict[int, Fraction]
    feasible: bool
    maximum: Optional[Fraction] = None
    minimum: Optional[Fraction] = None
    max_witness: Optional[Behavior] = None
    min_witness: Optional[Behavior] = None
    solutions: Tuple[LpSolution, ...] = ()


def pair_tradeoff(
    setup: MonogamySetup,
    target: int,
    fixed: Dict[int, Fraction],
    cfg: Config = config
) -> TradeoffResult:
    """
    Maximum and minimum of B(A, Bob target) over no-signaling extended
    behaviors with B(A, Bob m) = v for every (m, v) in ``fixed``.

    Pair values are expressed with the other Bobs at setting 0, which equals
    the true pair value on every non-signaling behavior.
    """
    setup.check_chain(target)
    for m in fixed:
        setup.check_chain(m)
    if target in fixed:
        raise ScenarioError(f"target pair {target} is also fixed", "monogamy")

    extra = tuple(
        (tuple(functional_objective(pair_functional(setup, m))), Fraction(v))
        for m, v in sorted(fixed.items())
    )
    polytope = NsPolytope(setup.extended, cfg)
    objective = functional_objective(pair_functional(setup, target))
    high: Optional[NsOptimum] = polytope.maximize(objective, extra)
    if high is None:
        return TradeoffResult(target, dict(fixed), feasible=False)
    low = polytope.maximize([-c for c in objective], extra)
    return TradeoffResult(
        target=target,
        fixed=dict(fixed),
        feasible=True,
        maximum=high.value,
        minimum=-low.value,
        max_witness=high.behavior,
        min_witness=low.behavior,
        solutions=(high.solution, low.solution),
    )
