"""Handlers for local-bound, ns-bound and sample."""
from typing import Any, Dict, Optional

from bellmono.bounds.local import LocalBoundEnumerator, strategy_count
from bellmono.bounds.nonsignaling import ns_optimum, sample_ns_behavior
from bellmono.config.settings import config
from bellmono.core.behavior import is_nonsignaling
from bellmono.core.functional import BellFunctional, evaluate
from bellmono.core.rational import format_rational, render
from bellmono.core.scenario import Scenario
from bellmono.lp.simplex import verify_solution
from bellmono.observability.logger import RunLogger
from bellmono.reporting import make_report


def local_bound_command(f: BellFunctional, logger: Optional[RunLogger] = None) -> Dict[str, Any]:
    """
    Enumerate deterministic strategies.

    Returns:
        Report with the bound as headline and the maximizing strategy's
        behavior as document
    """
    enumerator = LocalBoundEnumerator(config)
    value, strategy = enumerator.run(f)
    if logger:
        logger.record_enumeration(enumerator.enumerated)

    witness = strategy.behavior(f.scenario)
    details = [
        ("strategies", str(strategy_count(f.scenario))),
        ("witness", strategy.describe()),
        ("declared bound", render(f.bound)),
    ]
    return make_report(render(value), details, document=witness,
                       summary={'value': format_rational(value), 'strategy': strategy.describe()})


def ns_bound_command(f: BellFunctional, logger: Optional[RunLogger] = None) -> Dict[str, Any]:
    """Maximize over the no-signaling polytope and check the LP certificate."""
    optimum = ns_optimum(f, config)
    if logger:
        logger.record_lp(optimum.solution)

    certificate = verify_solution(optimum.problem, optimum.solution)
    details = [
        ("witness value", render(evaluate(f, optimum.behavior))),
        ("witness nonsignaling", "yes" if is_nonsignaling(optimum.behavior) else "no"),
        ("certificate", "verified" if certificate.ok else "FAILED"),
        ("pivots", str(optimum.solution.iterations)),
    ]
    return make_report(render(optimum.value), details, table=optimum.behavior, document=optimum.behavior,
                       summary={'value': format_rational(optimum.value), 'certificate': certificate.ok})


def sample_command(
    scenario: Scenario,
    seed: int,
    mixing: int,
    objective: Optional[BellFunctional] = None,
    logger: Optional[RunLogger] = None
) -> Dict[str, Any]:
    """
    Seeded no-signaling sample; ``objective`` replaces the first vertex's
    random objective (debug hook).
    """
    p = sample_ns_behavior(scenario, seed, mixing, objective)
    details = [("seed", str(seed)), ("mix", str(mixing))]
    if objective is not None:
        details.append(("objective value", render(evaluate(objective, p))))
    return make_report(f"sampled behavior on {scenario.describe()}", details, table=p, document=p,
                       summary={'seed': seed, 'mix': mixing})
