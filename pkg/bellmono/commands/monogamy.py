"""Handlers for monogamy-check, monogamy-lp, lhv-reconstruct and tradeoff."""
from fractions import Fraction
from typing import Any, Dict, Optional

from bellmono.core.behavior import Behavior
from bellmono.core.functional import BellFunctional
from bellmono.core.rational import format_rational, render
from bellmono.lp.simplex import verify_solution
from bellmono.monogamy.check import monogamy_check, monogamy_lp_solve, pair_tradeoff
from bellmono.monogamy.lhv import fixed_setting_lhv, lhv_chain_value, reconstruction_residual
from bellmono.monogamy.setup import MonogamySetup, prepare_monogamy
from bellmono.multipartite.flatten import Bipartition, flatten_with_local_bound
from bellmono.observability.logger import RunLogger
from bellmono.reporting import make_report


def monogamy_setup(f: BellFunctional, cut: Optional[Bipartition] = None) -> MonogamySetup:
    """
    Flatten along ``cut`` when given (bound taken as the local bound across
    the cut), then prepare the non-negative monogamy setup.
    """
    if cut is not None:
        f, _ = flatten_with_local_bound(f, cut)
    return prepare_monogamy(f)


def _setup_details(setup: MonogamySetup):
    details = [("bobs", str(setup.n)), ("extended", setup.extended.describe())]
    if setup.offset:
        details.append(("offset", render(setup.offset)))
    return details


def monogamy_check_command(
    f: BellFunctional,
    p: Behavior,
    cut: Optional[Bipartition] = None,
    logger: Optional[RunLogger] = None
) -> Dict[str, Any]:
    """
    Check Σ_m B(A, Bob m) <= nR on a behavior of the extended scenario.

    Returns:
        Report: headline "<sum> <= <nR>: holds" (or "> ...: violated"),
        per-pair values, the no-signaling verdict and the signed form
    """
    setup = monogamy_setup(f, cut)
    report = monogamy_check(setup, p)
    relation = "<=" if report.holds else ">"
    verdict = "holds" if report.holds else "violated"
    headline = f"{render(report.total)} {relation} {render(report.bound)}: {verdict}"

    details = _setup_details(setup)
    for m, value in enumerate(report.per_pair, start=1):
        details.append((f"B(A,B{m})", render(value)))
    details.append(("nonsignaling", "yes" if report.nonsignaling else "no"))
    if report.witness is not None:
        details.append(("witness", report.witness.describe()))
    if setup.offset:
        details.append(("signed sum", f"{render(report.signed_total)} (bound {render(report.signed_bound)})"))

    summary = {
        'sum': format_rational(report.total),
        'bound': format_rational(report.bound),
        'holds': report.holds,
        'nonsignaling': report.nonsignaling,
        'per_pair': [format_rational(v) for v in report.per_pair]
    }
    return make_report(headline, details, summary=summary)


def monogamy_lp_command(
    f: BellFunctional,
    cut: Optional[Bipartition] = None,
    logger: Optional[RunLogger] = None
) -> Dict[str, Any]:
    """Maximum of Σ_m B_m over the extended no-signaling polytope, with certificate."""
    setup = monogamy_setup(f, cut)
    result = monogamy_lp_solve(setup)
    if logger:
        logger.record_lp(result.solution)
    certificate = verify_solution(result.problem, result.solution)

    details = _setup_details(setup)
    details += [
        ("bound nR", render(result.bound)),
        ("tight", "yes" if result.tight else "no"),
    ]
    if setup.offset:
        signed = result.value - setup.n * setup.offset
        details.append(("signed maximum", f"{render(signed)} (bound {render(setup.signed_bound)})"))
    details += [
        ("certificate", "verified" if certificate.ok else "FAILED"),
        ("pivots", str(result.solution.iterations)),
    ]
    summary = {
        'value': format_rational(result.value),
        'bound': format_rational(result.bound),
        'tight': result.tight,
        'certificate': certificate.ok
    }
    return make_report(render(result.value), details, document=result.witness, summary=summary)


def lhv_reconstruct_command(
    f: BellFunctional,
    p: Behavior,
    chain: int = 1,
    cut: Optional[Bipartition] = None,
    logger: Optional[RunLogger] = None
) -> Dict[str, Any]:
    """Build the LHV model of B_chain's settings slice and measure how well it reproduces p."""
    setup = monogamy_setup(f, cut)
    model = fixed_setting_lhv(setup, p, chain)
    residual = reconstruction_residual(setup, model, p)
    value = lhv_chain_value(setup, model)

    support = sum(1 for w in model.hidden.values() if w)
    details = _setup_details(setup) + [
        ("chain", str(chain)),
        ("bob settings", ",".join(map(str, model.bob_settings))),
        ("hidden support", f"{support} of {len(model.hidden)}"),
        ("B_m on model", f"{render(value)} (R = {render(setup.bound)})"),
    ]
    summary = {
        'residual': format_rational(residual),
        'chain_value': format_rational(value),
        'support': support
    }
    return make_report(f"residual {render(residual)}", details, summary=summary)


def tradeoff_command(
    f: BellFunctional,
    target: int,
    fixed: Dict[int, Fraction],
    cut: Optional[Bipartition] = None,
    logger: Optional[RunLogger] = None
) -> Dict[str, Any]:
    """Range of B(A, Bob target) with the listed pairs pinned (values in the non-negative form)."""
    setup = monogamy_setup(f, cut)
    result = pair_tradeoff(setup, target, fixed)
    if logger:
        for solution in result.solutions:
            logger.record_lp(solution)

    pinned = ", ".join(f"B(A,B{m})={format_rational(v)}" for m, v in sorted(fixed.items())) or "none"
    details = _setup_details(setup) + [("fixed", pinned)]
    if not result.feasible:
        return make_report("infeasible", details, summary={'feasible': False})

    headline = f"B(A,B{target}) in [{render(result.minimum)}, {render(result.maximum)}]"
    summary = {
        'feasible': True,
        'minimum': format_rational(result.minimum),
        'maximum': format_rational(result.maximum)
    }
    return make_report(headline, details, document=result.max_witness, summary=summary)
