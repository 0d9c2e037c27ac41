"""Handler for clone-bound."""
from fractions import Fraction
from typing import Any, Dict, List, Optional

from bellmono.cloning.shrinking import CloningReport, nonnegative_counterpart, shrinking_factors
from bellmono.core.functional import BellFunctional
from bellmono.core.rational import format_rational
from bellmono.errors import ScenarioError
from bellmono.observability.logger import RunLogger
from bellmono.reporting import make_report, ratio_text


def _status(report: CloningReport) -> str:
    if not report.holds:
        return "exceeds bound"
    if report.trivial:
        return "trivial bound"
    if report.saturated:
        return "saturates bound"
    return "within bound"


def _report_lines(report: CloningReport, prefix: str = "") -> List:
    approximate = report.approximate
    lines = [
        (f"{prefix}form", report.form_note),
        (f"{prefix}base value", ratio_text(report.base_value, approximate)),
    ]
    for m, eta in enumerate(report.etas, start=1):
        lines.append((f"{prefix}eta{m}", ratio_text(eta, approximate)))
    lines += [
        (f"{prefix}mean eta", ratio_text(report.mean_eta, approximate)),
        (f"{prefix}bound R/B", f"{ratio_text(report.bound, approximate)} ({_status(report)})"),
        (f"{prefix}trivial", "yes" if report.trivial else "no"),
    ]
    if approximate:
        lines.append((f"{prefix}tolerance", f"{report.tolerance:g}"))
    return lines


def clone_bound_command(
    f: BellFunctional,
    base: Fraction,
    clones: Optional[List[Fraction]] = None,
    approximate: bool = False,
    logger: Optional[RunLogger] = None
) -> Dict[str, Any]:
    """
    Mean shrinking-factor bound R / B(A, B) and the clones' factors.

    Args:
        f: Bipartite functional
        base: B(A, B) of the state being cloned
        clones: B(A, clone m) per clone; defaults to n clones at R, the
            largest symmetric value the monogamy relation allows
        approximate: base or clones stand in for irrational values

    Returns:
        Report: headline "<bound> (<status>)"; a signed or correlator-form
        input also reports the non-negative form
    """
    if not f.is_bipartite():
        raise ScenarioError(f"clone-bound needs a bipartite functional, got {f.scenario.num_parties} parties", "cloning")
    if clones is None:
        clones = [f.bound] * f.scenario.parties[1].settings
    report = shrinking_factors(f, base, clones, approximate=approximate)
    headline = f"{ratio_text(report.bound, approximate)} ({_status(report)})"

    details = _report_lines(report)
    counterpart = nonnegative_counterpart(f, base, clones, approximate=approximate)
    if counterpart is not None:
        details += _report_lines(counterpart, prefix="non-negative ")

    summary = {
        'bound': format_rational(report.bound),
        'mean_eta': format_rational(report.mean_eta),
        'saturated': report.saturated,
        'trivial': report.trivial
    }
    return make_report(headline, details, summary=summary)
