"""Handlers for document-level verbs: validate, evaluate, normalize, expand, flatten, fixtures."""
from typing import Any, Dict, Optional, Union

from bellmono.core.behavior import Behavior, is_nonsignaling, validate_behavior
from bellmono.core.fixtures import fixtures
from bellmono.core.functional import (
    BellFunctional,
    FunctionalForm,
    evaluate,
    expand_correlators,
    normalize_nonneg,
    probability_form,
)
from bellmono.core.rational import format_rational, render
from bellmono.core.scenario import Scenario
from bellmono.multipartite.flatten import Bipartition, flatten_behavior, flatten_with_local_bound
from bellmono.observability.logger import RunLogger
from bellmono.reporting import make_report


def validate_command(
    value: Union[Scenario, BellFunctional, Behavior],
    logger: Optional[RunLogger] = None
) -> Dict[str, Any]:
    """
    Check a loaded document.

    Behaviors are checked for non-negativity and normalization (raising
    BehaviorError) and their no-signaling verdict is reported.

    Returns:
        Report dictionary (headline "ok")
    """
    if isinstance(value, Behavior):
        validate_behavior(value)
        verdict = is_nonsignaling(value)
        details = [
            ("kind", "behavior"),
            ("scenario", value.scenario.describe()),
            ("nonsignaling", "yes" if verdict else "no"),
        ]
        if verdict.witness is not None:
            details.append(("witness", verdict.witness.describe()))
        return make_report("ok", details, summary={'kind': 'behavior', 'nonsignaling': bool(verdict)})

    if isinstance(value, BellFunctional):
        details = [
            ("kind", "functional"),
            ("scenario", value.scenario.describe()),
            ("form", value.form.value),
            ("terms", str(len(value.terms))),
            ("bound", render(value.bound)),
            ("non-negative", "yes" if value.is_nonnegative() else "no"),
        ]
        return make_report("ok", details, summary={'kind': 'functional', 'terms': len(value.terms)})

    details = [("kind", "scenario"), ("scenario", value.describe())]
    return make_report("ok", details, summary={'kind': 'scenario'})


def evaluate_command(f: BellFunctional, p: Behavior, logger: Optional[RunLogger] = None) -> Dict[str, Any]:
    value = evaluate(f, p)
    details = [("bound", render(f.bound)), ("violates", "yes" if value > f.bound else "no")]
    return make_report(render(value), details, summary={'value': format_rational(value)})


def normalize_command(f: BellFunctional, logger: Optional[RunLogger] = None) -> Dict[str, Any]:
    """Complement substitution; correlator input is expanded first."""
    g, offset = normalize_nonneg(probability_form(f))
    details = [
        ("offset", render(offset)),
        ("terms", str(len(g.terms))),
        ("source form", f.form.value),
    ]
    return make_report(
        f"bound {render(g.bound)}", details, document=g,
        summary={'bound': format_rational(g.bound), 'offset': format_rational(offset)})


def expand_command(f: BellFunctional, logger: Optional[RunLogger] = None) -> Dict[str, Any]:
    g = expand_correlators(f) if f.form is FunctionalForm.CORRELATOR else f
    details = [("bound", render(g.bound))]
    return make_report(f"{len(g.terms)} terms", details, document=g, summary={'terms': len(g.terms)})


def flatten_command(
    value: Union[BellFunctional, Behavior],
    cut: Bipartition,
    logger: Optional[RunLogger] = None
) -> Dict[str, Any]:
    """Flatten a functional or a behavior along a cut."""
    if isinstance(value, Behavior):
        flat = flatten_behavior(value, cut)
        details = [("cut", cut.describe()), ("nonsignaling", "yes" if is_nonsignaling(flat) else "no")]
        return make_report(flat.scenario.describe(), details, document=flat,
                           summary={'scenario': flat.scenario.describe()})

    flat, _ = flatten_with_local_bound(value, cut)
    details = [
        ("cut", cut.describe()),
        ("terms", str(len(flat.terms))),
        ("source bound", render(value.bound)),
        ("local bound across cut", render(flat.bound)),
    ]
    return make_report(flat.scenario.describe(), details, document=flat,
                       summary={'scenario': flat.scenario.describe(), 'terms': len(flat.terms)})


def fixtures_command(logger: Optional[RunLogger] = None) -> Dict[str, Any]:
    """List the built-in fixtures with their kind and scenario."""
    details = []
    for name, value in sorted(fixtures().items()):
        if isinstance(value, Scenario):
            details.append((name, f"scenario {value.describe()}"))
        elif isinstance(value, BellFunctional):
            details.append((name, f"functional {value.form.value} {value.scenario.describe()} R={format_rational(value.bound)}"))
        else:
            details.append((name, f"behavior {value.scenario.describe()}"))
    return make_report(f"{len(details)} fixtures", details, summary={'count': len(details)})
