"""Loading documents and command-line literals."""
import json
import re
from fractions import Fraction
from typing import Tuple, Union

from pydantic import ValidationError

from bellmono.core.behavior import Behavior
from bellmono.core.documents import ScenarioDocument, from_document, parse_document
from bellmono.core.fixtures import fixtures
from bellmono.core.functional import BellFunctional
from bellmono.core.rational import inv_sqrt2_approximation, parse_rational, sqrt2_approximation
from bellmono.core.scenario import Scenario
from bellmono.errors import BehaviorError, CapExceededError, DocumentError, FunctionalFormError, ScenarioError

FIXTURE_SCHEME = "fixtures:"

Loaded = Union[Scenario, BellFunctional, Behavior]

# "<rational>*<constant>", "<constant>", or "<rational>"
_CONSTANTS = {'sqrt2': sqrt2_approximation, '1/sqrt2': inv_sqrt2_approximation}
_PRODUCT = re.compile(r'^\s*(?:(?P<factor>-?\d+(?:/\d+)?)\s*\*\s*)?(?P<constant>1/sqrt2|sqrt2)\s*$')


def load_document(ref: str) -> Tuple[Loaded, str]:
    """
    Load a scenario, functional or behavior.

    Args:
        ref: ``fixtures:<name>`` or a path to a JSON document

    Returns:
        (value, raw text of the reference) - the raw text feeds the run log

    Raises:
        DocumentError: unknown fixture, unreadable file, malformed JSON or
            schema violation (with the offending field)
    """
    if ref.startswith(FIXTURE_SCHEME):
        name = ref[len(FIXTURE_SCHEME):]
        library = fixtures()
        if name not in library:
            raise DocumentError(f"unknown fixture {name!r}; known: {', '.join(sorted(library))}", path=ref)
        return library[name], name

    try:
        with open(ref) as f:
            text = f.read()
    except OSError as e:
        raise DocumentError(f"cannot read document: {e.strerror}", path=ref)

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg}", path=ref, field=f"line {e.lineno}")

    try:
        doc = parse_document(data)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first['loc'])
        raise DocumentError(first['msg'], path=ref, field=field)

    try:
        return from_document(doc), text
    except CapExceededError as e:
        field = "parties" if isinstance(doc, ScenarioDocument) else "scenario.parties"
        raise DocumentError(str(e), path=ref, field=field)
    except BehaviorError as e:
        raise DocumentError(str(e), path=ref, field="entries")
    except (ScenarioError, FunctionalFormError, ValueError) as e:
        raise DocumentError(str(e), path=ref)


def parse_value(text: str, field: str = "value") -> Tuple[Fraction, bool]:
    """
    Parse an exact rational or a multiple of sqrt2 / 1/sqrt2.

    Returns:
        (value, approximate) where approximate marks the rational stand-ins
        for irrational constants

    Raises:
        DocumentError: malformed literal
    """
    match = _PRODUCT.match(text)
    if match:
        factor = parse_rational(match.group('factor')) if match.group('factor') else Fraction(1)
        return factor * _CONSTANTS[match.group('constant')](), True
    try:
        return parse_rational(text), False
    except ValueError as e:
        raise DocumentError(str(e), field=field)


def load_functional(ref: str) -> Tuple[BellFunctional, str]:
    value, text = load_document(ref)
    if not isinstance(value, BellFunctional):
        raise DocumentError(f"expected a functional document, got a {_kind(value)}", path=ref)
    return value, text


def load_behavior(ref: str) -> Tuple[Behavior, str]:
    value, text = load_document(ref)
    if not isinstance(value, Behavior):
        raise DocumentError(f"expected a behavior document, got a {_kind(value)}", path=ref)
    return value, text


def load_scenario(ref: str) -> Tuple[Scenario, str]:
    """Scenario of any document (a functional or behavior gives its own scenario)."""
    value, text = load_document(ref)
    return (value if isinstance(value, Scenario) else value.scenario), text


def _kind(value: Loaded) -> str:
    if isinstance(value, Scenario):
        return "scenario"
    if isinstance(value, BellFunctional):
        return "functional"
    return "behavior"
