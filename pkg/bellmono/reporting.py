"""Rendering of command reports as text or JSON documents."""
import json
from typing import Any, Dict, List, Optional, Tuple

from bellmono.core.behavior import Behavior
from bellmono.core.documents import to_document
from bellmono.core.rational import format_decimal, render

Report = Dict[str, Any]


def make_report(
    headline: str,
    details: Optional[List[Tuple[str, str]]] = None,
    table: Optional[Behavior] = None,
    document: Any = None,
    summary: Optional[Dict[str, Any]] = None
) -> Report:
    """
    Build the dictionary every command handler returns.

    Args:
        headline: First line of the text report
        details: (label, value) lines following the headline
        table: Behavior printed as a settings x outcomes table
        document: Scenario / functional / behavior emitted by --out and
            --format json-document
        summary: Plain values for the run log and the JSON report
    """
    return {
        'headline': headline,
        'details': details or [],
        'table': table,
        'document': document,
        'summary': summary or {}
    }


def ratio_text(value, approximate: bool) -> str:
    """Decimal only for values standing in for irrationals, exact otherwise."""
    return format_decimal(value) if approximate else render(value)


def document_json(value) -> str:
    """Interchange document of a scenario, functional or behavior, as JSON text."""
    return json.dumps(to_document(value).model_dump(mode="json"), indent=2) + "\n"


def render_text(report: Report) -> str:
    lines = [report['headline']]
    width = max((len(label) for label, _ in report['details']), default=0)
    for label, value in report['details']:
        lines.append(f"  {label.ljust(width)}  {value}")
    if report['table'] is not None:
        lines.append("")
        lines.append(report['table'].to_frame().to_string())
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    """The report's document if it has one, otherwise its summary."""
    if report['document'] is not None:
        return document_json(report['document'])
    return json.dumps(report['summary'], indent=2, sort_keys=True) + "\n"
