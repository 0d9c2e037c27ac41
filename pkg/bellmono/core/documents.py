"""Interchange documents (scenario, functional, behavior) and their conversions."""
from typing import List, Literal, Union

from pydantic import BaseModel, Field, field_validator

from bellmono.core.behavior import Behavior
from bellmono.core.functional import BellFunctional, FunctionalForm
from bellmono.core.rational import format_rational, parse_rational
from bellmono.core.scenario import PartySpec, Scenario

SETTINGS_MAJOR_LEX = "settings-major-lex"


def _check_rational(value: str) -> str:
    parse_rational(value)
    return value


class PartyDocument(BaseModel):
    settings: int = Field(ge=1)
    outcomes: int = Field(ge=2)


class ScenarioDocument(BaseModel):
    parties: List[PartyDocument] = Field(min_length=1)


class TermDocument(BaseModel):
    settings: List[int]
    outcomes: List[int] = Field(default_factory=list)
    coeff: str

    @field_validator('coeff')
    @classmethod
    def check_coeff(cls, value: str) -> str:
        return _check_rational(value)


class FunctionalDocument(BaseModel):
    scenario: ScenarioDocument
    form: Literal["probability", "correlator"] = "probability"
    bound: str
    terms: List[TermDocument] = Field(default_factory=list)

    @field_validator('bound')
    @classmethod
    def check_bound(cls, value: str) -> str:
        return _check_rational(value)


class BehaviorDocument(BaseModel):
    scenario: ScenarioDocument
    order: Literal["settings-major-lex"] = SETTINGS_MAJOR_LEX
    entries: List[str]

    @field_validator('entries')
    @classmethod
    def check_entries(cls, values: List[str]) -> List[str]:
        for value in values:
            parse_rational(value)
        return values


Document = Union[ScenarioDocument, FunctionalDocument, BehaviorDocument]


def scenario_from_document(doc: ScenarioDocument) -> Scenario:
    return Scenario(tuple(PartySpec(p.settings, p.outcomes) for p in doc.parties))


def scenario_to_document(scenario: Scenario) -> ScenarioDocument:
    return ScenarioDocument(parties=[
        PartyDocument(settings=p.settings, outcomes=p.outcomes) for p in scenario.parties
    ])


def functional_from_document(doc: FunctionalDocument, label: str = "") -> BellFunctional:
    scenario = scenario_from_document(doc.scenario)
    terms = [(t.settings, t.outcomes, parse_rational(t.coeff)) for t in doc.terms]
    return BellFunctional.from_terms(scenario, terms, parse_rational(doc.bound), FunctionalForm(doc.form), label)


def functional_to_document(f: BellFunctional) -> FunctionalDocument:
    return FunctionalDocument(
        scenario=scenario_to_document(f.scenario),
        form=f.form.value,
        bound=format_rational(f.bound),
        terms=[
            TermDocument(settings=list(s), outcomes=list(o), coeff=format_rational(c))
            for (s, o), c in f.terms.items()
        ],
    )


def behavior_from_document(doc: BehaviorDocument) -> Behavior:
    scenario = scenario_from_document(doc.scenario)
    return Behavior.from_entries(scenario, [parse_rational(v) for v in doc.entries])


def behavior_to_document(p: Behavior) -> BehaviorDocument:
    return BehaviorDocument(
        scenario=scenario_to_document(p.scenario),
        order=SETTINGS_MAJOR_LEX,
        entries=[format_rational(v) for v in p.entries()],
    )


def parse_document(data: dict) -> Document:
    """
    Validate a decoded JSON object as one of the three document kinds.

    The kind is recognised by its distinguishing key: ``entries`` (behavior),
    ``bound``/``terms`` (functional), otherwise scenario.

    Raises:
        pydantic.ValidationError: schema violations (with field locations)
    """
    if isinstance(data, dict) and 'entries' in data:
        return BehaviorDocument.model_validate(data)
    if isinstance(data, dict) and ('bound' in data or 'terms' in data):
        return FunctionalDocument.model_validate(data)
    return ScenarioDocument.model_validate(data)


def to_document(value: Union[Scenario, BellFunctional, Behavior]) -> Document:
    if isinstance(value, Scenario):
        return scenario_to_document(value)
    if isinstance(value, BellFunctional):
        return functional_to_document(value)
    return behavior_to_document(value)


def from_document(doc: Document, label: str = "") -> Union[Scenario, BellFunctional, Behavior]:
    if isinstance(doc, BehaviorDocument):
        return behavior_from_document(doc)
    if isinstance(doc, FunctionalDocument):
        return functional_from_document(doc, label)
    return scenario_from_document(doc)
