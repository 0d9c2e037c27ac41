"""Scenarios, Bell functionals, behaviors and their documents."""
from bellmono.core.behavior import Behavior, NsVerdict, NsWitness, is_nonsignaling, validate_behavior
from bellmono.core.fixtures import fixtures
from bellmono.core.functional import (
    BellFunctional,
    FunctionalForm,
    evaluate,
    expand_correlators,
    normalize_nonneg,
)
from bellmono.core.scenario import PartySpec, Scenario

__all__ = [
    'Behavior',
    'NsVerdict',
    'NsWitness',
    'is_nonsignaling',
    'validate_behavior',
    'fixtures',
    'BellFunctional',
    'FunctionalForm',
    'evaluate',
    'expand_correlators',
    'normalize_nonneg',
    'PartySpec',
    'Scenario'
]
