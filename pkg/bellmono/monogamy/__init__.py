"""Monogamy of Bell violations across one Alice and n Bobs."""
from bellmono.monogamy.check import (
    MonogamyReport,
    monogamy_check,
    monogamy_lp_max,
    monogamy_lp_solve,
    pair_tradeoff,
    pair_value,
)
from bellmono.monogamy.lhv import LhvModel, fixed_setting_lhv, reconstruction_residual
from bellmono.monogamy.setup import (
    MonogamySetup,
    chain_functional,
    clone_strategy,
    extend_scenario,
    prepare_monogamy,
)

__all__ = [
    'MonogamyReport',
    'monogamy_check',
    'monogamy_lp_max',
    'monogamy_lp_solve',
    'pair_tradeoff',
    'pair_value',
    'LhvModel',
    'fixed_setting_lhv',
    'reconstruction_residual',
    'MonogamySetup',
    'chain_functional',
    'clone_strategy',
    'extend_scenario',
    'prepare_monogamy'
]
