"""Unit tests for bipartition flattening."""
import pytest
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from bellmono.bounds.local import local_bound
from bellmono.bounds.nonsignaling import sample_ns_behavior
from bellmono.config.settings import Config
from bellmono.core.behavior import deterministic_behavior, is_nonsignaling
from bellmono.core.fixtures import chsh_prob, mermin, mermin_scenario, pr_box
from bellmono.core.functional import FunctionalForm, evaluate, normalize_nonneg
from bellmono.core.scenario import Scenario
from bellmono.errors import CapExceededError, ScenarioError
from bellmono.lp.simplex import verify_solution
from bellmono.monogamy.check import monogamy_lp_solve
from bellmono.monogamy.setup import prepare_monogamy
from bellmono.multipartite.flatten import (
    Bipartition,
    flatten_behavior,
    flatten_bipartition,
    flatten_with_local_bound,
)


@pytest.fixture
def ab_c():
    """Cut {A,B} | {C} of a three-party scenario."""
    return Bipartition.of((0, 1), 3)


def test_bipartition_construction(ab_c):
    """The complement is filled in ascending order."""
    assert ab_c.group_b == (2,)
    assert ab_c.describe() == "0,1|2"
    assert Bipartition((2,), (1, 0)).describe() == "2|1,0"
    with pytest.raises(ScenarioError):
        Bipartition((0,), ())
    with pytest.raises(ScenarioError):
        Bipartition((0, 1), (1, 2))
    with pytest.raises(ScenarioError):
        Bipartition((0,), (1,)).check(mermin_scenario())


def test_flattened_shape(ab_c):
    """Composite counts multiply; the flat functional is in probability form."""
    flat, maps = flatten_bipartition(mermin(), ab_c)
    assert flat.scenario == Scenario.of((4, 4), (2, 2))
    assert flat.form is FunctionalForm.PROBABILITY
    assert flat.label == "mermin[0,1|2]"
    assert maps.settings_forward((1, 0, 1)) == (2, 1)
    assert maps.settings_inverse((2, 1)) == (1, 0, 1)
    assert maps.outcomes_forward((0, 1, 1)) == (1, 1)


def test_listed_order_is_most_significant():
    """Group members combine in listed order, first member most significant."""
    _, maps = flatten_bipartition(mermin(), Bipartition((1, 0), (2,)))
    assert maps.settings_forward((1, 0, 0)) == (1, 0)
    assert maps.settings_forward((0, 1, 0)) == (2, 0)


def test_evaluation_commutes_with_flattening(ab_c):
    """evaluate(f, p) = evaluate(flat f, flat p) exactly."""
    flat, _ = flatten_bipartition(mermin(), ab_c)
    for seed in range(5):
        p = sample_ns_behavior(mermin_scenario(), seed, mixing=2)
        flat_p = flatten_behavior(p, ab_c)
        assert evaluate(mermin(), p) == evaluate(flat, flat_p)
        assert is_nonsignaling(flat_p)


def test_singleton_groups_are_the_identity():
    """A bipartite functional cut 0|1 flattens to itself."""
    cut = Bipartition((0,), (1,))
    flat, maps = flatten_bipartition(chsh_prob(), cut)
    assert flat.scenario == chsh_prob().scenario
    assert flat.terms == chsh_prob().terms
    assert flat.bound == chsh_prob().bound
    assert maps.settings_forward((1, 0)) == (1, 0)
    assert flatten_behavior(pr_box(), cut) == pr_box()


def test_evaluation_commutes_on_all_zero_strategy(ab_c):
    """Every party answering 0 flattens to the composite all-zero strategy."""
    p = deterministic_behavior(mermin_scenario(), ((0, 0), (0, 0), (0, 0)))
    flat, _ = flatten_bipartition(mermin(), ab_c)
    flat_p = flatten_behavior(p, ab_c)
    assert flat_p == deterministic_behavior(flat.scenario, ((0, 0, 0, 0), (0, 0)))
    assert evaluate(mermin(), p) == evaluate(flat, flat_p) == 2


def test_local_bound_across_cut(ab_c):
    """The composite {A,B} coordinates outcomes: local bound 4 instead of 2."""
    flat, _ = flatten_with_local_bound(mermin(), ab_c)
    assert flat.bound == 4
    g, offset = normalize_nonneg(flat)
    assert offset == 16
    assert local_bound(g)[0] == 20


def test_mermin_monogamy_after_flattening(ab_c):
    """Two clones of C: the extended LP maximum is exactly 2·R_flat = 40."""
    flat, _ = flatten_with_local_bound(mermin(), ab_c)
    setup = prepare_monogamy(flat)
    assert setup.n == 2
    assert setup.bound == 20
    result = monogamy_lp_solve(setup)
    assert result.value == 40
    assert result.tight
    report = verify_solution(result.problem, result.solution)
    assert report.ok
    assert report.max_residual == 0


def test_flatten_cap(ab_c):
    """Composite counts above FLATTEN_CAP are refused."""
    with pytest.raises(CapExceededError):
        flatten_bipartition(mermin(), ab_c, Config(FLATTEN_CAP=2))


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
