"""Unit tests for local and no-signaling bounds."""
import pytest
import sys
import os
from fractions import Fraction

# Add parent directory to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from bellmono.bounds.local import (
    LocalBoundEnumerator,
    local_bound,
    strategy_at,
    strategy_count,
    strategy_value,
)
from bellmono.bounds.nonsignaling import (
    NsPolytope,
    functional_objective,
    ns_bound,
    ns_coordinates,
    ns_optimum,
    sample_ns_behavior,
)
from bellmono.config.settings import Config
from bellmono.core.behavior import is_nonsignaling, uniform_behavior, validate_behavior
from bellmono.core.fixtures import (
    chained3_corr,
    chained3_prob,
    chained3_scenario,
    chsh_corr,
    chsh_prob,
    chsh_scenario,
    mermin,
    mermin_scenario,
    pr_box,
    signaling_example,
)
from bellmono.core.functional import evaluate, normalize_nonneg, probability_form
from bellmono.errors import CapExceededError, ScenarioMismatchError
from bellmono.lp.simplex import verify_solution


def test_chsh_local_bounds():
    """CHSH: 3 in probability form, 2 in correlator form."""
    value, strategy = local_bound(chsh_prob())
    assert value == 3
    assert strategy.describe() == "party0:0,0 party1:0,0"
    value, _ = local_bound(chsh_corr())
    assert value == 2


def test_chsh_ns_bounds():
    """CHSH: the PR box value 4 in both forms."""
    for f in (chsh_prob(), chsh_corr()):
        value, witness = ns_bound(f)
        assert value == 4
        validate_behavior(witness)
        assert is_nonsignaling(witness)
        assert evaluate(f, witness) == 4


def test_chained3_bounds():
    """Chained inequality with three settings: local 5 and 4, no-signaling 6."""
    assert local_bound(chained3_prob())[0] == 5
    assert local_bound(chained3_corr())[0] == 4
    assert ns_bound(chained3_prob())[0] == 6
    assert ns_bound(chained3_corr())[0] == 6


def test_mermin_bounds():
    """Mermin: local 2, no-signaling 4."""
    assert local_bound(mermin())[0] == 2
    assert ns_bound(mermin())[0] == 4


def test_strategy_counter():
    """Mixed-radix counter over every party's responses."""
    assert strategy_count(chsh_scenario()) == 16
    assert strategy_count(mermin_scenario()) == 64
    strategy = strategy_at(chsh_scenario(), 6)
    assert strategy.responses == ((0, 1), (1, 0))
    assert strategy.outcomes((1, 0)) == (1, 1)
    assert strategy_value(chsh_prob(), strategy) == 3


def test_witness_attains_bound():
    """The reported strategy reaches the reported value."""
    for f in (chsh_corr(), chained3_prob(), mermin()):
        value, strategy = local_bound(f)
        assert strategy_value(f, strategy) == value


def test_strategy_cap():
    """Enumeration refuses spaces above STRATEGY_CAP."""
    with pytest.raises(CapExceededError) as excinfo:
        local_bound(chsh_prob(), Config(STRATEGY_CAP=10))
    assert excinfo.value.count == 16


def test_chunked_and_parallel_enumeration_agree():
    """Chunking and workers do not change the value or the witness."""
    sequential = local_bound(chained3_prob())
    chunked = local_bound(chained3_prob(), Config(ENUMERATION_CHUNK=7))
    parallel = LocalBoundEnumerator(Config(ENUMERATION_WORKERS=2, ENUMERATION_CHUNK=8))
    assert chunked == sequential
    assert parallel.run(chained3_prob()) == sequential
    assert parallel.enumerated == 64


def test_ns_certificate():
    """The no-signaling LP optimum carries a verified certificate."""
    for f in (chsh_prob(), chained3_prob()):
        optimum = ns_optimum(f)
        report = verify_solution(optimum.problem, optimum.solution)
        assert report.ok
        assert report.max_residual == 0


def test_ns_coordinate_counts():
    """One coordinate per marginal with no party at its last outcome."""
    assert ns_coordinates(chsh_scenario()).dimension == 3 * 3 - 1
    assert ns_coordinates(chained3_scenario()).dimension == 4 * 4 - 1
    assert ns_coordinates(mermin_scenario()).dimension == 3 * 3 * 3 - 1
    coords = ns_coordinates(chsh_scenario())
    assert coords.coordinates[0] == ((0,), (0,), (0,))
    assert len(coords.rows) == 16
    # P(1,1|0,0) = 1 - P_A(0|0) - P_B(0|0) + P(0,0|0,0)
    assert sorted(coords.rows[3].values()) == [-1, -1, 1]
    assert coords.constants[3] == 1


def test_ns_coordinates_rebuild_nonsignaling_tables():
    """A non-signaling table is rebuilt exactly from its coordinates."""
    sampled = sample_ns_behavior(chained3_scenario(), seed=3, mixing=2)
    for p in (pr_box(), uniform_behavior(mermin_scenario()), sampled):
        coords = ns_coordinates(p.scenario)
        assert coords.entries(coords.of_behavior(p)) == p.entries()


def test_ns_coordinates_miss_signaling_tables():
    """A signaling table has no coordinate representation."""
    p = signaling_example()
    coords = ns_coordinates(p.scenario)
    assert coords.entries(coords.of_behavior(p)) != p.entries()


def test_pull_back_matches_evaluation():
    """objective·p = pulled coefficients·q + constant."""
    p = pr_box()
    coords = ns_coordinates(p.scenario)
    for f in (chsh_prob(), chsh_corr()):
        coefficients, constant = coords.pull_back(functional_objective(f))
        q = coords.of_behavior(p)
        assert sum(c * v for c, v in zip(coefficients, q)) + constant == evaluate(f, p)


def test_affine_consistency_of_bounds():
    """Normalizing shifts both bounds by the offset: 2 + 8 and 4 + 8."""
    g, offset = normalize_nonneg(probability_form(chsh_corr()))
    assert offset == 8
    assert local_bound(g)[0] == local_bound(chsh_corr())[0] + offset == 10
    assert ns_bound(g)[0] == ns_bound(chsh_corr())[0] + offset == 12
    h, offset = normalize_nonneg(chained3_prob())
    assert local_bound(h)[0] == 5 + offset
    assert ns_bound(h)[0] == 6 + offset


def test_ns_polytope_checks():
    """Scenario mismatch and the variable cap are reported."""
    with pytest.raises(ScenarioMismatchError):
        NsPolytope(chained3_scenario()).maximize(chsh_prob())
    with pytest.raises(CapExceededError):
        NsPolytope(chained3_scenario(), Config(LP_VARIABLE_CAP=10))


def test_sampling_is_seeded():
    """Same seed, same behavior; samples are valid non-signaling tables."""
    first = sample_ns_behavior(chsh_scenario(), seed=7, mixing=3)
    second = sample_ns_behavior(chsh_scenario(), seed=7, mixing=3)
    assert first == second
    validate_behavior(first)
    assert is_nonsignaling(first)
    assert evaluate(chsh_prob(), first) <= 4


def test_sampling_accepts_negative_seeds():
    """Any integer seeds the generator; -1 and 2**64 - 1 name the same stream."""
    p = sample_ns_behavior(chsh_scenario(), seed=-1, mixing=2)
    validate_behavior(p)
    assert is_nonsignaling(p)
    assert p == sample_ns_behavior(chsh_scenario(), seed=2**64 - 1, mixing=2)


def test_sampling_with_objective():
    """The objective hook makes the single vertex a maximizer."""
    p = sample_ns_behavior(chsh_scenario(), seed=0, mixing=1, objective=chsh_prob())
    assert evaluate(chsh_prob(), p) == 4


def test_sampling_rejects_zero_mixing():
    """At least one vertex is mixed."""
    with pytest.raises(ValueError):
        sample_ns_behavior(chsh_scenario(), seed=0, mixing=0)


def test_sampled_values_respect_bounds():
    """No sample exceeds the no-signaling bound."""
    for seed in range(20):
        p = sample_ns_behavior(mermin_scenario(), seed=seed, mixing=2)
        assert evaluate(mermin(), p) <= 4
        assert evaluate(chsh_corr(), p.marginal([0, 1])) <= Fraction(4)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
