"""Unit tests for cloning shrinking factors."""
import pytest
import math
import sys
import os
from fractions import Fraction

# Add parent directory to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from bellmono.bounds.nonsignaling import sample_ns_behavior
from bellmono.cloning.shrinking import mean_shrink_bound, nonnegative_counterpart, shrinking_factors
from bellmono.core.behavior import uniform_behavior
from bellmono.core.fixtures import chsh_corr, chsh_prob, chsh_scenario, pr_box, tsirelson
from bellmono.core.rational import sqrt2_approximation
from bellmono.errors import InvalidValueError
from bellmono.monogamy.check import pair_value
from bellmono.monogamy.setup import extend_scenario


@pytest.fixture
def two_sqrt2():
    """Rational stand-in for the Tsirelson value 2√2."""
    return 2 * sqrt2_approximation()


def test_tsirelson_bound_is_inverse_sqrt2(two_sqrt2):
    """R / B = 2 / 2√2 = 1/√2, non-trivial."""
    bound, trivial = mean_shrink_bound(chsh_corr(), two_sqrt2)
    assert abs(float(bound) - 1 / math.sqrt(2)) < 1e-9
    assert not trivial


def test_trivial_when_base_within_bound():
    """A base value <= R gives a ratio >= 1."""
    assert mean_shrink_bound(chsh_corr(), 2) == (1, True)
    assert mean_shrink_bound(chsh_corr(), 1) == (2, True)
    with pytest.raises(InvalidValueError):
        mean_shrink_bound(chsh_corr(), 0)


def test_nonnegative_form_ratio():
    """CHSH-prob at the Tsirelson behavior: 3 / (2 + √2)."""
    bound, trivial = mean_shrink_bound(chsh_prob(), tsirelson())
    assert abs(float(bound) - 3 / (2 + math.sqrt(2))) < 1e-9
    assert not trivial


def test_symmetric_clones_saturate(two_sqrt2):
    """n clones at R each reach the bound."""
    report = shrinking_factors(chsh_corr(), two_sqrt2, [2, 2], approximate=True)
    assert report.saturated
    assert report.holds
    assert report.mean_eta == report.bound
    assert report.tolerance == 1e-9
    assert report.form_note == "correlator form"


def test_exact_factors():
    """Asymmetric clones: η = (3/4, 1/4) against B = 4."""
    report = shrinking_factors(chsh_corr(), 4, [3, 1])
    assert report.etas == (Fraction(3, 4), Fraction(1, 4))
    assert report.mean_eta == Fraction(1, 2)
    assert report.bound == Fraction(1, 2)
    assert report.saturated
    assert report.tolerance is None


def test_clones_as_behaviors():
    """Behaviors are evaluated; uniform clones sit inside the bound."""
    uniform = uniform_behavior(chsh_scenario())
    report = shrinking_factors(chsh_prob(), pr_box(), [uniform, uniform])
    assert report.base_value == 4
    assert report.etas == (Fraction(1, 2), Fraction(1, 2))
    assert report.bound == Fraction(3, 4)
    assert report.holds
    assert not report.saturated


def test_exceeding_clones_are_flagged():
    """Clones above the bound are reported, not rejected."""
    report = shrinking_factors(chsh_prob(), 4, [4, 4])
    assert not report.holds
    assert report.mean_eta == 1


def test_invalid_inputs():
    """Zero base, no clones, or the wrong clone count."""
    with pytest.raises(InvalidValueError):
        shrinking_factors(chsh_corr(), 0, [1, 1])
    with pytest.raises(InvalidValueError):
        shrinking_factors(chsh_corr(), 2, [])
    with pytest.raises(InvalidValueError):
        shrinking_factors(chsh_corr(), 2, [1, 1, 1])
    assert len(shrinking_factors(chsh_corr(), 2, [1, 1, 1], check_bound=False).etas) == 3


def test_nonnegative_counterpart(two_sqrt2):
    """The signed reading and its non-negative rewrite give different ratios."""
    report = nonnegative_counterpart(chsh_corr(), two_sqrt2, [2, 2], approximate=True)
    assert report.form_note == "non-negative probability form"
    assert report.bound == Fraction(10) / (8 + two_sqrt2)
    assert report.saturated
    assert nonnegative_counterpart(chsh_prob(), 3, [3, 3]) is None


def test_mean_factor_from_sampled_extended_behaviors():
    """Pair values of any no-signaling extended behavior keep the mean factor within R/B."""
    setup = extend_scenario(chsh_prob())
    for seed in range(10):
        p = sample_ns_behavior(setup.extended, seed, mixing=2)
        values = [pair_value(setup, p, m) for m in range(1, setup.n + 1)]
        for base in (Fraction(4), Fraction(7, 2)):
            report = shrinking_factors(chsh_prob(), base, values)
            assert report.mean_eta == sum(values) / (setup.n * base)
            assert report.mean_eta <= report.bound == Fraction(3) / base
            assert report.holds


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
