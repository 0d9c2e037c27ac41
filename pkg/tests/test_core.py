"""Unit tests for scenarios, behaviors, functionals and rational rendering."""
import pytest
import math
import sys
import os
from fractions import Fraction

# Add parent directory to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from bellmono.bounds.nonsignaling import sample_ns_behavior
from bellmono.core.behavior import (
    Behavior,
    deterministic_behavior,
    is_nonsignaling,
    mix_behaviors,
    product_behavior,
    uniform_behavior,
    validate_behavior,
)
from bellmono.core.fixtures import (
    chsh_corr,
    chsh_prob,
    chsh_scenario,
    double_pr,
    fixtures,
    pr_box,
    signaling_example,
    tsirelson,
)
from bellmono.core.functional import (
    BellFunctional,
    FunctionalForm,
    evaluate,
    expand_correlators,
    normalize_nonneg,
    probability_form,
)
from bellmono.core.rational import (
    as_fraction,
    format_decimal,
    format_rational,
    inv_sqrt2_approximation,
    parse_rational,
    render,
)
from bellmono.core.scenario import Scenario, ravel, unravel
from bellmono.errors import (
    BehaviorError,
    CapExceededError,
    FunctionalFormError,
    ScenarioError,
    ScenarioMismatchError,
)


@pytest.fixture
def chsh():
    """CHSH scenario: two parties, two settings, two outcomes."""
    return chsh_scenario()


def test_mixed_radix_index():
    """First digit is the most significant."""
    assert ravel((1, 0, 1), (2, 3, 2)) == 7
    assert unravel(7, (2, 3, 2)) == (1, 0, 1)
    assert unravel(0, (4, 4)) == (0, 0)


def test_scenario_shapes(chsh):
    """Shape properties of a small scenario."""
    scenario = Scenario.of((3, 2), (2, 4))
    assert scenario.num_parties == 2
    assert scenario.table_shape == (3, 2, 2, 4)
    assert scenario.joint_settings == 6
    assert scenario.joint_outcomes == 8
    assert not scenario.is_binary()
    assert chsh.is_binary()
    assert list(chsh.settings_tuples()) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert chsh.describe() == "(2,2) x (2,2)"


def test_invalid_scenarios():
    """Counts below the minimum and too many parties are rejected."""
    with pytest.raises(ScenarioError):
        Scenario.of((2, 1))
    with pytest.raises(ScenarioError):
        Scenario.of((0, 2))
    with pytest.raises(ScenarioError):
        Scenario(())
    with pytest.raises(CapExceededError):
        Scenario.of(*[(1, 2)] * 13)


def test_index_checks(chsh):
    """Out-of-range settings or outcomes raise ScenarioError."""
    assert chsh.check_settings((1, 0)) == (1, 0)
    with pytest.raises(ScenarioError):
        chsh.check_settings((2, 0))
    with pytest.raises(ScenarioError):
        chsh.check_outcomes((0,))


def test_pr_box_is_valid_and_nonsignaling():
    """PR box: normalized, non-negative, non-signaling."""
    p = pr_box()
    validate_behavior(p)
    assert is_nonsignaling(p)
    assert p.probability((1, 1), (0, 1)) == Fraction(1, 2)
    assert p.probability((1, 1), (0, 0)) == 0


def test_signaling_witness():
    """Bob's marginal reveals Alice's setting."""
    verdict = is_nonsignaling(signaling_example())
    assert not verdict
    witness = verdict.witness
    assert witness.party == 0
    assert witness.settings_pair == (0, 1)
    assert witness.other_settings == (0,)
    assert witness.other_outcomes == (0,)
    assert witness.difference == -1
    assert "party 0" in witness.describe()


def test_validate_behavior_rejects_bad_tables(chsh):
    """Negative entries and unnormalized settings name the offending index."""
    entries = [Fraction(1, 4)] * 16
    entries[0] = Fraction(-1, 4)
    entries[1] = Fraction(3, 4)
    with pytest.raises(BehaviorError) as excinfo:
        validate_behavior(Behavior.from_entries(chsh, entries))
    assert excinfo.value.index == (0, 0, 0, 0)

    entries = [Fraction(1, 4)] * 16
    entries[15] = Fraction(1, 2)
    with pytest.raises(BehaviorError) as excinfo:
        validate_behavior(Behavior.from_entries(chsh, entries))
    assert excinfo.value.index == (1, 1)


def test_behavior_entry_count(chsh):
    """A flat list of the wrong length is refused."""
    with pytest.raises(BehaviorError):
        Behavior.from_entries(chsh, [Fraction(1, 4)] * 15)


def test_marginal_of_double_pr_is_pr_box():
    """Dropping the second Bob (held at setting 0) leaves a PR box."""
    assert double_pr().marginal([0, 1]) == pr_box()
    assert double_pr().marginal([0, 2]).scenario == chsh_scenario()


def test_marginal_reorders_parties():
    """Kept parties appear in the listed order."""
    p = deterministic_behavior(chsh_scenario(), ((0, 1), (1, 1)))
    swapped = p.marginal([1, 0])
    assert swapped.probability((0, 1), (1, 1)) == 1
    assert swapped.probability((0, 0), (1, 0)) == 1


def test_product_and_mixture():
    """Product of local behaviors is non-signaling; mixtures stay normalized."""
    single = Scenario.of((2, 2))
    left = deterministic_behavior(single, ((0, 1),))
    right = uniform_behavior(single)
    product = product_behavior([left, right])
    assert product.scenario == chsh_scenario()
    validate_behavior(product)
    assert is_nonsignaling(product)
    assert product.probability((1, 0), (1, 0)) == Fraction(1, 2)

    mixed = mix_behaviors([Fraction(1, 3), Fraction(2, 3)], [pr_box(), uniform_behavior(chsh_scenario())])
    validate_behavior(mixed)
    with pytest.raises(ScenarioMismatchError):
        mix_behaviors([Fraction(1, 2), Fraction(1, 2)], [pr_box(), double_pr()])


def test_evaluate_chsh_on_known_behaviors():
    """PR box reaches 4 in both conventions; the uniform behavior gives 2 and 0."""
    assert evaluate(chsh_prob(), pr_box()) == 4
    assert evaluate(chsh_corr(), pr_box()) == 4
    uniform = uniform_behavior(chsh_scenario())
    assert evaluate(chsh_prob(), uniform) == 2
    assert evaluate(chsh_corr(), uniform) == 0


def test_evaluation_is_linear_under_mixing():
    """evaluate(f, w p + (1 - w) q) = w evaluate(f, p) + (1 - w) evaluate(f, q), exactly."""
    behaviors = [
        pr_box(),
        tsirelson(),
        uniform_behavior(chsh_scenario()),
        deterministic_behavior(chsh_scenario(), ((0, 1), (1, 1))),
    ]
    for f in (chsh_prob(), chsh_corr()):
        for p in behaviors:
            for q in behaviors:
                for w in (Fraction(0), Fraction(1, 3), Fraction(5, 7)):
                    mixed = mix_behaviors([w, 1 - w], [p, q])
                    assert evaluate(f, mixed) == w * evaluate(f, p) + (1 - w) * evaluate(f, q)


def test_tsirelson_values():
    """Rational stand-in for the Tsirelson point: 2√2 and 2+√2 within 1e-9."""
    p = tsirelson()
    validate_behavior(p)
    assert abs(float(evaluate(chsh_corr(), p)) - 2 * math.sqrt(2)) < 1e-9
    assert abs(float(evaluate(chsh_prob(), p)) - (2 + math.sqrt(2))) < 1e-9


def test_evaluate_scenario_mismatch():
    """A functional and a behavior on different scenarios cannot be combined."""
    with pytest.raises(ScenarioMismatchError):
        evaluate(chsh_prob(), double_pr())


def test_functional_canonical_terms(chsh):
    """Repeated keys add up, zero coefficients vanish, equal content compares equal."""
    f = BellFunctional.from_terms(chsh, [((0, 0), (0, 0), 1), ((0, 0), (0, 0), "1/2"), ((1, 1), (1, 1), 0)], 2)
    assert dict(f.terms) == {((0, 0), (0, 0)): Fraction(3, 2)}
    g = BellFunctional.from_terms(chsh, [((0, 0), (0, 0), Fraction(3, 2))], 2, label="other")
    assert f == g
    assert f.coefficient((1, 1), (1, 1)) == 0


def test_correlator_form_rules():
    """Correlator terms carry no outcomes and need binary parties."""
    with pytest.raises(FunctionalFormError):
        BellFunctional.from_terms(Scenario.of((2, 3), (2, 2)), [((0, 0), (), 1)], 1, FunctionalForm.CORRELATOR)
    with pytest.raises(FunctionalFormError):
        BellFunctional.from_terms(chsh_scenario(), [((0, 0), (0, 0), 1)], 1, FunctionalForm.CORRELATOR)
    with pytest.raises(FunctionalFormError):
        expand_correlators(chsh_prob())


def test_expand_correlators():
    """c·E(s) becomes +c on even parity and -c on odd parity."""
    g = expand_correlators(chsh_corr())
    assert g.form is FunctionalForm.PROBABILITY
    assert len(g.terms) == 16
    assert g.coefficient((0, 0), (1, 1)) == 1
    assert g.coefficient((0, 0), (0, 1)) == -1
    assert g.coefficient((1, 1), (0, 0)) == -1
    assert g.bound == 2


def test_normalize_chsh_corr():
    """Complement substitution of CHSH-corr: offset 8, bound 10."""
    g, offset = normalize_nonneg(probability_form(chsh_corr()))
    assert offset == 8
    assert g.bound == 10
    assert g.is_nonnegative()
    assert evaluate(g, pr_box()) == 12
    with pytest.raises(FunctionalFormError):
        normalize_nonneg(chsh_corr())


def test_normalize_nonnegative_is_identity():
    """A non-negative functional comes back unchanged with offset 0."""
    g, offset = normalize_nonneg(chsh_prob())
    assert offset == 0
    assert g == chsh_prob()


def test_normalization_offset_on_samples():
    """evaluate(normalized) - evaluate(signed) is exactly the offset on sampled behaviors."""
    f = chsh_corr()
    g, offset = normalize_nonneg(probability_form(f))
    for seed in range(100):
        p = sample_ns_behavior(chsh_scenario(), seed, mixing=2)
        assert evaluate(g, p) - evaluate(f, p) == offset == 8


def test_rational_text():
    """p/q parsing and rendering."""
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational(" -3 ") == -3
    assert format_rational(3) == "3/1"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_decimal_rendering():
    """Twelve significant digits with trailing zeros kept."""
    assert format_decimal(3) == "3.00000000000"
    assert format_decimal(Fraction(1, 3)) == "0.333333333333"
    assert format_decimal(40) == "40.0000000000"
    assert render(3) == "3/1 (3.00000000000)"


def test_inverse_sqrt2_precision():
    """|r² - 1/2| <= 1e-24 at the default precision."""
    r = inv_sqrt2_approximation()
    assert abs(r * r - Fraction(1, 2)) <= Fraction(1, 10 ** 24)


def test_fixture_library():
    """Every fixture builds, and behaviors among them are valid tables."""
    library = fixtures()
    assert {'chsh-prob', 'chsh-corr', 'chained3-prob', 'mermin', 'pr-box', 'double-pr'} <= set(library)
    for value in library.values():
        if isinstance(value, Behavior):
            validate_behavior(value)


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
