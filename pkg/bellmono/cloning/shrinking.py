"""Shrinking factors of 1 -> n cloning and the no-signaling bound on their mean."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from bellmono.config.settings import Config, config
from bellmono.core.behavior import Behavior
from bellmono.core.functional import BellFunctional, FunctionalForm, evaluate, normalize_nonneg, probability_form
from bellmono.core.rational import as_fraction
from bellmono.errors import InvalidValueError

ValueOrBehavior = Union[Fraction, int, Behavior]


@dataclass(frozen=True)
class CloningReport:
    """
    η_m = B(A, clone m) / B(A, B) for each clone, their mean, and the bound
    R / B(A, B) that the mean cannot exceed on non-signaling clones.
    """

    base_value: Fraction
    pair_values: Tuple[Fraction, ...]
    etas: Tuple[Fraction, ...]
    mean_eta: Fraction
    bound: Fraction
    holds: bool
    saturated: bool
    trivial: bool
    form: FunctionalForm
    form_note: str
    approximate: bool
    tolerance: Optional[float]


def form_note(f: BellFunctional) -> str:
    if f.form is FunctionalForm.CORRELATOR:
        return "correlator form"
    if f.is_nonnegative():
        return "non-negative probability form"
    return "signed probability form"


def _value(f: BellFunctional, value: ValueOrBehavior) -> Fraction:
    if isinstance(value, Behavior):
        return evaluate(f, value)
    return as_fraction(value)


def mean_shrink_bound(f: BellFunctional, base_value: ValueOrBehavior) -> Tuple[Fraction, bool]:
    """
    R / B(A, B), the bound on the mean shrinking factor.

    Returns:
        (bound, trivial) where trivial means bound >= 1, i.e. the base does
        not violate the inequality

    Raises:
        InvalidValueError: base value <= 0
    """
    base = _value(f, base_value)
    if base <= 0:
        raise InvalidValueError(f"base value must be positive, got {base}", "cloning")
    bound = f.bound / base
    return bound, bound >= 1


def shrinking_factors(
    f: BellFunctional,
    base: ValueOrBehavior,
    clones: Sequence[ValueOrBehavior],
    check_bound: bool = True,
    approximate: bool = False,
    cfg: Config = config
) -> CloningReport:
    """
    Shrinking factors of the clones against the base value.

    Args:
        f: Bipartite functional; Bob's setting count is the clone count n
        base: B(A, B) as a value or a behavior to evaluate
        clones: B(A, clone m) for each clone, as values or behaviors
        check_bound: Require exactly n clones
        approximate: Inputs are rational approximations of irrational values;
            comparisons then use FLOAT_TOLERANCE

    Raises:
        InvalidValueError: zero base value, or a clone count other than n
    """
    base_value = _value(f, base)
    if base_value == 0:
        raise InvalidValueError("base value must be non-zero", "cloning")
    pair_values = tuple(_value(f, clone) for clone in clones)
    if not pair_values:
        raise InvalidValueError("at least one clone value is required", "cloning")
    if check_bound and f.is_bipartite():
        n = f.scenario.parties[1].settings
        if len(pair_values) != n:
            raise InvalidValueError(f"expected {n} clones (Bob's setting count), got {len(pair_values)}", "cloning")

    etas = tuple(v / base_value for v in pair_values)
    mean_eta = sum(etas, Fraction(0)) / len(etas)
    bound = f.bound / base_value

    tolerance = cfg.FLOAT_TOLERANCE if approximate else None
    if approximate:
        slack = Fraction(tolerance)
        holds = mean_eta <= bound + slack
        saturated = abs(mean_eta - bound) <= slack
    else:
        holds = mean_eta <= bound
        saturated = mean_eta == bound

    return CloningReport(
        base_value=base_value,
        pair_values=pair_values,
        etas=etas,
        mean_eta=mean_eta,
        bound=bound,
        holds=holds,
        saturated=saturated,
        trivial=bound >= 1,
        form=f.form,
        form_note=form_note(f),
        approximate=approximate,
        tolerance=tolerance,
    )


def nonnegative_counterpart(
    f: BellFunctional,
    base: ValueOrBehavior,
    clones: Sequence[ValueOrBehavior],
    approximate: bool = False,
    cfg: Config = config
) -> Optional[CloningReport]:
    """
    The same clones measured with the non-negative rewrite g = f + C.

    Returns None when f is already in non-negative probability form.
    """
    if f.form is FunctionalForm.PROBABILITY and f.is_nonnegative():
        return None
    g, offset = normalize_nonneg(probability_form(f))
    shifted_base = _value(f, base) + offset
    shifted = [_value(f, clone) + offset for clone in clones]
    return shrinking_factors(g, shifted_base, shifted, approximate=approximate, cfg=cfg)
