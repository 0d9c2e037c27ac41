"""Unit tests for the exact simplex solver and its certificate check."""
import pytest
import sys
import os
from fractions import Fraction

# Add parent directory to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from bellmono.errors import LpError
from bellmono.lp.simplex import LpProblem, LpStatus, SimplexTableau, solve_lp, verify_solution


@pytest.fixture
def box_problem():
    """max 3x + 2y s.t. 2x + y <= 4, x + 3y <= 6 (slacks as x2, x3)."""
    return LpProblem(
        num_vars=4,
        objective=[3, 2, 0, 0],
        constraints=[([2, 1, 1, 0], 4), ([1, 3, 0, 1], 6)],
    )


def test_fractional_optimum(box_problem):
    """The optimum sits at the intersection (6/5, 8/5)."""
    solution = solve_lp(box_problem)
    assert solution.status is LpStatus.OPTIMAL
    assert solution.value == Fraction(34, 5)
    assert solution.primal[:2] == (Fraction(6, 5), Fraction(8, 5))
    assert all(c <= 0 for c in solution.reduced_costs)


def test_certificate_verifies(box_problem):
    """Residuals are zero and the duals certify optimality."""
    solution = solve_lp(box_problem)
    report = verify_solution(box_problem, solution)
    assert report.ok
    assert report.max_residual == 0
    assert report.dual == (Fraction(7, 5), Fraction(1, 5))


def test_rational_coefficients():
    """Fractional data is handled exactly."""
    problem = LpProblem(2, [1, 0], [([Fraction(1, 3), Fraction(1, 2)], Fraction(1, 6))])
    solution = solve_lp(problem)
    assert solution.value == Fraction(1, 2)
    assert verify_solution(problem, solution).ok


def test_infeasible():
    """x0 + x1 = -1 has no non-negative solution."""
    solution = solve_lp(LpProblem(2, [1, 1], [([1, 1], -1)]))
    assert solution.status is LpStatus.INFEASIBLE
    assert solution.value is None
    assert not solution.optimal


def test_unbounded():
    """max x0 s.t. x0 - x1 = 0 grows without limit."""
    solution = solve_lp(LpProblem(2, [1, 0], [([1, -1], 0)]))
    assert solution.status is LpStatus.UNBOUNDED
    with pytest.raises(LpError):
        verify_solution(LpProblem(2, [1, 0], [([1, -1], 0)]), solution)


def test_redundant_rows_are_dropped():
    """A repeated equality leaves a degenerate artificial that phase one removes."""
    problem = LpProblem(2, [1, 0], [([1, 1], 1), ([1, 1], 1), ([2, 2], 2)])
    solution = solve_lp(problem)
    assert solution.value == 1
    assert solution.primal == (1, 0)
    assert len(solution.basis) == 1
    assert verify_solution(problem, solution).ok


def test_negative_rhs_rows():
    """Rows with a negative right-hand side are flipped before phase one."""
    problem = LpProblem(3, [0, 1, 0], [([-1, -1, 0], -2), ([1, 0, -1], 1)])
    solution = solve_lp(problem)
    assert solution.value == 1
    assert verify_solution(problem, solution).ok


def test_degenerate_cycling_example():
    """Beale's cycling example terminates under Bland's rule."""
    problem = LpProblem(
        num_vars=7,
        objective=[Fraction(3, 4), -150, Fraction(1, 50), -6, 0, 0, 0],
        constraints=[
            ([Fraction(1, 4), -60, Fraction(-1, 25), 9, 1, 0, 0], 0),
            ([Fraction(1, 2), -90, Fraction(-1, 50), 3, 0, 1, 0], 0),
            ([0, 0, 1, 0, 0, 0, 1], 1),
        ],
    )
    solution = solve_lp(problem)
    assert solution.value == Fraction(1, 20)
    assert verify_solution(problem, solution).ok


def test_deterministic(box_problem):
    """Identical input gives identical output."""
    assert solve_lp(box_problem) == solve_lp(box_problem)


def test_malformed_problems():
    """Dimension mismatches are LpErrors."""
    with pytest.raises(LpError):
        LpProblem(2, [1], [([1, 1], 1)])
    with pytest.raises(LpError):
        LpProblem(2, [1, 1], [([1], 1)])
    with pytest.raises(LpError):
        LpProblem(2, [1, 1], [])
    with pytest.raises(LpError):
        LpProblem(0, [], [([], 0)])


def test_tableau_dump(box_problem):
    """The dump lists every variable, the basis and the right-hand side."""
    tableau = SimplexTableau(box_problem)
    assert tableau.phase_one()
    assert tableau.phase_two() is LpStatus.OPTIMAL
    text = tableau.dump()
    assert "rhs" in text.splitlines()[0]
    assert "x3" in text
    assert "34/5" in text


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
