"""
Exact two-phase simplex for small equality-form linear programs.

maximize c·x subject to A x = b, x >= 0, with Bland's rule for both the
entering and the leaving variable. Each tableau row is stored sparsely as
integer numerators over one positive row denominator, gcd-reduced after
every pivot, so all arithmetic is exact without per-entry Fraction objects.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Dict, List, Optional, Sequence, Tuple

from bellmono.errors import LpError

SparseRow = Dict[int, int]


class LpStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    """maximize objective·x s.t. row·x = rhs for every constraint, x >= 0."""

    num_vars: int
    objective: Sequence[Rational]
    constraints: Sequence[Tuple[Sequence[Rational], Rational]]

    def __post_init__(self):
        object.__setattr__(self, 'objective', tuple(self.objective))
        object.__setattr__(self, 'constraints', tuple((tuple(row), rhs) for row, rhs in self.constraints))
        if self.num_vars < 1:
            raise LpError(f"num_vars must be positive, got {self.num_vars}", "lp-exact")
        if len(self.objective) != self.num_vars:
            raise LpError(f"objective has {len(self.objective)} entries, expected {self.num_vars}", "lp-exact")
        if not self.constraints:
            raise LpError("at least one constraint is required", "lp-exact")
        for i, (row, _) in enumerate(self.constraints):
            if len(row) != self.num_vars:
                raise LpError(f"constraint {i} has {len(row)} entries, expected {self.num_vars}", "lp-exact")

    @property
    def num_constraints(self) -> int:
        return len(self.constraints)


@dataclass(frozen=True)
class LpSolution:
    """
    Solver output. On OPTIMAL, ``primal`` is a basic feasible solution,
    ``basis`` lists the basic variables and ``reduced_costs`` are all <= 0.
    """

    status: LpStatus
    value: Optional[Fraction]
    primal: Tuple[Fraction, ...]
    basis: Tuple[int, ...]
    reduced_costs: Tuple[Fraction, ...]
    iterations: int

    @property
    def optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


@dataclass(frozen=True)
class CertificateReport:
    """Independent optimality check of an LpSolution."""

    max_residual: Fraction
    nonnegative: bool
    value_matches: bool
    reduced_costs: Tuple[Fraction, ...]
    dual: Tuple[Fraction, ...]
    dual_feasible: bool
    basic_costs_zero: bool
    strong_duality: bool

    @property
    def ok(self) -> bool:
        return (self.max_residual == 0 and self.nonnegative and self.value_matches
                and self.dual_feasible and self.basic_costs_zero and self.strong_duality)


class _Row:
    """Sparse exact row: (Σ coeffs[j]·x_j = rhs) / den."""

    __slots__ = ('coeffs', 'rhs', 'den')

    def __init__(self, coeffs: SparseRow, rhs: int, den: int):
        self.coeffs = coeffs
        self.rhs = rhs
        self.den = den
        self.reduce()

    @classmethod
    def from_values(cls, values: Sequence[Rational], rhs: Rational) -> '_Row':
        nonzero = {j: v for j, v in enumerate(values) if v}
        den = lcm(rhs.denominator, *(v.denominator for v in nonzero.values()))
        coeffs = {j: v.numerator * (den // v.denominator) for j, v in nonzero.items()}
        return cls(coeffs, rhs.numerator * (den // rhs.denominator), den)

    def reduce(self):
        g = gcd(self.den, self.rhs, *self.coeffs.values())
        if g > 1:
            self.coeffs = {j: v // g for j, v in self.coeffs.items()}
            self.rhs //= g
            self.den //= g

    def negate(self):
        self.coeffs = {j: -v for j, v in self.coeffs.items()}
        self.rhs = -self.rhs

    def eliminate(self, pivot_row: '_Row', c: int):
        """Subtract the multiple of ``pivot_row`` that clears column c (pivot_row[c] = its den)."""
        factor = self.coeffs.get(c, 0)
        if not factor:
            return
        p = pivot_row.den
        coeffs = {j: a * p for j, a in self.coeffs.items()}
        for j, b in pivot_row.coeffs.items():
            v = coeffs.get(j, 0) - factor * b
            if v:
                coeffs[j] = v
            else:
                coeffs.pop(j, None)
        self.coeffs = coeffs
        self.rhs = self.rhs * p - factor * pivot_row.rhs
        self.den *= p
        self.reduce()

    def normalize_on(self, c: int):
        """Scale so that the true coefficient of column c is 1 (stored as coeffs[c] == den)."""
        p = self.coeffs[c]
        if p < 0:
            self.negate()
            p = -p
        self.den = p
        self.reduce()

    def value(self, j: int) -> Fraction:
        return Fraction(self.coeffs.get(j, 0), self.den)


class SimplexTableau:
    """Tableau over the original variables; artificial columns stay implicit."""

    def __init__(self, problem: LpProblem):
        self.problem = problem
        self.n = problem.num_vars
        self.rows: List[_Row] = []
        self.basis: List[int] = []
        for i, (coefficients, rhs) in enumerate(problem.constraints):
            row = _Row.from_values(coefficients, rhs)
            if row.rhs < 0:
                row.negate()
            self.rows.append(row)
            self.basis.append(self.n + i)  # artificial of constraint i
        self.cost: Optional[_Row] = None
        self.iterations = 0

    def is_artificial(self, var: int) -> bool:
        return var >= self.n

    def _leaving_key(self, k: int):
        # fixed variable order for Bland's rule: artificials first, then originals
        var = self.basis[k]
        return (0, var) if self.is_artificial(var) else (1, var)

    def pivot(self, r: int, c: int):
        """Make column c basic in row r."""
        row = self.rows[r]
        row.normalize_on(c)
        for k, other in enumerate(self.rows):
            if k != r:
                other.eliminate(row, c)
        if self.cost is not None:
            self.cost.eliminate(row, c)
        self.basis[r] = c
        self.iterations += 1

    def _entering(self) -> Optional[int]:
        positive = [j for j, v in self.cost.coeffs.items() if v > 0]
        return min(positive) if positive else None

    def _leaving(self, c: int) -> Optional[int]:
        # ratio rhs/a compared by cross-multiplication; row denominators cancel
        best = None
        best_rhs, best_a = 0, 1
        for k, row in enumerate(self.rows):
            a = row.coeffs.get(c, 0)
            if a <= 0:
                continue
            if best is None:
                best, best_rhs, best_a = k, row.rhs, a
                continue
            lhs, rhs = row.rhs * best_a, best_rhs * a
            if lhs < rhs or (lhs == rhs and self._leaving_key(k) < self._leaving_key(best)):
                best, best_rhs, best_a = k, row.rhs, a
        return best

    def _iterate(self) -> LpStatus:
        while True:
            c = self._entering()
            if c is None:
                return LpStatus.OPTIMAL
            r = self._leaving(c)
            if r is None:
                return LpStatus.UNBOUNDED
            self.pivot(r, c)

    def phase_one(self) -> bool:
        """
        Drive the artificial variables to zero.

        The phase-one cost row is the sum of all constraint rows: its entries
        are the rates at which each original variable reduces Σ artificials,
        and its rhs is the current Σ artificials.

        Returns:
            False when the constraints are infeasible
        """
        common = lcm(*(row.den for row in self.rows))
        total: SparseRow = {}
        total_rhs = 0
        for row in self.rows:
            scale = common // row.den
            for j, v in row.coeffs.items():
                total[j] = total.get(j, 0) + scale * v
            total_rhs += scale * row.rhs
        self.cost = _Row({j: v for j, v in total.items() if v}, total_rhs, common)

        if self._iterate() is LpStatus.UNBOUNDED:
            raise LpError("phase one reported unbounded", "lp-exact")
        if self.cost.rhs != 0:
            return False

        # degenerate artificials: pivot them out, or drop their (redundant) rows
        redundant = []
        for r in range(len(self.rows)):
            if self.is_artificial(self.basis[r]):
                coeffs = self.rows[r].coeffs
                if coeffs:
                    self.pivot(r, min(coeffs))
                else:
                    redundant.append(r)
        for r in reversed(redundant):
            del self.rows[r]
            del self.basis[r]
        return True

    def phase_two(self) -> LpStatus:
        self.cost = _Row.from_values(self.problem.objective, Fraction(0))
        for row, var in zip(self.rows, self.basis):
            self.cost.eliminate(row, var)
        return self._iterate()

    def primal(self) -> Tuple[Fraction, ...]:
        x = [Fraction(0)] * self.n
        for row, var in zip(self.rows, self.basis):
            x[var] = Fraction(row.rhs, row.den)
        return tuple(x)

    def reduced_costs(self) -> Tuple[Fraction, ...]:
        return tuple(self.cost.value(j) for j in range(self.n))

    def dump(self) -> str:
        """Text dump of the current tableau (exact rationals)."""
        header = [""] + [f"x{j}" for j in range(self.n)] + ["|", "rhs"]
        lines = [header]
        for row, var in zip(self.rows, self.basis):
            name = f"a{var - self.n}" if self.is_artificial(var) else f"x{var}"
            cells = [str(row.value(j)) for j in range(self.n)]
            lines.append([name] + cells + ["|", str(Fraction(row.rhs, row.den))])
        if self.cost is not None:
            cells = [str(self.cost.value(j)) for j in range(self.n)]
            lines.append(["c"] + cells + ["|", str(Fraction(self.cost.rhs, self.cost.den))])
        widths = [max(len(line[j]) for line in lines) for j in range(len(header))]
        return "\n".join(
            " ".join(cell.rjust(w) for cell, w in zip(line, widths)).rstrip() for line in lines
        )


def solve_lp(problem: LpProblem) -> LpSolution:
    """
    Solve exactly with the two-phase simplex method and Bland's rule.

    Infeasible and unbounded problems are reported through the status.
    Identical input gives identical output.
    """
    tableau = SimplexTableau(problem)
    empty: Tuple[Fraction, ...] = ()
    if not tableau.phase_one():
        return LpSolution(LpStatus.INFEASIBLE, None, empty, empty, empty, tableau.iterations)

    status = tableau.phase_two()
    if status is LpStatus.UNBOUNDED:
        return LpSolution(status, None, empty, tuple(tableau.basis), empty, tableau.iterations)

    x = tableau.primal()
    value = sum((Fraction(c) * v for c, v in zip(problem.objective, x) if v), Fraction(0))
    return LpSolution(
        status=LpStatus.OPTIMAL,
        value=value,
        primal=x,
        basis=tuple(tableau.basis),
        reduced_costs=tableau.reduced_costs(),
        iterations=tableau.iterations,
    )


def basis_duals(problem: LpProblem, basis: Sequence[int]) -> Tuple[Fraction, ...]:
    """
    Simplex multipliers of a basis: a solution y of B^T y = c_B by exact
    Gauss-Jordan elimination (entries left free are 0).
    """
    m = problem.num_constraints
    equations = [
        _Row.from_values([problem.constraints[i][0][k] for i in range(m)], Fraction(problem.objective[k]))
        for k in basis
    ]
    pivots = []
    for r, equation in enumerate(equations):
        if not equation.coeffs:
            if equation.rhs != 0:
                raise LpError("basis columns are linearly dependent", "lp-exact")
            continue
        col = min(equation.coeffs)
        equation.normalize_on(col)
        for k, other in enumerate(equations):
            if k != r:
                other.eliminate(equation, col)
        pivots.append((r, col))

    y = [Fraction(0)] * m
    for r, col in pivots:
        equation = equations[r]
        y[col] = Fraction(equation.rhs, equation.den)
    return tuple(y)


def verify_solution(problem: LpProblem, solution: LpSolution) -> CertificateReport:
    """
    Check an optimal solution without reusing the solver's tableau.

    Recomputes the primal residuals, solves B^T y = c_B for the duals from the
    returned basis alone, and checks that every reduced cost c_j − A_j·y is
    non-positive (zero on the basis) and that b·y equals the reported value.
    """
    if not solution.optimal:
        raise LpError(f"no certificate for status {solution.status.value}", "lp-exact")
    x = solution.primal
    support = [j for j, v in enumerate(x) if v]

    max_residual = Fraction(0)
    for row, rhs in problem.constraints:
        residual = abs(sum((row[j] * x[j] for j in support), Fraction(0)) - rhs)
        max_residual = max(max_residual, residual)
    nonnegative = all(v >= 0 for v in x)
    value = sum((problem.objective[j] * x[j] for j in support), Fraction(0))

    y = basis_duals(problem, solution.basis)
    costs = [Fraction(c) for c in problem.objective]
    for (row, _), yi in zip(problem.constraints, y):
        if yi:
            for j, a in enumerate(row):
                if a:
                    costs[j] -= a * yi
    dual_value = sum((rhs * yi for (_, rhs), yi in zip(problem.constraints, y) if yi), Fraction(0))

    return CertificateReport(
        max_residual=max_residual,
        nonnegative=nonnegative,
        value_matches=value == solution.value,
        reduced_costs=tuple(costs),
        dual=y,
        dual_feasible=all(r <= 0 for r in costs),
        basic_costs_zero=all(costs[j] == 0 for j in solution.basis),
        strong_duality=dual_value == solution.value,
    )
