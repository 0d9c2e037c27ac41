"""Exact rational linear programming."""
from bellmono.lp.simplex import (
    CertificateReport,
    LpProblem,
    LpSolution,
    LpStatus,
    SimplexTableau,
    basis_duals,
    solve_lp,
    verify_solution,
)

__all__ = [
    'CertificateReport',
    'LpProblem',
    'LpSolution',
    'LpStatus',
    'SimplexTableau',
    'basis_duals',
    'solve_lp',
    'verify_solution'
]
