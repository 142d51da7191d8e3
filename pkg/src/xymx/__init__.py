"""Positive rational solutions of x^y = y^(m x).

The pipeline splits solutions by k = |a - b| where y = x^(a/b): an explicit
family for k = 1, Pell equations for k = 2 and Thue equations for k >= 3,
the last decided by a residue sieve plus bounded search.
"""

from .classify import ClassifyConfig, SolutionSet, back_map, candidates, classify, k_bound
from .verify import PowerSolution, expand, verify_power_solution

__all__ = [
    "ClassifyConfig",
    "PowerSolution",
    "SolutionSet",
    "back_map",
    "candidates",
    "classify",
    "expand",
    "k_bound",
    "verify_power_solution",
]
__version__ = "0.1.0"
