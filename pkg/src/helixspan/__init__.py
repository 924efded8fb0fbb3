"""Exact distribution of 5'-3' distances in RNA secondary structures.

Per-structure distances, exact finite-length distance tables from the
bivariate generating function (plain and r-canonical structures), the
limit law over Q(sqrt 5), and brute-force enumeration to check them all.
"""

from .diagram import (
    SecondaryStructure,
    bfs_distance,
    is_r_canonical,
    min_stack_length,
    parse_dot_bracket,
    stack_runs,
    to_dot_bracket,
)
from .limitlaw import (
    delta,
    gamma_density,
    growth_rate_check,
    q_series,
    rho,
    singular_constants,
    tail_ratio_check,
)
from .oracle import enumerate_structures, histogram
from .qsqrt5 import QSqrt5
from .series import RationalSeries, canonical_series, irr_series, secondary_series
from .tableaux import Tableau, beta, beta_inv, census, gamma, gamma_star, irreducible_blocks, tableau_distance
from .tables import DistanceTable, distance_table, probability_row

__version__ = "0.1.0"

__all__ = [
    "DistanceTable",
    "QSqrt5",
    "RationalSeries",
    "SecondaryStructure",
    "Tableau",
    "bfs_distance",
    "beta",
    "beta_inv",
    "canonical_series",
    "census",
    "delta",
    "distance_table",
    "enumerate_structures",
    "gamma",
    "gamma_density",
    "gamma_star",
    "growth_rate_check",
    "histogram",
    "irr_series",
    "irreducible_blocks",
    "is_r_canonical",
    "min_stack_length",
    "parse_dot_bracket",
    "probability_row",
    "q_series",
    "rho",
    "secondary_series",
    "singular_constants",
    "stack_runs",
    "tableau_distance",
    "tail_ratio_check",
    "to_dot_bracket",
]
