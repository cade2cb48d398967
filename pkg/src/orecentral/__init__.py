"""Exact centralizers and annihilating polynomials in Ore extensions K[y][x; sigma, delta]."""

from .annihilator import (
    BivariatePoly,
    annihilating_polynomial,
    annihilating_polynomial_auto,
    evaluate,
)
from .basepoly import NEG_INF, BasePoly, OreAlgebra, apply_delta, apply_sigma
from .centralizer import (
    CentralizerSlice,
    ModuleBasis,
    centralizer_slice,
    check_commutative,
    check_condition_D,
    check_rank_divides,
    greedy_basis,
    leading_coeff_degree_bound,
    leading_space_dim,
    span_membership,
)
from .errors import (
    AlgebraMismatchError,
    BoundExhaustedError,
    BudgetExhaustedError,
    ConfigError,
    DegenerateInputError,
    DomainError,
    NonCommutingError,
    OreError,
    ParseError,
)
from .ore import OrePoly, chi, commutator, leading_coeff, ore_mul, validate_pseudo_degree, x_times
from .parsing import load_algebra, parse_base, parse_operator

__version__ = "0.1.0"
