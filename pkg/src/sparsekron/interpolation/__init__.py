from .ts_terms import CandidateSet, ts_terms
from .params import (BaseParams, ModParams, RoundParams, compute_base_params,
                     compute_mod_params)
from .term_tests import (decrease_count, select_ok_degree, select_ok_index,
                         select_ok_prime, term_test, term_test_base, term_test_mod)
from .base import KroneckerInterpolator, MultivariateInterpolator
from .base_changing import BaseChangingInterpolator, interpolate_base
from .modulus_changing import ModulusChangingInterpolator, interpolate_mod
from .auto import AutoInterpolator
from .planning import resolve_interpolator, smallest_admissible_prime

__all__ = [
    "CandidateSet",
    "ts_terms",
    "BaseParams",
    "ModParams",
    "RoundParams",
    "compute_base_params",
    "compute_mod_params",
    "decrease_count",
    "select_ok_degree",
    "select_ok_index",
    "select_ok_prime",
    "term_test",
    "term_test_base",
    "term_test_mod",
    "KroneckerInterpolator",
    "MultivariateInterpolator",
    "BaseChangingInterpolator",
    "interpolate_base",
    "ModulusChangingInterpolator",
    "interpolate_mod",
    "AutoInterpolator",
    "resolve_interpolator",
    "smallest_admissible_prime",
]
