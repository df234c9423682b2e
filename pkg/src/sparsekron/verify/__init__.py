from .collisions import (CollisionReport, check_doubling_lemma, check_half_survive,
                         colliding_prime_counts, collision_report,
                         cyclic_term_count, survives_in_image)
from .lemmas import (check_colliding_primes, check_good_bases,
                     check_nonvanishing_bound, check_pair_roots,
                     check_separation_divisibility, difference_polynomial,
                     good_bases, nonvanishing_points, pairs_vanishing_at,
                     separation_product)
from .expansion import expand_expression
from .instances import Instance, monomial_count, random_instances, random_poly
from .suites import (PropertyFailure, SuiteResult, reduce_coefficients,
                     roundtrip_failure, run_lemma_suite, run_roundtrip_suite,
                     run_suites, shrink)

__all__ = [
    "CollisionReport",
    "check_doubling_lemma",
    "check_half_survive",
    "colliding_prime_counts",
    "collision_report",
    "cyclic_term_count",
    "survives_in_image",
    "check_colliding_primes",
    "check_good_bases",
    "check_nonvanishing_bound",
    "check_pair_roots",
    "check_separation_divisibility",
    "difference_polynomial",
    "good_bases",
    "nonvanishing_points",
    "pairs_vanishing_at",
    "separation_product",
    "expand_expression",
    "Instance",
    "monomial_count",
    "random_instances",
    "random_poly",
    "PropertyFailure",
    "SuiteResult",
    "reduce_coefficients",
    "roundtrip_failure",
    "run_lemma_suite",
    "run_roundtrip_suite",
    "run_suites",
    "shrink",
]
