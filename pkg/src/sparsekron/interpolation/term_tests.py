from typing import List, Sequence

from sparsekron.kronecker import SubstitutionSpec
from sparsekron.poly import Term, UniPoly

from .params import BaseParams, ModParams, RoundParams


def cyclic_residue(exps: Sequence[int], spec: SubstitutionSpec) -> int:
    """Exponent of the monomial's image reduced modulo x^p - 1."""
    return spec.exponent_of(exps) % spec.p


def lowers_term_count(fmod: UniPoly, term: Term, spec: SubstitutionSpec) -> bool:
    """
    Whether #(fmod - u_mod) < #fmod for the single term u. Subtracting c*x^r
    lowers the term count only when it cancels a term c*x^r of fmod.
    """
    coeff, exps = term
    coeff = fmod.ring.normalize(coeff)
    r = cyclic_residue(exps, spec)
    return not fmod.ring.is_zero(coeff) and fmod.coefficient(r) == coeff


def decrease_count(term: Term,
                   fmod: Sequence[UniPoly],
                   params: RoundParams) -> int:
    """Number of indices in 1..test_range whose cyclic image loses a term."""
    return sum(lowers_term_count(fmod[i - 1], term, params.spec(i))
               for i in range(1, params.test_range + 1))


def term_test(term: Term, fmod: Sequence[UniPoly], params: RoundParams) -> bool:
    if len(fmod) < params.test_range:
        raise ValueError(f"term test needs {params.test_range} cyclic images, "
                         f"got {len(fmod)}")
    return decrease_count(term, fmod, params) >= params.threshold


def term_test_base(term: Term, fmod: Sequence[UniPoly], params: BaseParams) -> bool:
    """
    A candidate of degree < D is a term of f - h iff at least delta2 + 1 of the
    bases d = 1..delta1 + delta2 + 1 show a term-count decrease.
    """
    return term_test(term, fmod, params)


def term_test_mod(term: Term, fmod: Sequence[UniPoly], params: ModParams) -> bool:
    """
    A candidate of degree < D is a term of f - h iff at least N2 of the primes
    p_1..p_{N1 + N2 - 1} show a term-count decrease.
    """
    return term_test(term, fmod, params)


def select_ok_index(counts: Sequence[int]) -> int:
    """1-based index of the first maximum."""
    if not counts:
        raise ValueError("no cyclic images to select from")
    best = max(counts)
    return list(counts).index(best) + 1


def select_ok_degree(fmod: Sequence[UniPoly], params: BaseParams) -> int:
    """Smallest d0 in 1..4*delta1 + 1 whose cyclic image has the most terms."""
    return select_ok_index(_term_counts(fmod, params.selection_range))


def select_ok_prime(fmod: Sequence[UniPoly], params: ModParams) -> int:
    """Smallest j0 in 1..N3 whose cyclic image has the most terms."""
    return select_ok_index(_term_counts(fmod, params.selection_range))


def _term_counts(fmod: Sequence[UniPoly], count: int) -> List[int]:
    if len(fmod) < count:
        raise ValueError(f"ok selection needs {count} cyclic images, got {len(fmod)}")
    return [u.num_terms for u in fmod[:count]]
