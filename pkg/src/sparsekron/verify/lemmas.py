"""
Brute-force checks of the counting facts the two interpolators rest on. Each
`check_*` returns True when the property holds on the given instance and
False on a counterexample; preconditions that do not hold raise ValueError.
"""
from itertools import combinations
from typing import List, Sequence

from sparsekron.interpolation import ModParams
from sparsekron.poly import ExponentVector, SparsePoly

from .collisions import colliding_prime_counts, collision_report


def _ceil_half(s: int) -> int:
    return -(-s // 2)


def _eval_mod(coeffs: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def nonvanishing_points(polys: Sequence[Sequence[int]], p: int, delta: int) -> int:
    """Number of k in [1, delta] where no polynomial of `polys` vanishes mod p.
    Polynomials are coefficient lists, lowest degree first."""
    return sum(all(_eval_mod(L, k, p) != 0 for L in polys)
               for k in range(1, delta + 1))


def check_nonvanishing_bound(polys: Sequence[Sequence[int]],
                             p: int,
                             delta: int) -> bool:
    """
    l nonzero polynomials of degree <= n - 1 over F_p leave at least
    delta - (n - 1) * l points of [1, delta] where none of them vanishes.
    """
    n = max((len(L) for L in polys), default=1)
    bound = (n - 1) * len(polys)
    if any(all(c % p == 0 for c in L) for L in polys):
        raise ValueError("polynomials must be nonzero mod p")
    if p < max(n, bound) or not bound <= delta <= p:
        raise ValueError(f"need p >= max(n, (n-1)l) and (n-1)l <= delta <= p, got "
                         f"p={p}, n={n}, l={len(polys)}, delta={delta}")
    return nonvanishing_points(polys, p, delta) >= delta - bound


def good_bases(f: SparsePoly, exps: ExponentVector, p: int, delta: int) -> List[int]:
    """The bases d in [1, delta] at which the term of f at `exps` does not collide."""
    good = []
    for d in range(1, delta + 1):
        report = collision_report(f, d, p)
        if not report.colliding[report.exponents.index(tuple(exps))]:
            good.append(d)
    return good


def check_good_bases(f: SparsePoly, T: int, D: int, p: int, delta: int) -> bool:
    """Every term of f avoids collisions for at least delta - (n-1)(T-1) bases
    in [1, delta]."""
    delta1 = (f.n - 1) * (T - 1)
    if p < max(f.n, delta1, D) or not delta1 <= delta <= p:
        raise ValueError(f"need p >= max(n, delta1, D) and delta1 <= delta <= p, "
                         f"got p={p}, delta1={delta1}, D={D}, delta={delta}")
    return all(len(good_bases(f, exps, p, delta)) >= delta - delta1
               for exps, _ in f.items())


def difference_polynomial(u: ExponentVector, v: ExponentVector, p: int) -> List[int]:
    """Coefficients of sum_k (u_k - v_k) x^{k-1} reduced mod p."""
    return [(a - b) % p for a, b in zip(u, v)]


def pairs_vanishing_at(f: SparsePoly, d0: int, p: int) -> int:
    """Number of term pairs u < v whose difference polynomial has root d0 mod p."""
    exponents = [exps for exps, _ in f.items()]
    return sum(_eval_mod(difference_polynomial(u, v, p), d0, p) == 0
               for u, v in combinations(exponents, 2))


def check_pair_roots(f: SparsePoly, d0: int, p: int) -> bool:
    """With s colliding terms at (d0, p), at least ceil(s/2) difference
    polynomials vanish at d0."""
    s = collision_report(f, d0, p).s
    return pairs_vanishing_at(f, d0, p) >= _ceil_half(s)


def check_colliding_primes(f: SparsePoly, T: int, D: int) -> bool:
    """Under base D, every term of f collides at no more than N1 - 1 of the
    primes p_1..p_{N1 + N2 - 1}."""
    params = ModParams.compute(f.n, T, D)
    primes = params.primes[:params.test_range]
    return all(c <= params.N1 - 1 for c in colliding_prime_counts(f, D, primes))


def separation_product(f: SparsePoly, D: int) -> int:
    """
    Product over term pairs i < j of sum_k (e_{i,k} - e_{j,k}) D^{k-1}. Nonzero
    whenever D > deg f, since distinct exponent vectors then have distinct
    base-D values.
    """
    exponents = [exps for exps, _ in f.items()]
    product = 1
    for u, v in combinations(exponents, 2):
        product *= sum((a - b) * D ** k for k, (a, b) in enumerate(zip(u, v)))
    return product


def check_separation_divisibility(f: SparsePoly, D: int, p: int) -> bool:
    """p^{ceil(s/2)} divides the separation product, s the colliding terms at
    (D, p)."""
    if f.total_degree >= D:
        raise ValueError(f"need D > deg f, got D={D}, deg f={f.total_degree}")
    s = collision_report(f, D, p).s
    return separation_product(f, D) % (p ** _ceil_half(s)) == 0
