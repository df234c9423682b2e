import logging
from typing import Dict, List, Optional, Set

from sympy.polys.domains import ZZ as IntegerDomain
from sympy.polys.galoistools import gf_factor

from sparsekron.errors import BackendFailure, SingularSystem
from sparsekron.poly import UniPoly
from sparsekron.rings import PrimeField, Ring, RingElement

from .base import UnivarBackend, UnivariateOracle
from .berlekamp_massey import berlekamp_massey
from .vandermonde import solve_transposed_vandermonde

logger = logging.getLogger(__name__)


class BenOrTiwariBackend(UnivarBackend):
    """
    Sparse interpolation from 2T probes at g^0, ..., g^{2T-1}, with g = 2 over
    the integers and, over F_q, the smallest element whose order exceeds the
    degree bound. Exponents are read back without discrete logarithms: over the
    integers from the bits of sum_i 2^{e_i}, over F_q by sweeping g^0, g^1, ...
    up to the degree bound.

    Args:
        base: fixed evaluation base over the integers (must be >= 2). Over F_q
            the base is always derived from the degree bound.
    """

    ALIAS = "bot"

    def __init__(self, base: int = 2):
        if base < 2:
            raise ValueError(f"evaluation base must be at least 2, got {base}")
        self.base = base

    def interpolate(self,
                    oracle: UnivariateOracle,
                    degree_bound: int,
                    term_bound: int) -> UniPoly:
        return bot_interpolate(oracle, term_bound, degree_bound, oracle.ring,
                               base=self.base)

    def min_field_size(self, degree_bound: int) -> int:
        # an element of order > degree_bound needs q - 1 > degree_bound
        return degree_bound + 2

    def probe_cost(self, degree_bound: int, term_bound: int) -> int:
        return 2 * term_bound

    def __repr__(self) -> str:
        return f"BenOrTiwariBackend(base={self.base})"


def evaluation_base(ring: Ring, degree_bound: int, base: int = 2) -> RingElement:
    """The g whose powers g^0..g^degree_bound are pairwise distinct in `ring`."""
    if isinstance(ring, PrimeField):
        return ring.find_element_of_order_geq(degree_bound + 1)
    if ring.size is not None:
        raise TypeError(f"no evaluation base rule for {ring}")
    return ring.normalize(base)


def bot_interpolate(oracle: UnivariateOracle,
                    term_bound: int,
                    degree_bound: int,
                    ring: Ring,
                    *,
                    base: int = 2) -> UniPoly:
    """
    Ben-Or/Tiwari interpolation of a polynomial with at most `term_bound`
    terms and degree at most `degree_bound`. Spends exactly 2 * term_bound
    probes.

    Raises:
        RingTooSmall: over F_q, if q - 1 <= degree_bound.
        BackendFailure: if the probes are inconsistent with the bounds, which
            happens when the polynomial has more than `term_bound` terms.
    """
    if term_bound < 0 or degree_bound < 0:
        raise ValueError(f"bounds must be nonnegative, got T={term_bound}, "
                         f"degree bound {degree_bound}")
    BenOrTiwariBackend(base).check_ring(ring, degree_bound)
    g = evaluation_base(ring, degree_bound, base)

    values: List[RingElement] = []
    point = ring.one()
    for _ in range(2 * term_bound):
        values.append(oracle.evaluate(point))
        point = ring.mul(point, g)

    field = ring.fraction_field()
    generator = berlekamp_massey(values, ring)
    r = generator.degree
    if r == 0:
        return UniPoly.zero(ring)
    if r > term_bound:
        raise BackendFailure(f"recurrence of order {r} exceeds term bound "
                             f"{term_bound}")

    if isinstance(ring, PrimeField):
        exponents = _exponents_by_sweep(generator, ring, g, degree_bound)
    else:
        exponents = _exponents_from_bits(generator, g, degree_bound)
    if exponents is None or len(exponents) != r:
        raise BackendFailure(
            f"minimal generator of degree {r} does not split into distinct "
            f"powers of {g} up to degree {degree_bound}"
        )

    roots = [field.pow(field.normalize(g), e) for e in exponents]
    try:
        coeffs = solve_transposed_vandermonde(roots, values, field)
    except SingularSystem as e:
        raise BackendFailure(str(e)) from e

    terms: Dict[int, RingElement] = {}
    for e, c in zip(exponents, coeffs):
        try:
            c = ring.from_fraction_field(c)
        except ValueError as err:
            raise BackendFailure(f"non-integral coefficient {c} at degree {e}") \
                from err
        if ring.is_zero(c):
            raise BackendFailure(f"vanishing coefficient at degree {e}")
        terms[e] = c
    result = UniPoly(ring, terms)

    # Probes beyond the first r must be reproduced too
    for i, v in enumerate(values):
        if result.evaluate(ring.pow(g, i)) != v:
            raise BackendFailure(f"recovered polynomial disagrees with probe {i}")

    logger.debug(f"Ben-Or/Tiwari recovered {r} terms from {len(values)} probes")
    return result


def _exponents_from_bits(generator: UniPoly,
                         g: int,
                         degree_bound: int) -> Optional[List[int]]:
    """
    Roots g^{e_i} read from the subleading coefficient, which is
    -sum_i g^{e_i}. For g = 2 the exponents are exactly its set bits; for other
    bases the digits in base g must all be 0 or 1.
    """
    r = generator.degree
    total = -generator.coefficient(r - 1)
    if total.denominator != 1 or total <= 0:
        return None
    total = total.numerator

    exponents = []
    e = 0
    while total:
        total, digit = divmod(total, g)
        if digit > 1:
            return None
        if digit:
            exponents.append(e)
        e += 1
    if len(exponents) != r or exponents[-1] > degree_bound:
        return None
    field = generator.ring
    for e in exponents:
        if not field.is_zero(generator.evaluate(field.normalize(g ** e))):
            return None
    return exponents


def _exponents_by_sweep(generator: UniPoly,
                        ring: PrimeField,
                        g: RingElement,
                        degree_bound: int) -> List[int]:
    """
    Exponents e in [0, degree_bound] with lambda(g^e) = 0. The simple roots of
    lambda are collected once from its factorization over F_q, then the
    powers g^0, g^1, ... are looked up among them until all are placed.
    """
    roots = simple_roots(generator, ring)
    if len(roots) != generator.degree:
        return []
    exponents = []
    point = ring.one()
    for e in range(degree_bound + 1):
        if point in roots:
            exponents.append(e)
            if len(exponents) == len(roots):
                break
        point = ring.mul(point, g)
    return exponents


def simple_roots(generator: UniPoly, ring: PrimeField) -> Set[int]:
    """Roots in F_q of multiplicity one of a nonzero univariate polynomial."""
    q = ring.modulus
    coeffs = IntegerDomain.map([int(c) % q for c in reversed(generator.to_dense())])
    _, factors = gf_factor(coeffs, q, IntegerDomain)
    # monic linear factors [1, a] stand for the root -a
    return {int(-f[1]) % q for f, k in factors if len(f) == 2 and k == 1}
