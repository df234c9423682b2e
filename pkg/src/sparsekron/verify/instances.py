from dataclasses import dataclass
from math import comb
from typing import Iterator, List, Optional, Sequence, Set

import numpy as np

from sparsekron.poly import ExponentVector, SparsePoly
from sparsekron.rings import Integers, PrimeField, Ring

# coefficient range over the integers: [-COEFF_RANGE, COEFF_RANGE] without 0
COEFF_RANGE = 9


@dataclass(frozen=True)
class Instance:
    """A random polynomial with the bounds it is interpolated under."""

    f: SparsePoly
    T: int
    D: int

    @property
    def n(self) -> int:
        return self.f.n

    def __str__(self) -> str:
        return f"n={self.n} T={self.T} D={self.D} ring={self.f.ring}: {self.f}"


def monomial_count(n: int, D: int) -> int:
    """Number of monomials in n variables of total degree < D."""
    return comb(n + D - 1, n)


def random_exponents(rng: np.random.Generator, n: int, D: int) -> ExponentVector:
    """Uniform over exponent vectors with total degree < D, by rejection."""
    while True:
        exps = rng.integers(0, D, size=n)
        if int(exps.sum()) < D:
            return tuple(int(e) for e in exps)


def random_coefficient(rng: np.random.Generator, ring: Ring) -> int:
    if isinstance(ring, PrimeField):
        return int(rng.integers(1, ring.modulus))
    c = int(rng.integers(1, COEFF_RANGE + 1))
    return c if rng.random() < 0.5 else -c


def random_poly(rng: np.random.Generator,
                n: int,
                t: int,
                D: int,
                ring: Optional[Ring] = None) -> SparsePoly:
    """
    A polynomial with exactly min(t, #monomials) distinct terms of total
    degree < D and uniform nonzero coefficients.
    """
    ring = ring or Integers()
    t = min(t, monomial_count(n, D))
    seen: Set[ExponentVector] = set()
    while len(seen) < t:
        seen.add(random_exponents(rng, n, D))
    terms = [(random_coefficient(rng, ring), exps) for exps in sorted(seen)]
    return SparsePoly.from_terms(ring, n, terms)


def random_instances(seed: int,
                     count: int,
                     *,
                     n_values: Sequence[int] = (1, 2, 3),
                     t_max: int = 4,
                     D_max: int = 4,
                     T_slack: int = 0,
                     ring: Optional[Ring] = None) -> Iterator[Instance]:
    """
    `count` reproducible instances: n drawn from `n_values`, t from [1, t_max]
    and D from [2, D_max]. T is the actual term count plus `T_slack`.
    """
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.choice(n_values))
        t = int(rng.integers(1, t_max + 1))
        D = int(rng.integers(2, D_max + 1))
        f = random_poly(rng, n, t, D, ring)
        yield Instance(f=f, T=max(1, f.num_terms + T_slack), D=D)


def random_univariate_polys(rng: np.random.Generator,
                            count: int,
                            degree: int,
                            p: int) -> List[List[int]]:
    """`count` coefficient lists of length degree + 1, nonzero mod p."""
    polys = []
    while len(polys) < count:
        coeffs = [int(c) for c in rng.integers(0, p, size=degree + 1)]
        if any(coeffs):
            polys.append(coeffs)
    return polys
