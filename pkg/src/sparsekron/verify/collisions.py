from collections import defaultdict
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from sparsekron.kronecker import SubstitutionSpec, substitute_sparse
from sparsekron.poly import ExponentVector, SparsePoly


class CollisionReport(BaseModel):
    """
    Brute-force collision status of every term of f under the cyclic image
    f mod (x^p - 1) of the substitution with base d and prime p.

    `colliding[i]` refers to `exponents[i]`, the terms of f in canonical order.
    Terms whose coefficients cancel out in the image are still collisions.
    """

    d: int
    p: int
    exponents: List[Tuple[int, ...]]
    residues: List[int]
    colliding: List[bool]
    model_config = ConfigDict(frozen=True)

    @property
    def t(self) -> int:
        return len(self.exponents)

    @property
    def s(self) -> int:
        """Number of colliding terms."""
        return sum(self.colliding)

    @property
    def non_colliding(self) -> int:
        return self.t - self.s

    def non_colliding_exponents(self) -> List[Tuple[int, ...]]:
        return [e for e, c in zip(self.exponents, self.colliding) if not c]

    def blocks(self) -> List[List[Tuple[int, ...]]]:
        """Collision blocks: groups of two or more terms sharing a residue."""
        groups: Dict[int, List[Tuple[int, ...]]] = defaultdict(list)
        for e, r in zip(self.exponents, self.residues):
            groups[r].append(e)
        return [g for _, g in sorted(groups.items()) if len(g) >= 2]

    def block_sizes(self) -> Dict[int, int]:
        """Map i -> number of collision blocks with exactly i terms."""
        sizes: Dict[int, int] = defaultdict(int)
        for block in self.blocks():
            sizes[len(block)] += 1
        return dict(sizes)


def collision_report(f: SparsePoly, d: int, p: int) -> CollisionReport:
    """Flag each term that shares its cyclic residue with another term."""
    spec = SubstitutionSpec(f.n, d, p)
    exponents = [exps for exps, _ in f.items()]
    residues = [spec.exponent_of(e) % p for e in exponents]
    colliding = [
        any(residues[j] == residues[i] for j in range(len(residues)) if j != i)
        for i in range(len(residues))
    ]
    return CollisionReport(d=d, p=p, exponents=exponents, residues=residues,
                           colliding=colliding)


def survives_in_image(f: SparsePoly, exps: ExponentVector, d: int, p: int) -> bool:
    """Whether the term of f at `exps` shows up with its own coefficient in the
    cyclic image of f."""
    spec = SubstitutionSpec(f.n, d, p)
    fmod = substitute_sparse(f, spec).mod_cyclic(p)
    r = spec.exponent_of(exps) % p
    return fmod.coefficient(r) == f.coefficient(exps)


def cyclic_term_count(f: SparsePoly, d: int, p: int) -> int:
    return substitute_sparse(f, SubstitutionSpec(f.n, d, p)).mod_cyclic(p).num_terms


def check_half_survive(f: SparsePoly, d: int, p: int) -> bool:
    """At least ceil(t/2) terms of f avoid collisions at (d, p)."""
    report = collision_report(f, d, p)
    return report.non_colliding >= -(-report.t // 2)


def check_doubling_lemma(f: SparsePoly, p: int, d1: int, d2: int) -> bool:
    """
    If the cyclic image at d1 has at least as many terms as at d2, then d1
    has at most twice as many colliding terms. Vacuously true otherwise.
    """
    if cyclic_term_count(f, d1, p) < cyclic_term_count(f, d2, p):
        return True
    return collision_report(f, d1, p).s <= 2 * collision_report(f, d2, p).s


def colliding_prime_counts(f: SparsePoly, base: int, primes: List[int]) -> List[int]:
    """For every term of f, the number of `primes` at which it collides."""
    counts = [0] * f.num_terms
    for q in primes:
        for i, flag in enumerate(collision_report(f, base, q).colliding):
            counts[i] += flag
    return counts
