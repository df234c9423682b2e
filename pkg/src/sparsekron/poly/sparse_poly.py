from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sparsekron.errors import ArityMismatch, RingMismatch
from sparsekron.rings import Ring, RingElement

ExponentVector = Tuple[int, ...]
Term = Tuple[RingElement, ExponentVector]


class SparsePoly:
    """
    Canonical sparse multivariate polynomial over an exact ring.

    The term map never stores zero coefficients. Terms are listed, printed and
    compared in descending lexicographic order of their exponent vectors, so
    `3*x1^2*x2 - x3 + 5` is the canonical form of that polynomial.
    Instances are immutable.
    """

    def __init__(self,
                 ring: Ring,
                 n: int,
                 terms: Optional[Mapping[ExponentVector, RingElement]] = None):
        if n < 1:
            raise ValueError(f"arity must be positive, got {n}")
        self._ring = ring
        self._n = n
        cleaned: Dict[ExponentVector, RingElement] = {}
        for exps, coeff in (terms or {}).items():
            exps = self._check_exponents(exps)
            coeff = ring.normalize(coeff)
            if not ring.is_zero(coeff):
                cleaned[exps] = coeff
        self._terms = dict(sorted(cleaned.items(), reverse=True))

    def _check_exponents(self, exps: Sequence[int]) -> ExponentVector:
        exps = tuple(int(e) for e in exps)
        if len(exps) != self._n:
            raise ArityMismatch(
                f"exponent vector {exps} has length {len(exps)}, expected {self._n}"
            )
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        return exps

    @classmethod
    def from_terms(cls, ring: Ring, n: int, terms: Iterable[Term]) -> "SparsePoly":
        """Build from (coefficient, exponents) pairs, summing repeated monomials."""
        merged: Dict[ExponentVector, RingElement] = {}
        for coeff, exps in terms:
            key = tuple(int(e) for e in exps)
            merged[key] = ring.add(merged.get(key, ring.zero()), coeff)
        return cls(ring, n, merged)

    @classmethod
    def zero(cls, ring: Ring, n: int) -> "SparsePoly":
        return cls(ring, n)

    @classmethod
    def monomial(cls,
                 ring: Ring,
                 exps: Sequence[int],
                 coeff: RingElement = 1) -> "SparsePoly":
        exps = tuple(exps)
        return cls(ring, len(exps), {exps: coeff})

    @property
    def ring(self) -> Ring:
        return self._ring

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Dict[ExponentVector, RingElement]:
        return dict(self._terms)

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    @property
    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        return max((sum(exps) for exps in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> List[Tuple[ExponentVector, RingElement]]:
        return list(self._terms.items())

    def coefficient(self, exps: Sequence[int]) -> RingElement:
        return self._terms.get(tuple(exps), self._ring.zero())

    def split_terms(self) -> List["SparsePoly"]:
        """The single-term polynomials whose sum is self, in canonical order."""
        return [SparsePoly(self._ring, self._n, {exps: coeff})
                for exps, coeff in self._terms.items()]

    def _check_compatible(self, other: "SparsePoly"):
        if not isinstance(other, SparsePoly):
            raise TypeError(f"expected SparsePoly, got {type(other).__name__}")
        if other.ring != self._ring:
            raise RingMismatch(f"cannot combine polynomials over {self._ring} "
                               f"and {other.ring}")
        if other.n != self._n:
            raise ArityMismatch(f"cannot combine polynomials in {self._n} and "
                                f"{other.n} variables")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_compatible(other)
        result = dict(self._terms)
        ring = self._ring
        for exps, coeff in other._terms.items():
            result[exps] = ring.add(result.get(exps, ring.zero()), coeff)
        return SparsePoly(ring, self._n, result)

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self._ring, self._n,
                          {e: self._ring.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_compatible(other)
        return self + (-other)

    def scale(self, c: RingElement) -> "SparsePoly":
        return SparsePoly(self._ring, self._n,
                          {e: self._ring.mul(c, v) for e, v in self._terms.items()})

    def evaluate(self, point: Sequence[RingElement]) -> RingElement:
        """Exact value at `point`; powers use square-and-multiply."""
        if len(point) != self._n:
            raise ArityMismatch(
                f"point has {len(point)} coordinates, polynomial has {self._n} "
                f"variables"
            )
        ring = self._ring
        point = [ring.normalize(a) for a in point]
        total = ring.zero()
        for exps, coeff in self._terms.items():
            value = coeff
            for a, e in zip(point, exps):
                if e:
                    value = ring.mul(value, ring.pow(a, e))
            total = ring.add(total, value)
        return total

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparsePoly)
                and self._ring == other._ring
                and self._n == other._n
                and self._terms == other._terms)

    def __hash__(self) -> int:
        return hash((self._ring, self._n, tuple(self._terms.items())))

    def __len__(self) -> int:
        return len(self._terms)

    def __str__(self) -> str:
        from .text_format import format_sparse
        return format_sparse(self)

    def __repr__(self) -> str:
        return f"SparsePoly({self._ring}, n={self._n}, '{self}')"
