from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sparsekron.errors import RingMismatch
from sparsekron.rings import Ring, RingElement


class UniPoly:
    """
    Canonical sparse univariate polynomial: a map degree -> nonzero coefficient,
    listed in descending degree. Immutable.
    """

    def __init__(self,
                 ring: Ring,
                 terms: Optional[Mapping[int, RingElement]] = None):
        self._ring = ring
        cleaned: Dict[int, RingElement] = {}
        for e, coeff in (terms or {}).items():
            e = int(e)
            if e < 0:
                raise ValueError(f"negative degree {e}")
            coeff = ring.normalize(coeff)
            if not ring.is_zero(coeff):
                cleaned[e] = coeff
        self._terms = dict(sorted(cleaned.items(), reverse=True))

    @classmethod
    def zero(cls, ring: Ring) -> "UniPoly":
        return cls(ring)

    @classmethod
    def from_dense(cls, ring: Ring, coeffs: Sequence[RingElement]) -> "UniPoly":
        """From ascending coefficients c_0, c_1, ..."""
        return cls(ring, {i: c for i, c in enumerate(coeffs)})

    @property
    def ring(self) -> Ring:
        return self._ring

    @property
    def terms(self) -> Dict[int, RingElement]:
        return dict(self._terms)

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return next(iter(self._terms), -1)

    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> List[Tuple[int, RingElement]]:
        return list(self._terms.items())

    def coefficient(self, e: int) -> RingElement:
        return self._terms.get(e, self._ring.zero())

    def to_dense(self) -> List[RingElement]:
        dense = [self._ring.zero()] * (self.degree + 1)
        for e, c in self._terms.items():
            dense[e] = c
        return dense

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check_compatible(other)
        result = dict(self._terms)
        ring = self._ring
        for e, c in other._terms.items():
            result[e] = ring.add(result.get(e, ring.zero()), c)
        return UniPoly(ring, result)

    def __neg__(self) -> "UniPoly":
        return UniPoly(self._ring,
                       {e: self._ring.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        self._check_compatible(other)
        return self + (-other)

    def _check_compatible(self, other: "UniPoly"):
        if not isinstance(other, UniPoly):
            raise TypeError(f"expected UniPoly, got {type(other).__name__}")
        if other.ring != self._ring:
            raise RingMismatch(f"cannot combine polynomials over {self._ring} "
                               f"and {other.ring}")

    def mod_cyclic(self, p: int) -> "UniPoly":
        """Reduction modulo x^p - 1: every exponent e becomes e mod p."""
        if p < 1:
            raise ValueError(f"cyclic modulus must be positive, got {p}")
        ring = self._ring
        reduced: Dict[int, RingElement] = {}
        for e, c in self._terms.items():
            r = e % p
            reduced[r] = ring.add(reduced.get(r, ring.zero()), c)
        return UniPoly(ring, reduced)

    def residue_groups(self, p: int) -> Dict[int, List[Tuple[int, RingElement]]]:
        """Terms grouped by exponent residue mod p, each group ascending."""
        groups: Dict[int, List[Tuple[int, RingElement]]] = {}
        for e, c in sorted(self._terms.items()):
            groups.setdefault(e % p, []).append((e, c))
        return groups

    def evaluate(self, theta: RingElement) -> RingElement:
        ring = self._ring
        theta = ring.normalize(theta)
        total = ring.zero()
        for e, c in self._terms.items():
            total = ring.add(total, ring.mul(c, ring.pow(theta, e)))
        return total

    def __eq__(self, other) -> bool:
        return (isinstance(other, UniPoly)
                and self._ring == other._ring
                and self._terms == other._terms)

    def __hash__(self) -> int:
        return hash((self._ring, tuple(self._terms.items())))

    def __len__(self) -> int:
        return len(self._terms)

    def __str__(self) -> str:
        from .text_format import format_uni
        return format_uni(self)

    def __repr__(self) -> str:
        return f"UniPoly({self._ring}, '{self}')"
