import logging
from functools import cached_property
from typing import Dict, Optional

from sparsekron.errors import NotPrime, RingTooSmall
from sparsekron.primes import factorize, is_prime

from .base import Ring, RingDescriptor, RingElement, RingKind

logger = logging.getLogger(__name__)


class PrimeField(Ring):
    """
    The prime field F_q. Elements are canonical residues in [0, q-1].

    Args:
        modulus: the prime q; primality is verified deterministically.
    """

    ALIAS = "fq"

    def __init__(self, modulus: int):
        modulus = int(modulus)
        if modulus < 2 or not is_prime(modulus):
            raise NotPrime(modulus)
        self._q = modulus

    @property
    def modulus(self) -> int:
        return self._q

    @property
    def descriptor(self) -> RingDescriptor:
        return RingDescriptor(kind=RingKind.PRIME_FIELD, modulus=self._q)

    @property
    def size(self) -> Optional[int]:
        return self._q

    @property
    def is_field(self) -> bool:
        return True

    def normalize(self, a: RingElement) -> RingElement:
        return int(a) % self._q

    def fraction_field(self) -> Ring:
        return self

    def from_fraction_field(self, a: RingElement) -> RingElement:
        return self.normalize(a)

    def pow(self, a: RingElement, e: int) -> RingElement:
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        return pow(int(a), e, self._q)

    def div(self, a: RingElement, b: RingElement) -> RingElement:
        b = self.normalize(b)
        if b == 0:
            raise ZeroDivisionError(f"division by zero in {self}")
        return (int(a) * pow(b, -1, self._q)) % self._q

    @cached_property
    def _group_order_factors(self) -> Dict[int, int]:
        return factorize(self._q - 1)

    def multiplicative_order(self, g: RingElement) -> int:
        """Exact order of a nonzero element, from the factorization of q - 1."""
        g = self.normalize(g)
        if g == 0:
            raise ValueError("0 has no multiplicative order")
        order = self._q - 1
        for r in self._group_order_factors:
            while order % r == 0 and pow(g, order // r, self._q) == 1:
                order //= r
        return order

    def find_element_of_order_geq(self, bound: int) -> RingElement:
        """
        Smallest g >= 2 whose multiplicative order is at least `bound`.

        Raises:
            RingTooSmall: if q - 1 < bound, so no such element exists.
        """
        if self._q - 1 < bound:
            raise RingTooSmall(
                f"{self} has no element of multiplicative order >= {bound} "
                f"(q - 1 = {self._q - 1})"
            )
        if self._q == 2:
            # F_2 has no element >= 2; 1 generates the whole group
            return 1
        for g in range(2, self._q):
            if self.multiplicative_order(g) >= bound:
                logger.debug(f"Evaluation base {g} chosen in {self} for bound {bound}")
                return g
        # a primitive root always exists
        raise AssertionError(f"no primitive root found in {self}")


def mk_prime_field(q: int) -> PrimeField:
    if q < 2:
        raise ValueError(f"modulus must be at least 2, got {q}")
    return PrimeField(q)


def find_element_of_order_geq(ring: Ring, bound: int) -> RingElement:
    if not isinstance(ring, PrimeField):
        raise TypeError(f"an element of bounded order needs a prime field, got {ring}")
    return ring.find_element_of_order_geq(bound)
