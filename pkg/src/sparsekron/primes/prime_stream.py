import logging
import threading
from math import isqrt
from typing import Dict, List

logger = logging.getLogger(__name__)

_INITIAL_SIEVE_LIMIT = 128


def is_prime(q: int) -> bool:
    """Deterministic primality by trial division up to isqrt(q)."""
    if q < 2:
        return False
    if q < 4:
        return True
    if q % 2 == 0 or q % 3 == 0:
        return False
    i = 5
    limit = isqrt(q)
    while i <= limit:
        if q % i == 0 or q % (i + 2) == 0:
            return False
        i += 6
    return True


def factorize(m: int) -> Dict[int, int]:
    """Prime factorization of m >= 1 by trial division, as {prime: exponent}."""
    if m < 1:
        raise ValueError(f"can only factor positive integers, got {m}")
    factors: Dict[int, int] = {}
    for r in (2, 3):
        while m % r == 0:
            factors[r] = factors.get(r, 0) + 1
            m //= r
    i = 5
    while i * i <= m:
        for r in (i, i + 2):
            while m % r == 0:
                factors[r] = factors.get(r, 0) + 1
                m //= r
        i += 6
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


class PrimeStream:
    """
    Ascending cache of primes, grown on demand with a sieve of Eratosthenes over
    a doubling range. `cache[i]` is always the (i+1)-th prime.

    Growth is serialized with a lock, so one stream can be shared by threads;
    every list handed out is a fresh copy.
    """

    def __init__(self):
        self._cache: List[int] = []
        self._limit = 1
        self._lock = threading.Lock()

    def _extend_to(self, limit: int):
        # caller holds the lock
        if limit <= self._limit:
            return
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, isqrt(limit) + 1):
            if sieve[i]:
                sieve[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
        start = self._limit + 1
        self._cache.extend(i for i in range(start, limit + 1) if sieve[i])
        logger.debug(f"Prime cache extended to {limit}, {len(self._cache)} primes")
        self._limit = limit

    def first_primes(self, k: int) -> List[int]:
        if k < 1:
            raise ValueError(f"k must be positive, got {k}")
        with self._lock:
            limit = max(self._limit, _INITIAL_SIEVE_LIMIT)
            while len(self._cache) < k:
                self._extend_to(limit)
                limit *= 2
            return self._cache[:k]

    def prime(self, i: int) -> int:
        """The i-th prime, 1-based."""
        return self.first_primes(i)[-1]

    def next_prime_geq(self, b: int) -> int:
        if b < 2:
            raise ValueError(f"bound must be at least 2, got {b}")
        q = b
        while not is_prime(q):
            q += 1
        return q

    def smallest_count_with_product_geq(self, bound: int) -> int:
        """
        Smallest N >= 1 such that the product of the first N primes is at least
        `bound`. The comparison is done on exact integers.
        """
        if bound < 1:
            raise ValueError(f"bound must be at least 1, got {bound}")
        product = 1
        count = 0
        k = 16
        while True:
            primes = self.first_primes(k)
            for q in primes[count:]:
                product *= q
                count += 1
                if product >= bound:
                    return count
            k *= 2
