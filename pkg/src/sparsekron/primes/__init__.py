from typing import List

from .prime_stream import PrimeStream, is_prime, factorize

_DEFAULT_STREAM = PrimeStream()


def first_primes(k: int) -> List[int]:
    return _DEFAULT_STREAM.first_primes(k)


def next_prime_geq(b: int) -> int:
    return _DEFAULT_STREAM.next_prime_geq(b)


def smallest_count_with_product_geq(bound: int) -> int:
    return _DEFAULT_STREAM.smallest_count_with_product_geq(bound)


__all__ = [
    "PrimeStream",
    "is_prime",
    "factorize",
    "first_primes",
    "next_prime_geq",
    "smallest_count_with_product_geq",
]
