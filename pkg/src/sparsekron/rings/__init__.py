import re

from .base import Ring, RingDescriptor, RingElement, RingKind
from .integers import Integers, Rationals
from .prime_field import PrimeField, mk_prime_field, find_element_of_order_geq

_RING_PATTERN = re.compile(r"^\s*(zz|fq)\s*(?:[:\s]\s*(\d+))?\s*$", re.IGNORECASE)


def ring_from_string(text: str) -> Ring:
    """
    Parse the textual ring form used by the CLI and `.poly` files:
    `zz`, `fq:<q>` or `fq <q>`.
    """
    match = _RING_PATTERN.match(text)
    if match is None:
        raise ValueError(
            f"Unrecognized ring '{text}'. Expected 'zz', 'fq:<q>' or 'fq <q>'"
        )
    kind, modulus = match.group(1).lower(), match.group(2)
    if kind == "zz":
        if modulus is not None:
            raise ValueError(f"Ring 'zz' takes no modulus, got '{text}'")
        return Integers()
    if modulus is None:
        raise ValueError(f"Ring 'fq' needs a modulus, got '{text}'")
    return mk_prime_field(int(modulus))


__all__ = [
    "Ring",
    "RingDescriptor",
    "RingElement",
    "RingKind",
    "Integers",
    "Rationals",
    "PrimeField",
    "mk_prime_field",
    "find_element_of_order_geq",
    "ring_from_string",
]
