from typing import List, Sequence, Tuple

from sparsekron.poly import UniPoly
from sparsekron.rings import Ring, RingElement


def connection_polynomial(seq: Sequence[RingElement],
                          field: Ring) -> Tuple[List[RingElement], int]:
    """
    Berlekamp-Massey over a field. Returns the ascending coefficients of the
    shortest connection polynomial C (C[0] = 1) and its linear complexity L, so
    that sum_{j=0..L} C[j] * seq[i-j] = 0 for L <= i < len(seq).
    """
    seq = [field.normalize(a) for a in seq]
    current: List[RingElement] = [field.one()]
    previous: List[RingElement] = [field.one()]
    length = 0
    shift = 1
    last_discrepancy = field.one()

    for i, a in enumerate(seq):
        discrepancy = a
        for j in range(1, length + 1):
            if j < len(current):
                discrepancy = field.add(discrepancy,
                                        field.mul(current[j], seq[i - j]))
        if field.is_zero(discrepancy):
            shift += 1
            continue

        factor = field.div(discrepancy, last_discrepancy)
        updated = current + [field.zero()] * max(0, len(previous) + shift
                                                  - len(current))
        for j, b in enumerate(previous):
            updated[j + shift] = field.sub(updated[j + shift], field.mul(factor, b))

        if 2 * length <= i:
            previous = current
            length = i + 1 - length
            last_discrepancy = discrepancy
            shift = 1
        else:
            shift += 1
        current = updated

    current = current + [field.zero()] * max(0, length + 1 - len(current))
    return current[:length + 1], length


def berlekamp_massey(seq: Sequence[RingElement], ring: Ring) -> UniPoly:
    """
    Minimal generator of a linearly recurrent sequence, returned as the monic
    lambda(z) = z^L * C(1/z) over `ring.fraction_field()`. The integers run over
    exact rationals; an all-zero sequence gives lambda = 1.
    """
    field = ring.fraction_field()
    connection, length = connection_polynomial(seq, field)
    return UniPoly(field, {length - j: c for j, c in enumerate(connection)})
