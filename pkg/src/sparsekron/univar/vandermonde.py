from typing import List, Sequence

from sparsekron.errors import SingularSystem
from sparsekron.rings import Ring, RingElement


def master_polynomial(roots: Sequence[RingElement], ring: Ring) -> List[RingElement]:
    """Ascending coefficients of prod_j (z - roots[j])."""
    coeffs: List[RingElement] = [ring.one()]
    for r in roots:
        nxt = [ring.zero()] + coeffs
        for i, c in enumerate(coeffs):
            nxt[i] = ring.sub(nxt[i], ring.mul(c, r))
        coeffs = nxt
    return coeffs


def _deflate(master: Sequence[RingElement],
             root: RingElement,
             ring: Ring) -> List[RingElement]:
    """Ascending coefficients of master(z) / (z - root), by synthetic division."""
    degree = len(master) - 1
    quotient: List[RingElement] = [ring.zero()] * degree
    carry = ring.zero()
    for i in range(degree, 0, -1):
        carry = ring.add(master[i], ring.mul(carry, root))
        quotient[i - 1] = carry
    return quotient


def solve_transposed_vandermonde(roots: Sequence[RingElement],
                                 values: Sequence[RingElement],
                                 ring: Ring) -> List[RingElement]:
    """
    Solve sum_j c_j * roots[j]^i = values[i] for i < len(roots), over the field
    `ring`.

    With M(z) = prod_j (z - roots[j]) and q_j(z) = M(z) / (z - roots[j]), the
    dot product of q_j's coefficients with the values isolates c_j * q_j(roots[j]).

    Raises:
        SingularSystem: if two roots coincide.
    """
    roots = [ring.normalize(r) for r in roots]
    if len(set(roots)) != len(roots):
        raise SingularSystem(f"repeated root in {roots}")
    if len(values) < len(roots):
        raise ValueError(f"{len(roots)} roots need at least as many values, "
                         f"got {len(values)}")
    if not roots:
        return []

    master = master_polynomial(roots, ring)
    solution = []
    for r in roots:
        q = _deflate(master, r, ring)
        numerator = ring.zero()
        for q_i, v in zip(q, values):
            numerator = ring.add(numerator, ring.mul(q_i, ring.normalize(v)))
        denominator = ring.zero()
        for q_i in reversed(q):
            denominator = ring.add(ring.mul(denominator, r), q_i)
        solution.append(ring.div(numerator, denominator))
    return solution
