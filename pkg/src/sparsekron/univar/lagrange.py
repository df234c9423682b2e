import logging
from typing import List

from sparsekron.errors import BackendFailure
from sparsekron.poly import UniPoly
from sparsekron.rings import Ring, RingElement

from .base import UnivarBackend, UnivariateOracle

logger = logging.getLogger(__name__)


class LagrangeBackend(UnivarBackend):
    """
    Dense interpolation through the canonical points 0, 1, ..., degree_bound.
    Needs degree_bound + 1 probes whatever the sparsity, and a ring with that
    many distinct points that are pairwise invertible apart: always true over
    the integers, q >= degree_bound + 1 over F_q.
    """

    ALIAS = "lagrange"

    def interpolate(self,
                    oracle: UnivariateOracle,
                    degree_bound: int,
                    term_bound: int) -> UniPoly:
        return lagrange_interpolate(oracle, degree_bound, oracle.ring)

    def min_field_size(self, degree_bound: int) -> int:
        return degree_bound + 1

    def probe_cost(self, degree_bound: int, term_bound: int) -> int:
        return degree_bound + 1


def lagrange_interpolate(oracle: UnivariateOracle,
                         degree_bound: int,
                         ring: Ring) -> UniPoly:
    """
    Recover the polynomial of degree <= `degree_bound` through its values at
    0, 1, ..., degree_bound.

    On unit-spaced nodes the Newton divided difference f[0..k] equals the k-th
    forward difference at 0 divided by k!. All differences are formed in the
    ring itself; the Newton form is scaled by m! = degree_bound! so the
    expansion stays in the ring too, and the single division by m! happens in
    the fraction field at the end.

    Raises:
        RingTooSmall: if the ring has fewer than degree_bound + 1 elements.
        BackendFailure: over the integers, if the values do not come from an
            integer polynomial of degree <= degree_bound.
    """
    if degree_bound < 0:
        raise ValueError(f"degree bound must be nonnegative, got {degree_bound}")
    LagrangeBackend().check_ring(ring, degree_bound)
    m = degree_bound

    values = [oracle.evaluate(ring.normalize(x)) for x in range(m + 1)]

    # Leading entries of the forward difference table: diffs[k] = Delta^k f(0)
    diffs: List[RingElement] = []
    row = values
    for _ in range(m + 1):
        diffs.append(row[0])
        row = [ring.sub(b, a) for a, b in zip(row, row[1:])]

    # scaled[k] = Delta^k f(0) * m! / k!
    scaled: List[RingElement] = [ring.zero()] * (m + 1)
    factor = ring.one()
    for k in range(m, -1, -1):
        scaled[k] = ring.mul(diffs[k], factor)
        factor = ring.mul(factor, ring.normalize(k))

    # Horner on the falling factorial basis x(x-1)...(x-k+1); ascending coeffs
    dense: List[RingElement] = [scaled[m]]
    for k in range(m - 1, -1, -1):
        shifted = [ring.zero()] + dense
        for i, c in enumerate(dense):
            shifted[i] = ring.sub(shifted[i], ring.mul(c, ring.normalize(k)))
        shifted[0] = ring.add(shifted[0], scaled[k])
        dense = shifted

    m_factorial = _factorial(ring, m)
    field = ring.fraction_field()
    coeffs = {}
    for e, c in enumerate(dense):
        if ring.is_zero(c):
            continue
        try:
            coeffs[e] = ring.from_fraction_field(field.div(c, m_factorial))
        except ValueError as err:
            raise BackendFailure(
                f"values at 0..{m} do not fit an integer polynomial of degree "
                f"<= {m}"
            ) from err
    result = UniPoly(ring, coeffs)
    logger.debug(f"Lagrange interpolation at {m + 1} points gave "
                 f"{result.num_terms} terms")
    return result


def _factorial(ring: Ring, m: int) -> RingElement:
    out = ring.one()
    for k in range(2, m + 1):
        out = ring.mul(out, ring.normalize(k))
    return out
