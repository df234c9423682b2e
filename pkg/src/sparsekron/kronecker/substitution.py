import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple

from sparsekron.blackbox import BlackBox
from sparsekron.errors import ArityMismatch
from sparsekron.poly import SparsePoly, UniPoly
from sparsekron.rings import Ring, RingElement

if TYPE_CHECKING:
    from sparsekron.univar import UnivarBackend

logger = logging.getLogger(__name__)


def image_degree_bound(D: int, p: int, *, shifted: bool = False) -> int:
    """
    Degree ceiling of a substitution image under prime p of any f with
    deg f < D. Plain weights stay below p, so D(p - 1) covers them. A shifted
    weight reaches 2p - 1, so the ceiling is at least (D - 1)(2p - 1), which
    exceeds 2D(p - 1) once D > 2p - 1.
    """
    if not shifted:
        return D * (p - 1)
    return max(2 * D * (p - 1), (D - 1) * (2 * p - 1))


@dataclass(frozen=True)
class SubstitutionSpec:
    """
    The substitution x_i -> x^{w_i} with w_i = d^{i-1} mod p, where w_k is
    raised by p when the shifted coordinate `k` (1-based) is set.

    Weights are built by repeated modular multiplication, so they never exceed
    2p whatever the size of d^{n-1}.
    """

    n: int
    d: int
    p: int
    k: Optional[int] = None
    weights: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 1 or self.d < 1 or self.p < 1:
            raise ValueError(f"invalid substitution (n={self.n}, d={self.d}, "
                             f"p={self.p})")
        if self.k is not None and not 1 <= self.k <= self.n:
            raise ValueError(f"shifted coordinate k={self.k} not in [1, {self.n}]")
        weights = []
        w = 1 % self.p
        for i in range(1, self.n + 1):
            weights.append(w + self.p if i == self.k else w)
            w = (w * self.d) % self.p
        object.__setattr__(self, "weights", tuple(weights))

    def shifted(self, k: int) -> "SubstitutionSpec":
        return SubstitutionSpec(self.n, self.d, self.p, k)

    @property
    def base(self) -> "SubstitutionSpec":
        return self if self.k is None else SubstitutionSpec(self.n, self.d, self.p)

    def exponent_of(self, exps: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def degree_bound(self, D: int) -> int:
        """Degree ceiling of the image of any f with deg f < D."""
        return image_degree_bound(D, self.p, shifted=self.k is not None)

    def __str__(self) -> str:
        shift = f", k={self.k}" if self.k is not None else ""
        return f"(d={self.d}, p={self.p}{shift})"


def substitute_sparse(f: SparsePoly, spec: SubstitutionSpec) -> UniPoly:
    """Symbolic image of f: c*x1^e1...xn^en -> c*x^{sum e_i w_i}."""
    if f.n != spec.n:
        raise ArityMismatch(f"substitution is for {spec.n} variables, polynomial "
                            f"has {f.n}")
    ring = f.ring
    image: Dict[int, RingElement] = {}
    for exps, coeff in f.items():
        e = spec.exponent_of(exps)
        image[e] = ring.add(image.get(e, ring.zero()), coeff)
    return UniPoly(ring, image)


def image_point(spec: SubstitutionSpec,
                theta: RingElement,
                ring: Optional[Ring] = None) -> List[RingElement]:
    """
    The point (theta^{w_1}, ..., theta^{w_n}); the univariate image at theta
    equals f at this point.
    """
    if ring is None:
        return [theta ** w for w in spec.weights]
    return [ring.pow(theta, w) for w in spec.weights]


class UniOracle:
    """
    The restriction of a black box along a substitution: theta -> f(image_point).
    Probes are counted by the underlying black box.
    """

    def __init__(self, bb: BlackBox, spec: SubstitutionSpec):
        if bb.n != spec.n:
            raise ArityMismatch(f"black box has {bb.n} variables, substitution "
                                f"{spec.n}")
        self.bb = bb
        self.spec = spec

    @property
    def ring(self):
        return self.bb.ring

    @property
    def probe_count(self) -> int:
        return self.bb.probe_count

    def evaluate(self, theta: RingElement) -> RingElement:
        return self.bb.evaluate(image_point(self.spec, theta, self.bb.ring))

    __call__ = evaluate


def interpolate_image(bb: BlackBox,
                      spec: SubstitutionSpec,
                      degree_bound: int,
                      term_bound: int,
                      backend: "UnivarBackend") -> UniPoly:
    """
    Recover the univariate image of the black box under `spec` with a
    univariate backend. Every probe goes through `image_point`.

    Raises:
        RingTooSmall: if the ring cannot host the backend at this degree bound.
        BackendFailure: if the backend detects more terms than `term_bound`.
    """
    logger.debug(f"Interpolating image {spec} with degree bound {degree_bound}")
    return backend.interpolate(UniOracle(bb, spec), degree_bound, term_bound)


def interpolate_images(bb: BlackBox,
                       specs: Sequence[SubstitutionSpec],
                       degree_bounds: Sequence[int],
                       term_bound: int,
                       backend: "UnivarBackend",
                       *,
                       jobs: int = 1) -> List[UniPoly]:
    """
    Interpolate several images. With `jobs > 1` they run on a thread pool;
    the results keep the order of `specs` and the probe total is unchanged.
    """
    if len(specs) != len(degree_bounds):
        raise ValueError("one degree bound per substitution is required")
    if jobs <= 1 or len(specs) <= 1:
        return [interpolate_image(bb, spec, bound, term_bound, backend)
                for spec, bound in zip(specs, degree_bounds)]
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(
            lambda args: interpolate_image(bb, args[0], args[1], term_bound,
                                           backend),
            zip(specs, degree_bounds)))
