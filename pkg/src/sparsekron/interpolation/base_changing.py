from typing import Optional

from sparsekron.blackbox import BlackBox
from sparsekron.models import InterpolationReport
from sparsekron.univar import UnivarBackend

from .base import KroneckerInterpolator, check_arity
from .params import BaseParams


class BaseChangingInterpolator(KroneckerInterpolator):
    """
    Base-changing Kronecker interpolation. One prime p >= max(n, N, D) is fixed
    and the images under x_i -> x^{d^{i-1} mod p} for d = 1..N are
    interpolated once; each round picks the ok base d0 with the most terms
    modulo x^p - 1, reads candidate terms off the n shifted images at d0 and
    keeps those that pass the term test over d = 1..delta1 + delta2 + 1.

    Every univariate degree bound is at most 2D(p - 1), since p >= D.
    """

    ALIAS = "base"

    def compute_params(self, n: int, T: int, D: int) -> BaseParams:
        return BaseParams.compute(n, T, D)


def interpolate_base(bb: BlackBox,
                     n: int,
                     T: int,
                     D: int,
                     backend: Optional[UnivarBackend] = None,
                     *,
                     jobs: int = 1) -> InterpolationReport:
    check_arity(bb, n)
    return BaseChangingInterpolator(backend, jobs=jobs).interpolate(bb, T, D)
