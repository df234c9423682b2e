from typing import Optional

from sparsekron.blackbox import BlackBox
from sparsekron.models import InterpolationReport
from sparsekron.univar import UnivarBackend

from .base import KroneckerInterpolator, check_arity
from .params import ModParams


class ModulusChangingInterpolator(KroneckerInterpolator):
    """
    Modulus-changing Kronecker interpolation. The base is fixed to D and the
    images under x_i -> x^{D^{i-1} mod p_j} are interpolated for the first N
    primes; each round picks the ok prime p_j0 (j0 <= N3) with the most terms
    modulo x^{p_j0} - 1 and accepts candidates that lose a term at N2 or more
    of the primes p_1..p_{N1 + N2 - 1}.

    Needs fewer images than base-changing when n*T is large against D.
    """

    ALIAS = "modulus"

    def compute_params(self, n: int, T: int, D: int) -> ModParams:
        return ModParams.compute(n, T, D)


def interpolate_mod(bb: BlackBox,
                    n: int,
                    T: int,
                    D: int,
                    backend: Optional[UnivarBackend] = None,
                    *,
                    jobs: int = 1) -> InterpolationReport:
    check_arity(bb, n)
    return ModulusChangingInterpolator(backend, jobs=jobs).interpolate(bb, T, D)
