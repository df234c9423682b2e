import logging

from .base import KroneckerInterpolator
from .params import BaseParams, ModParams, RoundParams

logger = logging.getLogger(__name__)


class AutoInterpolator(KroneckerInterpolator):
    """
    Picks the algorithm per run: modulus-changing when n*T < D, where its
    O(nT log D) images undercut the O(nT) images of degree O(D*nT) of
    base-changing, and base-changing otherwise.
    """

    ALIAS = "auto"

    @staticmethod
    def choose(n: int, T: int, D: int) -> str:
        return "modulus" if n * T < D else "base"

    def compute_params(self, n: int, T: int, D: int) -> RoundParams:
        if self.choose(n, T, D) == "modulus":
            return ModParams.compute(n, T, D)
        return BaseParams.compute(n, T, D)

    def algorithm_name(self, n: int, T: int, D: int) -> str:
        choice = self.choose(n, T, D)
        logger.debug(f"auto selects {choice} for n={n} T={T} D={D}")
        return choice
