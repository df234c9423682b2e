from abc import ABC, abstractmethod
from typing import Protocol

from sparsekron.errors import RingTooSmall
from sparsekron.poly import UniPoly
from sparsekron.rings import Ring, RingElement
from sparsekron.utils.config import ConfigurableMixin


class UnivariateOracle(Protocol):
    """Anything that evaluates a univariate polynomial over `ring`."""

    @property
    def ring(self) -> Ring: ...

    def evaluate(self, theta: RingElement) -> RingElement: ...


class UnivarBackend(ABC, ConfigurableMixin):
    """
    Abstract univariate interpolation backend. A backend recovers a univariate
    polynomial from an oracle, given an upper bound on its degree and on its
    number of terms. The probe sequence of a backend depends only on the ring and
    the bounds, never on the values it reads back.
    """

    @abstractmethod
    def interpolate(self,
                    oracle: UnivariateOracle,
                    degree_bound: int,
                    term_bound: int) -> UniPoly:
        pass

    @abstractmethod
    def min_field_size(self, degree_bound: int) -> int:
        """Smallest finite field size that can host this degree bound."""
        pass

    def check_ring(self, ring: Ring, degree_bound: int) -> None:
        """
        Raises:
            RingTooSmall: if `ring` cannot host an interpolation at this degree
                bound.
        """
        needed = self.min_field_size(degree_bound)
        if ring.size is not None and ring.size < needed:
            raise RingTooSmall(
                f"{self.name} up to degree {degree_bound} needs a field with at "
                f"least {needed} elements, {ring} has {ring.size}"
            )

    @abstractmethod
    def probe_cost(self, degree_bound: int, term_bound: int) -> int:
        """Exact number of oracle probes one `interpolate` call spends."""
        pass

    @property
    def name(self) -> str:
        return self.ALIAS or self.__class__.__name__

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}()"
