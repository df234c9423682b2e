from abc import ABC, abstractmethod
from typing import List

from pydantic import BaseModel, ConfigDict, Field

from sparsekron.kronecker import SubstitutionSpec, image_degree_bound
from sparsekron.primes import (first_primes, next_prime_geq,
                               smallest_count_with_product_geq)


def _ceil_log2_power(base: int, exponent: int) -> int:
    """ceil(exponent * log2(base)) computed exactly as ceil(log2(base^exponent))."""
    return (base ** exponent - 1).bit_length()


class RoundParams(BaseModel, ABC):
    """
    Per-round thresholds shared by both interpolators. Images are indexed from
    1; the ok selection scans indices 1..selection_range and the term test
    counts decreases over 1..test_range, accepting at `threshold` or more.
    """

    n: int = Field(ge=1)
    T: int = Field(ge=1)
    D: int = Field(ge=1)
    model_config = ConfigDict(frozen=True)

    @property
    @abstractmethod
    def num_images(self) -> int:
        pass

    @property
    @abstractmethod
    def selection_range(self) -> int:
        pass

    @property
    @abstractmethod
    def test_range(self) -> int:
        pass

    @property
    @abstractmethod
    def threshold(self) -> int:
        pass

    @abstractmethod
    def spec(self, index: int) -> SubstitutionSpec:
        pass

    @abstractmethod
    def for_round(self, T: int) -> "RoundParams":
        pass

    @property
    @abstractmethod
    def max_degree_bound(self) -> int:
        pass

    def specs(self) -> List[SubstitutionSpec]:
        return [self.spec(i) for i in range(1, self.num_images + 1)]


class BaseParams(RoundParams):
    """
    Bounds of the base-changing algorithm: images use bases d = 1..N under
    one prime p >= max(n, N, D), fixed from the initial T for the whole run.
    """

    p: int

    @classmethod
    def compute(cls, n: int, T: int, D: int) -> "BaseParams":
        delta1, delta2 = (n - 1) * (T - 1), (n - 1) * T
        N = max(4 * delta1 + 1, delta1 + delta2 + 1)
        p = next_prime_geq(max(n, N, D, 2))
        return cls(n=n, T=T, D=D, p=p)

    def for_round(self, T: int) -> "BaseParams":
        return BaseParams(n=self.n, T=T, D=self.D, p=self.p)

    @property
    def delta1(self) -> int:
        return (self.n - 1) * (self.T - 1)

    @property
    def delta2(self) -> int:
        return (self.n - 1) * self.T

    @property
    def N(self) -> int:
        return max(4 * self.delta1 + 1, self.delta1 + self.delta2 + 1)

    @property
    def num_images(self) -> int:
        return self.N

    @property
    def selection_range(self) -> int:
        return 4 * self.delta1 + 1

    @property
    def test_range(self) -> int:
        return self.delta1 + self.delta2 + 1

    @property
    def threshold(self) -> int:
        return self.delta2 + 1

    def spec(self, index: int) -> SubstitutionSpec:
        return SubstitutionSpec(self.n, index, self.p)

    @property
    def max_degree_bound(self) -> int:
        return image_degree_bound(self.D, self.p, shifted=True)


class ModParams(RoundParams):
    """
    Bounds of the modulus-changing algorithm: images use the fixed base D under
    the primes p_1..p_N. N1, N2, N3 are the fewest leading primes whose product
    reaches D^{n(T-1)}, D^{nT} and D^{4n(T-1)}.
    """

    N1: int
    N2: int
    N3: int
    K: int
    primes: List[int]

    @classmethod
    def compute(cls, n: int, T: int, D: int) -> "ModParams":
        if n < 1 or T < 1 or D < 1:
            raise ValueError(f"bounds must be positive, got n={n}, T={T}, D={D}")
        N1 = smallest_count_with_product_geq(D ** (n * (T - 1)))
        N2 = smallest_count_with_product_geq(D ** (n * T))
        N3 = smallest_count_with_product_geq(D ** (4 * n * (T - 1)))
        K = max(4,
                _ceil_log2_power(D, n * (T - 1)) + _ceil_log2_power(D, n * T),
                4 * _ceil_log2_power(D, n * T))
        params = cls(n=n, T=T, D=D, N1=N1, N2=N2, N3=N3, K=K,
                     primes=first_primes(K))
        assert params.K >= params.N, f"K={K} below N={params.N}"
        return params

    def for_round(self, T: int) -> "ModParams":
        return ModParams.compute(self.n, T, self.D)

    @property
    def N(self) -> int:
        return max(self.N1 + self.N2 - 1, self.N3)

    @property
    def num_images(self) -> int:
        return self.N

    @property
    def selection_range(self) -> int:
        return self.N3

    @property
    def test_range(self) -> int:
        return self.N1 + self.N2 - 1

    @property
    def threshold(self) -> int:
        return self.N2

    def prime(self, index: int) -> int:
        return self.primes[index - 1]

    def spec(self, index: int) -> SubstitutionSpec:
        return SubstitutionSpec(self.n, self.D, self.prime(index))

    @property
    def max_degree_bound(self) -> int:
        # shifted images are only taken at the selectable primes p_1..p_N3
        return max(image_degree_bound(self.D, self.prime(self.N)),
                   image_degree_bound(self.D, self.prime(self.N3), shifted=True))


def compute_base_params(n: int, T: int, D: int) -> BaseParams:
    return BaseParams.compute(n, T, D)


def compute_mod_params(n: int, T: int, D: int) -> ModParams:
    return ModParams.compute(n, T, D)
