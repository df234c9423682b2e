from typing import Union

from sparsekron.primes import next_prime_geq

from .base import MultivariateInterpolator


def resolve_interpolator(
        interpolator: Union[str, MultivariateInterpolator],
        backend: str = "bot") -> MultivariateInterpolator:
    if isinstance(interpolator, MultivariateInterpolator):
        return interpolator
    return MultivariateInterpolator.from_config(
        {"type": interpolator, "backend": {"type": backend}}
    )


def smallest_admissible_prime(interpolator: Union[str, MultivariateInterpolator],
                              n: int,
                              T: int,
                              D: int,
                              backend: str = "bot") -> int:
    """
    Smallest prime q such that F_q hosts every univariate interpolation of a
    run with these bounds.

    Args:
        interpolator: an interpolator, or its alias (`base`, `modulus`, `auto`).
        n: number of variables.
        T: term bound.
        D: strict total degree bound.
        backend: backend alias, used only when `interpolator` is an alias.

    Returns:
        The prime.
    """
    interp = resolve_interpolator(interpolator, backend)
    bound = interp.required_degree_bound(n, T, D)
    return next_prime_geq(max(2, interp.backend.min_field_size(bound)))
