import pytest

from sparsekron.interpolation import (BaseChangingInterpolator, resolve_interpolator,
                                      smallest_admissible_prime)
from sparsekron.univar import LagrangeBackend


@pytest.mark.parametrize("algorithm, backend, expected", [
    ("base", "bot", 19),
    ("base", "lagrange", 17),
    ("modulus", "bot", 43),
    ("modulus", "lagrange", 41),
    ("auto", "bot", 19),
])
def test_smallest_admissible_prime(algorithm, backend, expected):
    assert smallest_admissible_prime(algorithm, 2, 2, 2, backend) == expected


def test_smallest_admissible_prime_for_instance():
    interp = BaseChangingInterpolator(LagrangeBackend())
    assert smallest_admissible_prime(interp, 2, 2, 2) == 17


def test_resolve_interpolator():
    interp = BaseChangingInterpolator()
    assert resolve_interpolator(interp) is interp
    resolved = resolve_interpolator("modulus", "lagrange")
    assert resolved.name == "modulus"
    assert resolved.backend.name == "lagrange"


def test_resolve_unknown():
    with pytest.raises(ValueError):
        resolve_interpolator("fastest")
