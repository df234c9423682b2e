import pytest

from sparsekron.blackbox import from_sparse
from sparsekron.interpolation import (AutoInterpolator, BaseParams, ModParams,
                                      MultivariateInterpolator)
from sparsekron.poly import parse_sparse
from sparsekron.rings import Integers

from .base_test_interpolator import BaseTestInterpolator


class TestAutoInterpolator(BaseTestInterpolator):

    @staticmethod
    @pytest.fixture
    def interpolator():
        return AutoInterpolator()


@pytest.mark.parametrize("n, T, D, expected", [
    (2, 2, 2, "base"),
    (2, 2, 5, "modulus"),
    (2, 2, 4, "base"),
    (1, 1, 5, "modulus"),
    (3, 10, 1000, "modulus"),
])
def test_choose(n, T, D, expected):
    assert AutoInterpolator.choose(n, T, D) == expected


def test_params_follow_the_choice():
    interp = AutoInterpolator()
    assert isinstance(interp.compute_params(2, 2, 2), BaseParams)
    assert isinstance(interp.compute_params(2, 2, 5), ModParams)


def test_report_names_the_concrete_algorithm():
    f = parse_sparse("x1^4 - x2", 2, Integers())
    report = AutoInterpolator().interpolate(from_sparse(f), 2, 5)
    assert report.algorithm == "modulus"
    assert report.poly == f


def test_alias():
    assert isinstance(MultivariateInterpolator.from_config({"type": "auto"}),
                      AutoInterpolator)
