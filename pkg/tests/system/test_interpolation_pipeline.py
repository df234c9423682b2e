import importlib

import numpy as np
import pytest

from sparsekron.blackbox import from_sparse, parse_expr
from sparsekron.interpolation import (BaseChangingInterpolator,
                                      ModulusChangingInterpolator,
                                      smallest_admissible_prime)
from sparsekron.poly import parse_sparse
from sparsekron.rings import Integers, PrimeField
from sparsekron.univar import BenOrTiwariBackend
from sparsekron.verify import (check_half_survive, expand_expression, random_poly,
                               reduce_coefficients, run_lemma_suite,
                               run_roundtrip_suite)

ZZ = Integers()

EXPRESSIONS = [
    ("(x1 + 2*x2)^3 - 8*x2^3", 2, 4),
    ("(x1 - 1)*(x1 + 1)*(x2 + x3) - x1^2*x3", 3, 4),
    ("(x1*x2 - 3)^2 - x1^2*x2^2 + 5", 2, 5),
    ("x1^7 - (x1 - 1)*(x1^6 + x1^5 + x1^4 + x1^3 + x1^2 + x1 + 1)", 1, 8),
]


@pytest.fixture(params=[BaseChangingInterpolator, ModulusChangingInterpolator],
                ids=["base", "modulus"])
def interpolator(request):
    return request.param(BenOrTiwariBackend())


@pytest.mark.parametrize("text, n, D", EXPRESSIONS)
def test_matches_symbolic_expansion(interpolator, text, n, D):
    expected = expand_expression(text, n, ZZ)
    bb = parse_expr(text, n, ZZ).to_blackbox()
    report = interpolator.interpolate(bb, max(expected.num_terms, 1), D)
    assert report.poly == expected
    assert report.probes == bb.probe_count == report.expected_probes


@pytest.mark.parametrize("text, n, D", EXPRESSIONS[:2])
def test_matches_symbolic_expansion_over_prime_field(interpolator, text, n, D):
    T = expand_expression(text, n, ZZ).num_terms
    ring = PrimeField(smallest_admissible_prime(interpolator, n, T, D))
    expected = expand_expression(text, n, ring)
    report = interpolator.interpolate(parse_expr(text, n, ring).to_blackbox(), T, D)
    assert report.poly == expected


def test_selected_images_keep_half_the_remaining_terms(interpolator):
    rng = np.random.default_rng(11)
    for _ in range(4):
        f = random_poly(rng, 3, 6, 4)
        report = interpolator.interpolate(from_sparse(f), f.num_terms, 4)
        assert report.poly == f
        remaining = f
        for r in report.round_reports:
            assert check_half_survive(remaining, r.d, r.p)
            recovered = parse_sparse(r.recovered, 3, ZZ)
            assert all(t in remaining.split_terms() for t in recovered.split_terms())
            assert recovered.num_terms == r.accepted
            remaining = remaining - recovered
        assert remaining.num_terms == 0


def test_prime_field_coefficients_wrap(interpolator):
    ring = PrimeField(smallest_admissible_prime(interpolator, 2, 2, 3))
    f = reduce_coefficients(random_poly(np.random.default_rng(3), 2, 2, 3), ring)
    report = interpolator.interpolate(from_sparse(f), 2, 3)
    assert report.poly == f
    assert report.ring == str(ring)


def test_lemma_suite_passes():
    result = run_lemma_suite(seed=21, count=200)
    assert result.passed, result.failures
    # seven recorded properties per polynomial plus one nonvanishing check
    assert result.checks == 200 * 8


def test_roundtrip_suite_passes():
    result = run_roundtrip_suite(seed=8, count=4,
                                 combos=[("base", "bot"), ("modulus", "bot")])
    assert result.passed, result.failures
    assert result.checks == 4 * 2 * 2


def test_roundtrip_suite_catches_broken_term_extraction(mocker):
    ts_terms_module = importlib.import_module("sparsekron.interpolation.ts_terms")
    mocker.patch.object(ts_terms_module, "_rebuilds_gamma", return_value=False)
    result = run_roundtrip_suite(seed=5, count=1, combos=[("base", "bot")])
    assert not result.passed
    assert all(f.check == "base/bot" for f in result.failures)
