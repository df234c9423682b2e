from itertools import product

import pytest

from sparsekron.blackbox import from_sparse
from sparsekron.errors import ArityMismatch
from sparsekron.kronecker import (SubstitutionSpec, UniOracle, image_degree_bound,
                                  image_point, interpolate_image,
                                  interpolate_images, substitute_sparse)
from sparsekron.poly import UniPoly, parse_sparse
from sparsekron.rings import Integers, PrimeField
from sparsekron.univar import BenOrTiwariBackend, LagrangeBackend

ZZ = Integers()


@pytest.mark.parametrize("n, d, p, k, weights", [
    (3, 2, 5, None, (1, 2, 4)),
    (3, 2, 5, 2, (1, 7, 4)),
    (4, 3, 5, None, (1, 3, 4, 2)),
    (2, 7, 5, 1, (6, 2)),
    (1, 4, 3, None, (1,)),
])
def test_weights(n, d, p, k, weights):
    assert SubstitutionSpec(n, d, p, k).weights == weights


def test_weights_stay_small_for_huge_bases():
    spec = SubstitutionSpec(30, 10 ** 40, 101)
    assert all(0 <= w < 101 for w in spec.weights)
    assert spec.weights[5] == pow(10 ** 40, 5, 101)


def test_shifted_and_base():
    spec = SubstitutionSpec(3, 2, 5)
    shifted = spec.shifted(3)
    assert shifted.weights == (1, 2, 9)
    assert shifted.base == spec
    assert str(shifted) == "(d=2, p=5, k=3)"


def test_degree_bound():
    spec = SubstitutionSpec(2, 2, 5)
    assert spec.degree_bound(3) == 12
    assert spec.shifted(1).degree_bound(3) == 24


def test_shifted_degree_bound_when_degree_outgrows_the_prime():
    # x1^4 - x2 under (d=5, p=2, k=1) is x^12 - x, above 2D(p - 1) = 10
    spec = SubstitutionSpec(2, 5, 2, 1)
    image = substitute_sparse(parse_sparse("x1^4 - x2", 2, ZZ), spec)
    assert image.degree == 12
    assert spec.degree_bound(5) == 12
    assert image_degree_bound(5, 2) == 5
    assert image_degree_bound(5, 2, shifted=True) == 12


@pytest.mark.parametrize("n, D", [(1, 7), (2, 5), (3, 4)])
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_degree_bound_covers_every_monomial(n, D, p):
    monomials = [e for e in product(range(D), repeat=n) if sum(e) < D]
    for d in range(1, 2 * p + 1):
        spec = SubstitutionSpec(n, d, p)
        for s in [spec] + [spec.shifted(k) for k in range(1, n + 1)]:
            assert max(s.exponent_of(e) for e in monomials) <= s.degree_bound(D)


@pytest.mark.parametrize("args", [(0, 2, 5), (2, 0, 5), (2, 2, 0), (2, 2, 5, 3),
                                  (2, 2, 5, 0)])
def test_invalid_specs(args):
    with pytest.raises(ValueError):
        SubstitutionSpec(*args)


def test_substitute_sparse_without_collision():
    f = parse_sparse("x1 + x2", 2, ZZ)
    assert substitute_sparse(f, SubstitutionSpec(2, 2, 5)) == UniPoly(ZZ, {1: 1, 2: 1})


def test_substitute_sparse_merges_colliding_terms():
    f = parse_sparse("3*x1^2*x2 - x3 + 5", 3, ZZ)
    image = substitute_sparse(f, SubstitutionSpec(3, 2, 5))
    assert str(image) == "2*x^4 + 5"


def test_substitute_sparse_can_cancel():
    f = parse_sparse("x1^2 - x2", 2, ZZ)
    assert substitute_sparse(f, SubstitutionSpec(2, 2, 5)).is_zero()


def test_substitute_sparse_arity():
    f = parse_sparse("x1", 1, ZZ)
    with pytest.raises(ArityMismatch):
        substitute_sparse(f, SubstitutionSpec(2, 2, 5))


def test_image_point():
    spec = SubstitutionSpec(3, 2, 5)
    assert image_point(spec, 2) == [2, 4, 16]
    assert image_point(spec, 2, PrimeField(7)) == [2, 4, 2]


def test_oracle_agrees_with_symbolic_image():
    f = parse_sparse("3*x1^2*x2 - 2*x2*x3 + x3^3 + 1", 3, ZZ)
    spec = SubstitutionSpec(3, 3, 7, k=2)
    image = substitute_sparse(f, spec)
    oracle = UniOracle(from_sparse(f), spec)
    for theta in range(-2, 4):
        assert oracle.evaluate(theta) == image.evaluate(theta)
    assert oracle.probe_count == 6


@pytest.mark.parametrize("backend", [BenOrTiwariBackend(), LagrangeBackend()])
def test_interpolate_image(backend):
    f = parse_sparse("x1 + x2", 2, ZZ)
    bb = from_sparse(f)
    spec = SubstitutionSpec(2, 2, 5)
    image = interpolate_image(bb, spec, spec.degree_bound(2), 2, backend)
    assert image == UniPoly(ZZ, {1: 1, 2: 1})
    assert bb.probe_count == backend.probe_cost(8, 2)


def test_parallel_images_match_sequential():
    f = parse_sparse("4*x1^2*x2 - x2*x3 + 7*x3^2 + x1", 3, PrimeField(101))
    base = SubstitutionSpec(3, 3, 7)
    specs = [base] + [base.shifted(k) for k in (1, 2, 3)]
    bounds = [s.degree_bound(4) for s in specs]
    backend = BenOrTiwariBackend()

    sequential_bb = from_sparse(f)
    sequential = interpolate_images(sequential_bb, specs, bounds, 4, backend)
    parallel_bb = from_sparse(f)
    parallel = interpolate_images(parallel_bb, specs, bounds, 4, backend, jobs=3)

    assert parallel == sequential
    assert sequential == [substitute_sparse(f, s) for s in specs]
    assert parallel_bb.probe_count == sequential_bb.probe_count == 4 * 8


def test_one_bound_per_spec():
    bb = from_sparse(parse_sparse("x1", 1, ZZ))
    with pytest.raises(ValueError):
        interpolate_images(bb, [SubstitutionSpec(1, 2, 3)], [], 1,
                           BenOrTiwariBackend())
