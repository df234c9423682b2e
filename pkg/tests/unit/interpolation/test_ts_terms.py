import pytest

from sparsekron.errors import PreconditionViolated
from sparsekron.interpolation import ts_terms
from sparsekron.poly import UniPoly
from sparsekron.rings import Integers

ZZ = Integers()


def _u(terms):
    return UniPoly(ZZ, terms)


def test_reads_terms_off_shifted_images():
    # f = x1 + x2 under d=2, p=5: x + x^2, shifted x^6 + x^2 and x + x^7
    fdp = _u({1: 1, 2: 1})
    result = ts_terms(fdp.mod_cyclic(5), fdp, [_u({6: 1, 2: 1}), _u({1: 1, 7: 1})],
                      2, 5, 2)
    assert result.candidates == [(1, (0, 1)), (1, (1, 0))]
    assert (result.d, result.p) == (2, 5)
    assert result.operations > 0


def test_colliding_residue_gives_no_candidate():
    # f = x1 + x2 under d=1, p=5 collapses to 2x
    fdp = _u({1: 2})
    result = ts_terms(fdp.mod_cyclic(5), fdp, [_u({6: 1, 1: 1}), _u({1: 1, 6: 1})],
                      1, 5, 2)
    assert len(result) == 0


def test_degree_bound_filters_candidates():
    fdp = _u({1: 1, 2: 1})
    result = ts_terms(fdp.mod_cyclic(5), fdp, [_u({6: 1, 2: 1}), _u({1: 1, 7: 1})],
                      2, 5, 1)
    assert len(result) == 0


def test_coefficient_must_match_in_every_image():
    fdp = _u({1: 3})
    result = ts_terms(fdp.mod_cyclic(5), fdp, [_u({6: 2})], 2, 5, 4)
    assert len(result) == 0


def test_negative_shift_is_rejected():
    fdp = _u({6: 1})
    result = ts_terms(fdp.mod_cyclic(5), fdp, [_u({1: 1})], 2, 5, 4)
    assert len(result) == 0


def test_exponents_must_rebuild_image_degree():
    # e = (1, 0) is well formed but 1*1 + 0*2 != 6
    fdp = _u({6: 1})
    result = ts_terms(fdp.mod_cyclic(5), fdp, [_u({11: 1}), _u({6: 1})], 2, 5, 4)
    assert len(result) == 0


def test_single_variable():
    fdp = _u({3: 7})
    result = ts_terms(fdp.mod_cyclic(5), fdp, [_u({18: 7})], 1, 5, 5)
    assert result.candidates == [(7, (3,))]


def test_check_mode_rejects_inconsistent_images():
    fdp = _u({1: 1, 2: 1})
    shifted = [_u({6: 1, 2: 1}), _u({1: 1, 8: 1})]
    with pytest.raises(PreconditionViolated):
        ts_terms(fdp.mod_cyclic(5), fdp, shifted, 2, 5, 2, check=True)
    assert len(ts_terms(fdp.mod_cyclic(5), fdp, shifted, 2, 5, 2)) == 1
