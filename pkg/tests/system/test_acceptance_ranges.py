import os

import pytest

from sparsekron.verify import run_roundtrip_suite

# 25 chunks of 20 instances; run with `pytest -n auto` to spread the chunks
CHUNKS = 25
CHUNK_SIZE = 20
FULL_RANGES = dict(n_values=(1, 2, 3, 4), t_max=8, D_max=10)


def _assert_passed(result, combos):
    assert result.passed, [f.model_dump() for f in result.failures]
    # one check per instance, combination and ring
    assert result.checks == CHUNK_SIZE * len(combos) * 2


@pytest.mark.parametrize("seed", range(1000, 1000 + CHUNKS))
def test_sparse_backend_over_full_ranges(seed):
    combos = [("base", "bot"), ("modulus", "bot")]
    result = run_roundtrip_suite(seed, CHUNK_SIZE, combos=combos, **FULL_RANGES)
    _assert_passed(result, combos)


@pytest.mark.parametrize("seed", range(1000, 1000 + CHUNKS))
def test_dense_backend_over_full_ranges(seed):
    if os.getenv("SPARSEKRON_FULL_ROUNDTRIP") is None:
        pytest.skip("Dense interpolation of every image at n=4, D=10 takes hours. "
                    "Set SPARSEKRON_FULL_ROUNDTRIP to run it.")
    combos = [("base", "lagrange"), ("modulus", "lagrange")]
    result = run_roundtrip_suite(seed, CHUNK_SIZE, combos=combos, **FULL_RANGES)
    _assert_passed(result, combos)


@pytest.mark.parametrize("seed", range(2000, 2003))
def test_dense_backend_over_moderate_ranges(seed):
    combos = [("base", "lagrange"), ("modulus", "lagrange")]
    result = run_roundtrip_suite(seed, CHUNK_SIZE, combos=combos,
                                 n_values=(1, 2, 3), t_max=5, D_max=7)
    _assert_passed(result, combos)
