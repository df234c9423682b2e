import logging
from typing import Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm

from sparsekron.blackbox import from_sparse
from sparsekron.interpolation import (KroneckerInterpolator, resolve_interpolator,
                                      smallest_admissible_prime)
from sparsekron.rings import Integers, Ring, mk_prime_field, ring_from_string
from sparsekron.verify import random_poly, reduce_coefficients

logger = logging.getLogger(__name__)

BENCH_COLUMNS = [
    "n", "T", "D", "ring", "algorithm", "backend", "terms", "probes",
    "expected_probes", "univariate_count", "univariate_bound", "N_initial",
    "largest_prime", "rounds", "agree",
]


def bench_rows(seed: int,
               n: int,
               T_values: Sequence[int],
               D: int,
               algorithms: Iterable[str],
               backend: str,
               ring: str = "zz",
               *,
               jobs: int = 1,
               timings: bool = False,
               progress: bool = False) -> pd.DataFrame:
    """
    One row per (T, algorithm) on a family of random polynomials with n and D
    fixed and exactly T terms each (or as many as fit below degree D). All
    algorithms run on the same polynomial; `agree` is False when their
    recovered polynomials differ.
    """
    rng = np.random.default_rng(seed)
    algorithms = list(algorithms)
    rows: List[dict] = []
    for T in tqdm(T_values, desc="bench", disable=not progress):
        f = random_poly(rng, n, T, D)
        recovered = []
        family_rows = []
        for algorithm in algorithms:
            interp = resolve_interpolator(algorithm, backend)
            assert isinstance(interp, KroneckerInterpolator)
            interp.jobs = jobs
            target = reduce_coefficients(f, _bench_ring(ring, interp, n, T, D))
            report = interp.interpolate(from_sparse(target), T, D)
            params = interp.compute_params(n, T, D)
            recovered.append(report.polynomial)
            row = {
                "n": n, "T": T, "D": D, "ring": str(target.ring),
                "algorithm": report.algorithm, "backend": report.backend,
                "terms": target.num_terms, "probes": report.probes,
                "expected_probes": report.expected_probes,
                "univariate_count": report.univariate_interpolations,
                "univariate_bound": interp.expected_univariate_interpolations(n, T, D),
                "N_initial": params.num_images,
                "largest_prime": max(spec.p for spec in params.specs()),
                "rounds": report.rounds,
            }
            if timings:
                row["ms"] = report.wall_time_ms
            family_rows.append(row)
            logger.info(f"bench T={T} {report.algorithm}: {report.probes} probes")
        agree = len(set(recovered)) <= 1
        for row in family_rows:
            row["agree"] = agree
        rows.extend(family_rows)

    columns = BENCH_COLUMNS + (["ms"] if timings else [])
    return pd.DataFrame(rows, columns=columns)


def bench_csv(frame: pd.DataFrame, seed: int, header: Optional[str] = None) -> str:
    """CSV text headed by a `# seed=` comment line."""
    lines = [f"# seed={seed}"]
    if header:
        lines.append(f"# {header}")
    return "\n".join(lines) + "\n" + frame.to_csv(index=False)


def _bench_ring(ring: str,
                interp: KroneckerInterpolator,
                n: int,
                T: int,
                D: int) -> Ring:
    if ring == "zz":
        return Integers()
    if ring == "fq:auto":
        return mk_prime_field(smallest_admissible_prime(interp, n, T, D))
    return ring_from_string(ring)
