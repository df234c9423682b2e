import logging
from itertools import product
from typing import Callable, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field
from tqdm import tqdm

from sparsekron.blackbox import from_sparse
from sparsekron.errors import SparseKronError
from sparsekron.interpolation import (BaseParams, ModParams, resolve_interpolator,
                                      select_ok_index, smallest_admissible_prime)
from sparsekron.poly import SparsePoly, parse_sparse
from sparsekron.primes import next_prime_geq
from sparsekron.rings import Integers, Ring, mk_prime_field

from .collisions import check_doubling_lemma, check_half_survive, cyclic_term_count
from .instances import Instance, random_instances, random_univariate_polys
from .lemmas import (check_colliding_primes, check_good_bases,
                     check_nonvanishing_bound, check_pair_roots,
                     check_separation_divisibility)

logger = logging.getLogger(__name__)

Scope = Literal["lemmas", "roundtrip", "all"]
ALGORITHMS = ("base", "modulus")
BACKENDS = ("lagrange", "bot")


class PropertyFailure(BaseModel):
    suite: str
    check: str
    instance: str
    detail: str = ""
    minimized: Optional[str] = Field(
        default=None, description="Smallest failing polynomial found by shrinking."
    )


class SuiteResult(BaseModel):
    scope: str
    seed: int
    count: int
    checks: int = 0
    failures: List[PropertyFailure] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "SuiteResult") -> "SuiteResult":
        return SuiteResult(scope=self.scope, seed=self.seed, count=self.count,
                           checks=self.checks + other.checks,
                           failures=self.failures + other.failures)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status}: scope={self.scope} seed={self.seed} count={self.count} "
                f"checks={self.checks} failures={len(self.failures)}")


def shrink(f: SparsePoly, fails: Callable[[SparsePoly], bool]) -> SparsePoly:
    """Greedily drop terms of f while `fails` keeps holding."""
    current = f
    shrunk = True
    while shrunk and current.num_terms > 1:
        shrunk = False
        for term in current.split_terms():
            candidate = current - term
            if _still_fails(fails, candidate):
                current = candidate
                shrunk = True
                break
    return current


def _still_fails(fails: Callable[[SparsePoly], bool], f: SparsePoly) -> bool:
    try:
        return fails(f)
    except Exception:
        return True


class _Recorder:
    def __init__(self, suite: str, result: SuiteResult):
        self.suite = suite
        self.result = result

    def check(self,
              name: str,
              instance: Instance,
              holds: Callable[[SparsePoly], bool]):
        """Run `holds` on the instance's polynomial; on failure shrink and record."""
        self.result.checks += 1
        try:
            ok, detail = holds(instance.f), ""
        except SparseKronError as e:
            ok, detail = False, f"{type(e).__name__}: {e}"
        if ok:
            return
        minimized = shrink(instance.f, lambda g: not holds(g))
        logger.warning(f"{self.suite}/{name} failed on {instance}; minimized to "
                       f"{minimized}")
        self.result.failures.append(PropertyFailure(
            suite=self.suite, check=name, instance=str(instance), detail=detail,
            minimized=str(minimized),
        ))


def _ok_base(f: SparsePoly, params: BaseParams) -> int:
    counts = [cyclic_term_count(f, d, params.p)
              for d in range(1, params.selection_range + 1)]
    return select_ok_index(counts)


def _ok_prime(f: SparsePoly, params: ModParams) -> int:
    counts = [cyclic_term_count(f, params.D, params.prime(j))
              for j in range(1, params.selection_range + 1)]
    return params.prime(select_ok_index(counts))


def lemma_checks(instance: Instance, recorder: _Recorder):
    n, T, D = instance.n, instance.T, instance.D
    base = BaseParams.compute(n, T, D)
    p = base.p

    recorder.check("ok-degree keeps half", instance,
                   lambda f: check_half_survive(f, _ok_base(f, base), p))
    recorder.check("doubling", instance, lambda f: all(
        check_doubling_lemma(f, p, _ok_base(f, base), d)
        for d in range(1, base.selection_range + 1)))
    recorder.check("pair roots", instance, lambda f: all(
        check_pair_roots(f, d, p) for d in range(1, base.selection_range + 1)))
    recorder.check("good bases", instance,
                   lambda f: check_good_bases(f, T, D, p, base.test_range))

    mod = ModParams.compute(n, T, D)
    recorder.check("ok-prime keeps half", instance,
                   lambda f: check_half_survive(f, D, _ok_prime(f, mod)))
    recorder.check("colliding primes", instance,
                   lambda f: check_colliding_primes(f, T, D))
    recorder.check("separation divisibility", instance, lambda f: all(
        check_separation_divisibility(f, D, q)
        for q in mod.primes[:mod.selection_range]))


def _nonvanishing_checks(rng: np.random.Generator, result: SuiteResult):
    n = int(rng.integers(1, 5))
    count = int(rng.integers(1, 4))
    p = next_prime_geq(max(n, (n - 1) * count, 2))
    polys = random_univariate_polys(rng, count, n - 1, p)
    delta = int(rng.integers((n - 1) * count, p + 1))
    result.checks += 1
    if not check_nonvanishing_bound(polys, p, delta):
        result.failures.append(PropertyFailure(
            suite="lemmas", check="nonvanishing points",
            instance=f"p={p} delta={delta} polys={polys}",
        ))


def run_lemma_suite(seed: int, count: int, *, progress: bool = False) -> SuiteResult:
    """Brute-force collision and counting properties on `count` random
    polynomials over the integers."""
    result = SuiteResult(scope="lemmas", seed=seed, count=count)
    recorder = _Recorder("lemmas", result)
    rng = np.random.default_rng(seed + 1)
    instances = random_instances(seed, count)
    for instance in tqdm(instances, total=count, desc="lemmas", disable=not progress):
        lemma_checks(instance, recorder)
        _nonvanishing_checks(rng, result)
    return result


def reduce_coefficients(f: SparsePoly, ring: Ring) -> SparsePoly:
    """f with its coefficients moved into `ring`, a vanishing one replaced by 1."""
    terms = []
    for exps, c in f.items():
        c = ring.normalize(c)
        terms.append((ring.one() if ring.is_zero(c) else c, exps))
    return SparsePoly.from_terms(ring, f.n, terms)


def roundtrip_failure(f: SparsePoly,
                      T: int,
                      D: int,
                      algorithm: str,
                      backend: str) -> Optional[str]:
    """
    Interpolate f from its black box and check everything a run promises:
    exact recovery, probe accounting, the univariate-call bound and, on every
    round, that the selected substitution keeps half the remaining terms
    collision-free. Returns None when all hold, a reason otherwise.
    """
    interp = resolve_interpolator(algorithm, backend)
    try:
        report = interp.interpolate(from_sparse(f), T, D)
    except SparseKronError as e:
        return f"{type(e).__name__}: {e}"

    if report.poly != f:
        return f"recovered {report.poly}"
    if report.probes != report.expected_probes:
        return f"spent {report.probes} probes, contracted {report.expected_probes}"
    bound = interp.expected_univariate_interpolations(f.n, T, D)
    if report.univariate_interpolations > bound:
        return f"{report.univariate_interpolations} univariate calls exceed {bound}"

    remaining = f
    for r in report.round_reports:
        if not check_half_survive(remaining, r.d, r.p):
            return f"round {r.index}: (d={r.d}, p={r.p}) keeps fewer than half"
        remaining = remaining - parse_sparse(r.recovered, f.n, f.ring)
    return None


def _rings_for(instance: Instance, algorithm: str, backend: str) -> List[Ring]:
    q = smallest_admissible_prime(algorithm, instance.n, instance.T, instance.D,
                                  backend)
    return [Integers(), mk_prime_field(q)]


def run_roundtrip_suite(seed: int,
                        count: int,
                        *,
                        progress: bool = False,
                        combos: Optional[List[Tuple[str, str]]] = None,
                        n_values: Sequence[int] = (1, 2, 3),
                        t_max: int = 4,
                        D_max: int = 4) -> SuiteResult:
    """
    Interpolate `count` random polynomials with every algorithm and backend,
    over the integers and over the smallest admissible prime field. Instances
    draw n from `n_values`, t from [1, t_max] and D from [2, D_max].
    """
    result = SuiteResult(scope="roundtrip", seed=seed, count=count)
    recorder = _Recorder("roundtrip", result)
    combos = combos or list(product(ALGORITHMS, BACKENDS))
    instances = random_instances(seed, count, n_values=n_values, t_max=t_max,
                                 D_max=D_max, T_slack=1)
    for instance in tqdm(instances, total=count, desc="roundtrip",
                         disable=not progress):
        for algorithm, backend in combos:
            for ring in _rings_for(instance, algorithm, backend):
                case = Instance(f=reduce_coefficients(instance.f, ring),
                                T=instance.T, D=instance.D)
                reason = roundtrip_failure(case.f, case.T, case.D, algorithm,
                                           backend)
                result.checks += 1
                if reason is None:
                    continue
                minimized = shrink(case.f, lambda g: roundtrip_failure(
                    g, case.T, case.D, algorithm, backend) is not None)
                logger.warning(f"roundtrip {algorithm}/{backend} failed on {case}: "
                               f"{reason}")
                result.failures.append(PropertyFailure(
                    suite="roundtrip", check=f"{algorithm}/{backend}",
                    instance=str(case), detail=reason, minimized=str(minimized),
                ))
    return result


def run_suites(scope: Scope,
               seed: int,
               count: int,
               *,
               progress: bool = False) -> SuiteResult:
    if count == 0:
        logger.warning("count is 0, nothing to verify")
    if scope == "lemmas":
        return run_lemma_suite(seed, count, progress=progress)
    if scope == "roundtrip":
        return run_roundtrip_suite(seed, count, progress=progress)
    if scope == "all":
        lemmas = run_lemma_suite(seed, count, progress=progress)
        roundtrip = run_roundtrip_suite(seed, count, progress=progress)
        merged = lemmas.merge(roundtrip)
        merged.scope = "all"
        return merged
    raise ValueError(f"unknown scope '{scope}'")
