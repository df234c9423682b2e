import logging
import time
from abc import ABC, abstractmethod
from typing import Dict, List, Optional

from sparsekron.blackbox import BlackBox
from sparsekron.errors import ArityMismatch, BackendFailure, BoundsViolated
from sparsekron.kronecker import (SubstitutionSpec, interpolate_images,
                                  substitute_sparse)
from sparsekron.models import InterpolationReport, RoundReport
from sparsekron.poly import SparsePoly, UniPoly
from sparsekron.univar import BenOrTiwariBackend, UnivarBackend
from sparsekron.utils.config import ConfigurableMixin
from sparsekron.utils.debugging import SPARSEKRON_DEBUG

from .params import RoundParams
from .term_tests import select_ok_index, term_test
from .ts_terms import ts_terms

logger = logging.getLogger(__name__)


class MultivariateInterpolator(ABC, ConfigurableMixin):
    """
    Abstract multivariate interpolator: recovers a sparse polynomial with at
    most T terms and total degree below D from a black box.

    Implementations differ only in the family of substitutions they scan
    (base-changing varies d under one prime, modulus-changing varies the prime
    under base D); they share the round loop of `interpolate`.
    """

    backend: UnivarBackend

    @abstractmethod
    def interpolate(self, bb: BlackBox, T: int, D: int) -> InterpolationReport:
        pass

    @abstractmethod
    def required_degree_bound(self, n: int, T: int, D: int) -> int:
        """Largest degree bound any univariate interpolation of a run may use."""
        pass

    @abstractmethod
    def expected_univariate_interpolations(self, n: int, T: int, D: int) -> int:
        """Upper bound on the univariate interpolations of a run."""
        pass


class KroneckerInterpolator(MultivariateInterpolator):
    """
    Shared round loop of the two deterministic Kronecker interpolators.

    Args:
        backend: univariate backend used for every image. Defaults to
            Ben-Or/Tiwari.
        jobs: number of threads used for independent image interpolations.
            Results and probe counts do not depend on it.
        debug: check the TS-term preconditions and attach debug info to the
            report. Defaults to the SPARSEKRON_DEBUG environment flag.
    """

    _DEFAULT_COMPONENTS = {
        'backend': BenOrTiwariBackend,
    }

    def __init__(self,
                 backend: Optional[UnivarBackend] = None,
                 *,
                 jobs: int = 1,
                 debug: Optional[bool] = None):
        if backend is not None and not isinstance(backend, UnivarBackend):
            raise TypeError(
                f"backend must be an instance of UnivarBackend, got {type(backend)}"
            )
        if jobs < 1:
            raise ValueError(f"jobs must be positive, got {jobs}")
        self.backend = backend or BenOrTiwariBackend()
        self.jobs = jobs
        self.debug = SPARSEKRON_DEBUG if debug is None else debug

    @property
    def name(self) -> str:
        return self.ALIAS or self.__class__.__name__

    @abstractmethod
    def compute_params(self, n: int, T: int, D: int) -> RoundParams:
        pass

    def algorithm_name(self, n: int, T: int, D: int) -> str:
        return self.name

    def required_degree_bound(self, n: int, T: int, D: int) -> int:
        return self.compute_params(n, T, D).max_degree_bound

    def expected_univariate_interpolations(self, n: int, T: int, D: int) -> int:
        return (self.compute_params(n, T, D).num_images
                + n * ((T - 1).bit_length() + 1))

    def _interpolate_all(self,
                         bb: BlackBox,
                         specs: List[SubstitutionSpec],
                         D: int,
                         term_bound: int) -> List[UniPoly]:
        bounds = [spec.degree_bound(D) for spec in specs]
        try:
            return interpolate_images(bb, specs, bounds, term_bound, self.backend,
                                      jobs=self.jobs)
        except BackendFailure as e:
            raise BoundsViolated(
                f"univariate backend rejected an image ({e}); the black box has "
                f"more than {term_bound} terms or degree >= {D}"
            ) from e

    def interpolate(self, bb: BlackBox, T: int, D: int) -> InterpolationReport:
        """
        Recover f from its black box.

        Raises:
            RingTooSmall: if the ring cannot host the univariate backend at the
                required degree bound; raised before any probe is spent.
            BoundsViolated: if the black box is detectably not a polynomial with
                at most T terms and total degree below D.
        """
        if T < 1 or D < 1:
            raise ValueError(f"term and degree bounds must be positive, got "
                             f"T={T}, D={D}")
        n = bb.n
        started = time.perf_counter()
        probes_before = bb.probe_count
        params = self.compute_params(n, T, D)
        self.backend.check_ring(bb.ring, params.max_degree_bound)

        specs = params.specs()
        logger.info(f"{self.name}: n={n} T={T} D={D}, {len(specs)} initial images, "
                    f"max degree bound {params.max_degree_bound}")

        images = self._interpolate_all(bb, specs, D, T)
        cyclic = [img.mod_cyclic(spec.p) for img, spec in zip(images, specs)]
        expected_probes = sum(self.backend.probe_cost(spec.degree_bound(D), T)
                              for spec in specs)
        univariate = len(specs)
        max_bound_used = max(spec.degree_bound(D) for spec in specs)

        h = SparsePoly.zero(bb.ring, n)
        remaining = T
        round_reports: List[RoundReport] = []
        debug_info: Dict[str, list] = {"candidate_operations": []}
        round_guard = (T - 1).bit_length() + 2

        while remaining > 0:
            current = params.for_round(remaining)
            counts = [u.num_terms for u in cyclic[:current.selection_range]]
            alpha = max(counts)
            if alpha == 0:
                break
            if len(round_reports) >= round_guard:
                raise BoundsViolated(
                    f"no convergence after {round_guard} rounds; the black box "
                    f"violates T={T} or D={D}"
                )

            selected = select_ok_index(counts)
            spec = specs[selected - 1]
            shifted_specs = [spec.shifted(k) for k in range(1, n + 1)]
            shifted = self._interpolate_all(bb, shifted_specs, D, T)
            univariate += n
            expected_probes += sum(self.backend.probe_cost(s.degree_bound(D), T)
                                   for s in shifted_specs)
            max_bound_used = max([max_bound_used]
                                 + [s.degree_bound(D) for s in shifted_specs])
            g = [img - substitute_sparse(h, s)
                 for img, s in zip(shifted, shifted_specs)]

            candidates = ts_terms(cyclic[selected - 1], images[selected - 1], g,
                                  spec.d, spec.p, D, check=self.debug)
            debug_info["candidate_operations"].append(candidates.operations)
            accepted = []
            seen = set()
            for term in candidates:
                if term[1] in seen:
                    continue
                if term_test(term, cyclic, current):
                    accepted.append(term)
                    seen.add(term[1])
            if not accepted:
                raise BoundsViolated(
                    f"round {len(round_reports) + 1} accepted no term "
                    f"(alpha={alpha}); the black box violates T={T} or D={D}"
                )

            s = SparsePoly.from_terms(bb.ring, n, accepted)
            h = h + s
            remaining -= len(accepted)
            for i, sub_spec in enumerate(specs):
                images[i] = images[i] - substitute_sparse(s, sub_spec)
                cyclic[i] = images[i].mod_cyclic(sub_spec.p)

            round_reports.append(RoundReport(
                index=len(round_reports) + 1, alpha=alpha, selected=selected,
                d=spec.d, p=spec.p, candidates=len(candidates),
                accepted=len(accepted), remaining_T=remaining, recovered=str(s),
            ))
            logger.info(f"{self.name} round {len(round_reports)}: alpha={alpha}, "
                        f"selected {selected} {spec}, {len(candidates)} candidates, "
                        f"{len(accepted)} accepted, T left {remaining}")

        if any(not img.is_zero() for img in images):
            raise BoundsViolated(
                f"images are not exhausted after {len(round_reports)} rounds; the "
                f"black box has more than {T} terms or degree >= {D}"
            )

        report = InterpolationReport(
            algorithm=self.algorithm_name(n, T, D),
            backend=self.backend.name,
            ring=str(bb.ring),
            n=n, T=T, D=D,
            polynomial=str(h),
            probes=bb.probe_count - probes_before,
            expected_probes=expected_probes,
            univariate_interpolations=univariate,
            max_degree_bound=max_bound_used,
            rounds=len(round_reports),
            round_reports=round_reports,
            wall_time_ms=(time.perf_counter() - started) * 1000,
            debug_info=debug_info if self.debug else {},
        )
        return report.with_poly(h)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(backend={self.backend!r}, jobs={self.jobs})"


def check_arity(bb: BlackBox, n: int):
    if bb.n != n:
        raise ArityMismatch(f"black box has {bb.n} variables, expected {n}")
