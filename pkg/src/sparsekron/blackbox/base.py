import threading
from typing import Callable, Optional, Sequence

from sparsekron.errors import ArityMismatch
from sparsekron.poly import SparsePoly
from sparsekron.rings import Ring, RingElement

EvalFn = Callable[[Sequence[RingElement]], RingElement]


class BlackBox:
    """
    Evaluation oracle R^n -> R. The wrapped function must be pure; every call
    of `evaluate` counts as exactly one probe. The counter is guarded by a lock,
    so concurrent callers always see a consistent total.

    Args:
        ring: the coefficient ring the oracle computes over.
        n: number of variables.
        fn: the evaluation function, called with normalized ring elements.
        name: optional label used in logs and reports.
    """

    def __init__(self,
                 ring: Ring,
                 n: int,
                 fn: EvalFn,
                 *,
                 name: Optional[str] = None):
        if n < 1:
            raise ValueError(f"arity must be positive, got {n}")
        self.ring = ring
        self.n = n
        self.name = name or "black box"
        self._fn = fn
        self._probe_count = 0
        self._lock = threading.Lock()

    @property
    def probe_count(self) -> int:
        with self._lock:
            return self._probe_count

    def evaluate(self, point: Sequence[RingElement]) -> RingElement:
        if len(point) != self.n:
            raise ArityMismatch(
                f"{self.name} takes {self.n} coordinates, got {len(point)}"
            )
        point = [self.ring.normalize(a) for a in point]
        with self._lock:
            self._probe_count += 1
        return self.ring.normalize(self._fn(point))

    __call__ = evaluate

    def __repr__(self) -> str:
        return (f"BlackBox({self.name}, ring={self.ring}, n={self.n}, "
                f"probes={self.probe_count})")


def from_sparse(f: SparsePoly) -> BlackBox:
    """A black box computing an explicit sparse polynomial."""
    return BlackBox(f.ring, f.n, f.evaluate, name=f"sparse[{f.num_terms} terms]")
