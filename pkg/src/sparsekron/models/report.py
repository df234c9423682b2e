import json
from typing import Any, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from sparsekron.poly import SparsePoly

REPORT_SCHEMA_VERSION = "1.0"


class RoundReport(BaseModel):
    index: int = Field(description="1-based round number.")
    alpha: int = Field(description="Largest cyclic-image term count this round.")
    selected: int = Field(description="The ok index: d0 (base) or j0 (modulus).")
    d: int = Field(description="Substitution base of the selected image.")
    p: int = Field(description="Substitution prime of the selected image.")
    candidates: int
    accepted: int
    remaining_T: int = Field(description="Term bound left after this round.")
    recovered: str = Field(description="Terms accepted this round, canonical text.")
    model_config = ConfigDict(frozen=True)


class InterpolationReport(BaseModel):
    """
    Outcome of one multivariate interpolation run. Everything but
    `wall_time_ms` is a deterministic function of the inputs, so reports
    compare byte for byte unless timings are requested.
    """

    spec_version: str = REPORT_SCHEMA_VERSION
    algorithm: str
    backend: str
    ring: str
    n: int
    T: int
    D: int
    polynomial: str = Field(description="Recovered polynomial, canonical text.")
    probes: int = Field(description="Oracle evaluations spent by this run.")
    expected_probes: int = Field(
        description="Sum of the backends' contracted probe counts."
    )
    univariate_interpolations: int
    max_degree_bound: int
    rounds: int
    round_reports: List[RoundReport] = Field(default_factory=list)
    wall_time_ms: Optional[float] = Field(default=None, exclude=True)
    debug_info: Dict[str, Any] = Field(default_factory=dict, exclude=True)

    _poly: Optional[SparsePoly] = PrivateAttr(default=None)

    @property
    def poly(self) -> SparsePoly:
        if self._poly is None:
            raise ValueError("report carries no polynomial")
        return self._poly

    def with_poly(self, poly: SparsePoly) -> "InterpolationReport":
        self._poly = poly
        return self

    def to_dict(self, *, timings: bool = False) -> Dict[str, Any]:
        data = self.model_dump()
        if timings:
            data["wall_time_ms"] = self.wall_time_ms
        return data

    def to_json(self, *, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings=timings), sort_keys=True, indent=2)

    def to_row(self, *, timings: bool = False) -> Dict[str, Any]:
        row = self.to_dict(timings=timings)
        row.pop("round_reports")
        row["alphas"] = " ".join(str(r.alpha) for r in self.round_reports)
        return row

    def to_csv(self, *, timings: bool = False) -> str:
        return pd.DataFrame([self.to_row(timings=timings)]).to_csv(index=False)

    def to_text(self, *, timings: bool = False) -> str:
        lines = [
            self.polynomial,
            f"# algorithm={self.algorithm} backend={self.backend} ring={self.ring} "
            f"n={self.n} T={self.T} D={self.D}",
            f"# probes={self.probes} expected={self.expected_probes} "
            f"univariate={self.univariate_interpolations} rounds={self.rounds} "
            f"max_degree_bound={self.max_degree_bound}",
        ]
        for r in self.round_reports:
            lines.append(f"# round {r.index}: alpha={r.alpha} selected={r.selected} "
                         f"(d={r.d}, p={r.p}) candidates={r.candidates} "
                         f"accepted={r.accepted} remaining_T={r.remaining_T}")
        if timings and self.wall_time_ms is not None:
            lines.append(f"# wall_time_ms={self.wall_time_ms:.3f}")
        return "\n".join(lines)

    def render(self, fmt: str, *, timings: bool = False) -> str:
        if fmt == "json":
            return self.to_json(timings=timings)
        if fmt == "csv":
            return self.to_csv(timings=timings)
        if fmt == "text":
            return self.to_text(timings=timings)
        raise ValueError(f"unknown output format '{fmt}'")
