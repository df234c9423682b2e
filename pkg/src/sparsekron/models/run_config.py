import re
from pathlib import Path
from typing import Any, Dict, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

_RING_PATTERN = re.compile(r"^(zz|fq[:\s]\s*(\d+|auto))$")


class RunConfig(BaseModel):
    """One `sparsekron interp` invocation, after config file and flags merge."""

    algorithm: Literal["base", "modulus", "auto"] = "auto"
    backend: Literal["lagrange", "bot"] = "bot"
    ring: str = Field(default="zz", description="`zz`, `fq:<q>` or `fq:auto`.")
    n: Optional[int] = Field(default=None, ge=1)
    T: Optional[int] = Field(default=None, ge=1)
    D: Optional[int] = Field(default=None, ge=1)
    expr: Optional[str] = None
    sparse: Optional[str] = None
    file: Optional[Path] = None
    output_format: Literal["text", "json", "csv"] = "text"
    jobs: int = Field(default=1, ge=1)
    backend_params: Dict[str, Any] = Field(default_factory=dict)
    timings: bool = False
    model_config = ConfigDict(extra="forbid")

    @field_validator("ring")
    @classmethod
    def ring_is_well_formed(cls, v: str) -> str:
        v = v.strip().lower()
        if _RING_PATTERN.match(v) is None:
            raise ValueError(f"ring must be 'zz', 'fq:<q>' or 'fq:auto', got '{v}'")
        return v

    @model_validator(mode="after")
    def exactly_one_input(self):
        given = [x for x in (self.expr, self.sparse, self.file) if x is not None]
        if len(given) != 1:
            raise ValueError("exactly one of --expr, --sparse or --file is required")
        return self

    @property
    def auto_ring(self) -> bool:
        return self.ring.endswith("auto")

    def interpolator_config(self) -> Dict[str, Any]:
        return {
            "type": self.algorithm,
            "params": {"jobs": self.jobs},
            "backend": {"type": self.backend, "params": dict(self.backend_params)},
        }

    @classmethod
    def load_defaults(cls, path: Path) -> Dict[str, Any]:
        """
        Read RunConfig defaults from a YAML config file of the form

            ring: zz
            interpolator:
              type: auto
              params:
                jobs: 1
              backend:
                type: bot
                params: {}

        Raises:
            ValueError: if the file is not a mapping of that shape.
        """
        with open(path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
        if not isinstance(raw, dict):
            raise ValueError(f"{path} must contain a mapping")
        unknown = set(raw) - {"ring", "interpolator"}
        if unknown:
            raise ValueError(f"Unrecognized keys in {path}: {sorted(unknown)}. "
                             f"The allowed keys are: ['ring', 'interpolator']")

        defaults: Dict[str, Any] = {}
        if "ring" in raw:
            defaults["ring"] = str(raw["ring"])
        interpolator = raw.get("interpolator") or {}
        if not isinstance(interpolator, dict):
            raise ValueError(f"'interpolator' section of {path} must be a mapping")
        if "type" in interpolator:
            defaults["algorithm"] = interpolator["type"]
        params = interpolator.get("params") or {}
        if "jobs" in params:
            defaults["jobs"] = params["jobs"]
        backend = interpolator.get("backend") or {}
        if "type" in backend:
            defaults["backend"] = backend["type"]
        if backend.get("params"):
            defaults["backend_params"] = dict(backend["params"])
        return defaults
