from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator

from sparsekron.poly import SparsePoly, parse_sparse
from sparsekron.rings import Ring, ring_from_string

from .base import BlackBox, from_sparse
from .expr import ExprTree, parse_expr


class PolyFileError(ValueError):
    pass


class PolyFile(BaseModel):
    """
    Schema of a `.poly` file, a small YAML mapping such as:

        ring: fq 17
        n: 2
        expr: (x1 + x2)^2 - x1^2 - x2^2

    Exactly one of `expr` (any expression) or `sparse` (sum-of-terms form) is
    given. `T` and `D` optionally record the bounds to interpolate with.
    """

    ring: str = Field(default="zz", description="`zz` or `fq <q>`.")
    n: int = Field(ge=1, description="Number of variables.")
    expr: Optional[str] = None
    sparse: Optional[str] = None
    T: Optional[int] = Field(default=None, ge=1)
    D: Optional[int] = Field(default=None, ge=1)
    model_config = ConfigDict(extra="forbid", coerce_numbers_to_str=True)

    @model_validator(mode="after")
    def exactly_one_source(self):
        if (self.expr is None) == (self.sparse is None):
            raise ValueError("a .poly file needs exactly one of 'expr' or 'sparse'")
        return self

    def build_ring(self) -> Ring:
        return ring_from_string(self.ring)


class PolySource(BaseModel):
    """A parsed polynomial source, ready to be wrapped as a black box."""

    ring: Ring
    n: int
    text: str
    tree: Optional[ExprTree] = None
    poly: Optional[SparsePoly] = None
    T: Optional[int] = None
    D: Optional[int] = None
    model_config = ConfigDict(arbitrary_types_allowed=True)

    def to_blackbox(self) -> BlackBox:
        if self.poly is not None:
            return from_sparse(self.poly)
        assert self.tree is not None
        return self.tree.to_blackbox()

    def degree_hint(self) -> int:
        """Cheap upper bound on the total degree of the source polynomial."""
        if self.poly is not None:
            return self.poly.total_degree
        assert self.tree is not None
        return self.tree.degree_bound()


def source_from_text(text: str, n: int, ring: Ring, *, sparse: bool = False,
                     T: Optional[int] = None, D: Optional[int] = None) -> PolySource:
    if sparse:
        return PolySource(ring=ring, n=n, text=text,
                          poly=parse_sparse(text, n, ring), T=T, D=D)
    return PolySource(ring=ring, n=n, text=text,
                      tree=parse_expr(text, n, ring), T=T, D=D)


def load_poly_file(path: Union[str, Path]) -> PolySource:
    """
    Read a `.poly` file.

    Raises:
        PolyFileError: if the file is not a valid `.poly` mapping.
        ParseError: if the polynomial text does not parse.
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        raise PolyFileError(f"Failed to read {path}. Reason: {e}") from e
    if not isinstance(raw, dict):
        raise PolyFileError(f"{path} must contain a mapping of 'key: value' lines")
    try:
        spec = PolyFile(**raw)
        ring = spec.build_ring()
    except ValueError as e:
        raise PolyFileError(f"Invalid .poly file {path}: {e}") from e
    if spec.sparse is not None:
        return source_from_text(spec.sparse, spec.n, ring, sparse=True,
                                T=spec.T, D=spec.D)
    assert spec.expr is not None
    return source_from_text(spec.expr, spec.n, ring, T=spec.T, D=spec.D)
