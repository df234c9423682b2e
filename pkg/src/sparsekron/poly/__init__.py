from typing import Sequence, TypeVar, Union

from sparsekron.rings import RingElement

from .sparse_poly import SparsePoly, ExponentVector, Term
from .uni_poly import UniPoly
from .text_format import format_sparse, format_uni, parse_sparse

Poly = TypeVar("Poly", SparsePoly, UniPoly)


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def sub(f: Poly, g: Poly) -> Poly:
    return f - g


def mod_cyclic(f: UniPoly, p: int) -> UniPoly:
    return f.mod_cyclic(p)


def evaluate(f: Union[SparsePoly, UniPoly],
             point: Union[Sequence[RingElement], RingElement]) -> RingElement:
    return f.evaluate(point)  # type: ignore[arg-type]


__all__ = [
    "SparsePoly",
    "UniPoly",
    "ExponentVector",
    "Term",
    "add",
    "sub",
    "mod_cyclic",
    "evaluate",
    "format_sparse",
    "format_uni",
    "parse_sparse",
]
