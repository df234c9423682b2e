from .base import BlackBox, EvalFn, from_sparse
from .expr import ExprTree, ExprNode, parse_expr
from .poly_file import (PolyFile, PolyFileError, PolySource, load_poly_file,
                        source_from_text)

__all__ = [
    "BlackBox",
    "EvalFn",
    "from_sparse",
    "ExprTree",
    "ExprNode",
    "parse_expr",
    "PolyFile",
    "PolyFileError",
    "PolySource",
    "load_poly_file",
    "source_from_text",
]
