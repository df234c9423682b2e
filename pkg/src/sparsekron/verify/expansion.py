import re

import sympy as sp
from sympy.polys.polyerrors import CoercionFailed
from sympy.parsing.sympy_parser import (convert_xor, parse_expr,
                                        standard_transformations)

from sparsekron.errors import ParseError, UnknownVariable
from sparsekron.poly import SparsePoly
from sparsekron.rings import Ring

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_VARIABLE = re.compile(r"^x([1-9][0-9]*)$")


def expand_expression(text: str, n: int, ring: Ring) -> SparsePoly:
    """
    Expand an arithmetic expression in x1..xn symbolically with sympy and read
    it back as a SparsePoly over `ring`. Independent of the package's own
    parser, which makes it a cross-check for expression black boxes.

    Raises:
        ParseError: if sympy cannot parse the text or it is not a polynomial
            with integer coefficients.
        UnknownVariable: on a symbol other than x1..xn.
    """
    symbols = sp.symbols(f"x1:{n + 1}")
    local = {str(s): s for s in symbols}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS,
                          evaluate=True)
    except (SyntaxError, TypeError, sp.SympifyError) as e:
        raise ParseError(f"sympy cannot parse the expression: {e}", position=0,
                         text=text) from e

    for sym in expr.free_symbols:
        match = _VARIABLE.match(str(sym))
        if match is None or not 1 <= int(match.group(1)) <= n:
            raise UnknownVariable(str(sym), text.find(str(sym)), n)

    try:
        poly = sp.Poly(sp.expand(expr), *symbols, domain="ZZ")
    except (sp.PolynomialError, CoercionFailed) as e:
        raise ParseError(f"not a polynomial over the integers: {e}", position=0,
                         text=text) from e

    terms = [(int(coeff), tuple(int(e) for e in monom))
             for monom, coeff in poly.terms()]
    return SparsePoly.from_terms(ring, n, terms)
