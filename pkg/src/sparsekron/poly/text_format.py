from fractions import Fraction
from typing import Dict, List, Tuple

from sparsekron.rings import Ring, RingElement

from .lexer import TokenCursor, TokenKind, resolve_variable
from .sparse_poly import ExponentVector, SparsePoly
from .uni_poly import UniPoly


def _format_scalar(c: RingElement) -> str:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"({c})"
    return str(c)


def _join_terms(pairs: List[Tuple[RingElement, str]]) -> str:
    if not pairs:
        return "0"
    parts = []
    for i, (c, monomial) in enumerate(pairs):
        negative = c < 0
        magnitude = -c if negative else c
        if not monomial:
            body = _format_scalar(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{_format_scalar(magnitude)}*{monomial}"
        if i == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f" - {body}" if negative else f" + {body}")
    return "".join(parts)


def _sparse_monomial(exps: ExponentVector) -> str:
    factors = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors)


def _uni_monomial(e: int) -> str:
    if e == 0:
        return ""
    return "x" if e == 1 else f"x^{e}"


def format_sparse(f: SparsePoly) -> str:
    return _join_terms([(c, _sparse_monomial(exps)) for exps, c in f.items()])


def format_uni(u: UniPoly) -> str:
    return _join_terms([(c, _uni_monomial(e)) for e, c in u.items()])


def parse_sparse(text: str, n: int, ring: Ring) -> SparsePoly:
    """
    Parse the sum-of-terms text form, e.g. `3*x1^2*x2 - x3 + 5`.

    A term is a product of integer literals and `x<i>[^<exp>]` factors; terms are
    joined by `+` / `-`. Repeated monomials are summed. Parentheses are not part
    of this form (see `sparsekron.blackbox.parse_expr` for full expressions).

    Raises:
        ParseError: on malformed input, with the offending offset.
        UnknownVariable: on a variable outside x1..xn.
    """
    cursor = TokenCursor(text)
    terms: Dict[ExponentVector, RingElement] = {}

    sign = -1 if cursor.accept(TokenKind.MINUS) else 1
    while True:
        coeff, exps = _parse_term(cursor, n)
        key = tuple(exps)
        terms[key] = ring.add(terms.get(key, ring.zero()), sign * coeff)
        if cursor.accept(TokenKind.PLUS):
            sign = 1
        elif cursor.accept(TokenKind.MINUS):
            sign = -1
        elif cursor.current.kind is TokenKind.END:
            break
        else:
            cursor.fail("expected '+', '-' or '*'")
    return SparsePoly(ring, n, terms)


def _parse_term(cursor: TokenCursor, n: int) -> Tuple[int, List[int]]:
    coeff = 1
    exps = [0] * n
    while True:
        token = cursor.current
        if token.kind is TokenKind.NUMBER:
            cursor.advance()
            coeff *= int(token.text)
        elif token.kind is TokenKind.NAME:
            cursor.advance()
            index = resolve_variable(token, n)
            power = 1
            if cursor.accept(TokenKind.CARET):
                power = int(cursor.expect(TokenKind.NUMBER, "an exponent").text)
            exps[index] += power
        else:
            cursor.fail("expected a coefficient or a variable")
        if not cursor.accept(TokenKind.STAR):
            return coeff, exps
