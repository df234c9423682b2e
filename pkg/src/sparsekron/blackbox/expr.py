from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import FrozenSet, Sequence

from sparsekron.poly.lexer import TokenCursor, TokenKind, resolve_variable
from sparsekron.rings import Ring, RingElement

from .base import BlackBox


class ExprNode(ABC):

    @abstractmethod
    def evaluate(self, ring: Ring, point: Sequence[RingElement]) -> RingElement:
        pass

    @abstractmethod
    def degree_bound(self) -> int:
        """Upper bound on the total degree of the denoted polynomial."""
        pass

    @abstractmethod
    def variables(self) -> FrozenSet[int]:
        pass


@dataclass(frozen=True)
class Const(ExprNode):
    value: int

    def evaluate(self, ring, point):
        return ring.normalize(self.value)

    def degree_bound(self) -> int:
        return 0

    def variables(self):
        return frozenset()


@dataclass(frozen=True)
class Var(ExprNode):
    index: int

    def evaluate(self, ring, point):
        return point[self.index]

    def degree_bound(self) -> int:
        return 1

    def variables(self):
        return frozenset({self.index})


@dataclass(frozen=True)
class Neg(ExprNode):
    operand: ExprNode

    def evaluate(self, ring, point):
        return ring.neg(self.operand.evaluate(ring, point))

    def degree_bound(self) -> int:
        return self.operand.degree_bound()

    def variables(self):
        return self.operand.variables()


@dataclass(frozen=True)
class Add(ExprNode):
    left: ExprNode
    right: ExprNode

    def evaluate(self, ring, point):
        return ring.add(self.left.evaluate(ring, point),
                        self.right.evaluate(ring, point))

    def degree_bound(self) -> int:
        return max(self.left.degree_bound(), self.right.degree_bound())

    def variables(self):
        return self.left.variables() | self.right.variables()


@dataclass(frozen=True)
class Sub(Add):

    def evaluate(self, ring, point):
        return ring.sub(self.left.evaluate(ring, point),
                        self.right.evaluate(ring, point))


@dataclass(frozen=True)
class Mul(ExprNode):
    left: ExprNode
    right: ExprNode

    def evaluate(self, ring, point):
        return ring.mul(self.left.evaluate(ring, point),
                        self.right.evaluate(ring, point))

    def degree_bound(self) -> int:
        return self.left.degree_bound() + self.right.degree_bound()

    def variables(self):
        return self.left.variables() | self.right.variables()


@dataclass(frozen=True)
class Pow(ExprNode):
    base: ExprNode
    exponent: int

    def evaluate(self, ring, point):
        return ring.pow(self.base.evaluate(ring, point), self.exponent)

    def degree_bound(self) -> int:
        return self.base.degree_bound() * self.exponent

    def variables(self):
        return self.base.variables()


@dataclass(frozen=True)
class ExprTree:
    """A parsed polynomial expression in x1..xn over a fixed ring."""

    root: ExprNode
    n: int
    ring: Ring
    source: str

    def evaluate(self, point: Sequence[RingElement]) -> RingElement:
        return self.root.evaluate(self.ring, point)

    def degree_bound(self) -> int:
        return self.root.degree_bound()

    def to_blackbox(self) -> BlackBox:
        return BlackBox(self.ring, self.n, self.evaluate, name=f"expr[{self.source}]")


def parse_expr(text: str, n: int, ring: Ring) -> ExprTree:
    """
    Parse an arithmetic expression over x1..xn.

    Grammar, loosest binding first: binary `+`/`-`, then `*`, then unary `-`,
    then `^` whose right operand must be a nonnegative integer literal.
    Chained powers such as `x1^2^3` are rejected; write `(x1^2)^3`.

    Raises:
        ParseError: on malformed input, with the offending offset.
        UnknownVariable: on a name other than x1..xn.
    """
    cursor = TokenCursor(text)
    root = _parse_sum(cursor, n)
    if cursor.current.kind is not TokenKind.END:
        cursor.fail("expected an operator")
    return ExprTree(root=root, n=n, ring=ring, source=text.strip())


def _parse_sum(cursor: TokenCursor, n: int) -> ExprNode:
    node = _parse_product(cursor, n)
    while True:
        if cursor.accept(TokenKind.PLUS):
            node = Add(node, _parse_product(cursor, n))
        elif cursor.accept(TokenKind.MINUS):
            node = Sub(node, _parse_product(cursor, n))
        else:
            return node


def _parse_product(cursor: TokenCursor, n: int) -> ExprNode:
    node = _parse_unary(cursor, n)
    while cursor.accept(TokenKind.STAR):
        node = Mul(node, _parse_unary(cursor, n))
    return node


def _parse_unary(cursor: TokenCursor, n: int) -> ExprNode:
    if cursor.accept(TokenKind.MINUS):
        return Neg(_parse_unary(cursor, n))
    return _parse_power(cursor, n)


def _parse_power(cursor: TokenCursor, n: int) -> ExprNode:
    node = _parse_primary(cursor, n)
    if cursor.accept(TokenKind.CARET):
        exponent = cursor.expect(TokenKind.NUMBER, "a nonnegative integer exponent")
        node = Pow(node, int(exponent.text))
        if cursor.current.kind is TokenKind.CARET:
            cursor.fail("chained '^' is ambiguous, use parentheses")
    return node


def _parse_primary(cursor: TokenCursor, n: int) -> ExprNode:
    token = cursor.current
    if token.kind is TokenKind.NUMBER:
        cursor.advance()
        return Const(int(token.text))
    if token.kind is TokenKind.NAME:
        cursor.advance()
        return Var(resolve_variable(token, n))
    if cursor.accept(TokenKind.LPAREN):
        node = _parse_sum(cursor, n)
        cursor.expect(TokenKind.RPAREN, "')'")
        return node
    cursor.fail("expected a number, a variable or '('")
    raise AssertionError("unreachable")
