import re
from dataclasses import dataclass
from enum import Enum
from typing import List

from sparsekron.errors import ParseError, UnknownVariable


class TokenKind(Enum):
    NUMBER = "number"
    NAME = "name"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    CARET = "^"
    LPAREN = "("
    RPAREN = ")"
    END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    position: int


_TOKEN_PATTERN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)
_VARIABLE_PATTERN = re.compile(r"^x([1-9][0-9]*)$")
_OPERATORS = {kind.value: kind for kind in
              (TokenKind.PLUS, TokenKind.MINUS, TokenKind.STAR,
               TokenKind.CARET, TokenKind.LPAREN, TokenKind.RPAREN)}


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        match = _TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        if match.group("number") is not None:
            kind = TokenKind.NUMBER
            group = "number"
        elif match.group("name") is not None:
            kind = TokenKind.NAME
            group = "name"
        else:
            group = "op"
            kind = _OPERATORS[match.group("op")]
        tokens.append(Token(kind, match.group(group), match.start(group)))
        pos = match.end()
    tokens.append(Token(TokenKind.END, "", len(text)))
    return tokens


def resolve_variable(token: Token, n: int) -> int:
    """0-based index of a variable token `x<i>`, checked against the arity n."""
    match = _VARIABLE_PATTERN.match(token.text)
    if match is None or int(match.group(1)) > n:
        raise UnknownVariable(token.text, token.position, n)
    return int(match.group(1)) - 1


class TokenCursor:
    def __init__(self, text: str):
        self.text = text
        self._tokens = tokenize(text)
        self._index = 0

    @property
    def current(self) -> Token:
        return self._tokens[self._index]

    def advance(self) -> Token:
        token = self._tokens[self._index]
        if token.kind is not TokenKind.END:
            self._index += 1
        return token

    def accept(self, kind: TokenKind) -> bool:
        if self.current.kind is kind:
            self.advance()
            return True
        return False

    def expect(self, kind: TokenKind, what: str) -> Token:
        if self.current.kind is not kind:
            self.fail(f"expected {what}")
        return self.advance()

    def fail(self, message: str):
        token = self.current
        found = token.kind.value if token.kind is TokenKind.END else repr(token.text)
        raise ParseError(f"{message}, found {found}", token.position, self.text)
