import string
from fractions import Fraction
from typing import List, NamedTuple

from SturmLiouville.Algebra.Polynomial import Polynomial
from SturmLiouville.Errors import ExpressionSyntaxError


class Token(NamedTuple):
    kind: str  # "number", "x", "op", "end"
    text: str
    position: int


_OPERATORS = "+-*^/()"


def tokenize(text: str) -> List[Token]:
    """ Splits a polynomial expression into tokens. Whitespace is insignificant."""
    tokens, i = [], 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in string.digits:
            start = i
            while i < len(text) and text[i] in string.digits:
                i += 1
            tokens.append(Token("number", text[start:i], start))
        elif ch == "x":
            tokens.append(Token("x", ch, i))
            i += 1
        elif ch in _OPERATORS:
            tokens.append(Token("op", ch, i))
            i += 1
        else:
            raise ExpressionSyntaxError(f"Unexpected character {ch!r}", text, i)
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    """ Recursive descent over

        expr   := term (("+" | "-") term)*
        term   := unary ("*" unary)*
        unary  := "-" unary | "+" unary | power
        power  := atom ("^" INTEGER)?
        atom   := INTEGER ("/" INTEGER)? | "x" | "(" expr ")"

    "/" only forms rational literals, so "1/3*x" is one third of x and "x/3" is an error.
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _error(self, message: str):
        raise ExpressionSyntaxError(message, self.text, self.current.position)

    def _accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.index += 1
            return True
        return False

    def _integer(self) -> int:
        if self.current.kind != "number":
            self._error("Expected an integer")
        value = int(self.current.text)
        self.index += 1
        return value

    def parse(self) -> Polynomial:
        if self.current.kind == "end":
            self._error("Empty expression")
        result = self.expr()
        if self.current.kind != "end":
            self._error(f"Unexpected {self.current.text!r}")
        return result

    def expr(self) -> Polynomial:
        result = self.term()
        while True:
            if self._accept("+"):
                result = result + self.term()
            elif self._accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> Polynomial:
        result = self.unary()
        while self._accept("*"):
            result = result * self.unary()
        return result

    def unary(self) -> Polynomial:
        if self._accept("-"):
            return -self.unary()
        if self._accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self._accept("^"):
            return base ** self._integer()
        return base

    def atom(self) -> Polynomial:
        token = self.current
        if token.kind == "number":
            numerator = self._integer()
            if self._accept("/"):
                position = self.current.position
                denominator = self._integer()
                if denominator == 0:
                    raise ExpressionSyntaxError("Zero denominator", self.text, position)
                return Polynomial.constant(Fraction(numerator, denominator))
            return Polynomial.constant(numerator)
        if token.kind == "x":
            self.index += 1
            return Polynomial.x()
        if self._accept("("):
            inner = self.expr()
            if not self._accept(")"):
                self._error("Expected ')'")
            return inner
        if token.kind == "end":
            self._error("Unexpected end of expression")
        self._error(f"Unexpected {token.text!r}")


def parse_polynomial(text: str) -> Polynomial:
    """ Parses an expression such as "1-x^2", "-2*x" or "(1-x^2)^2" into an exact Polynomial.

    Literals are integers or fractions p/q; the only variable is x; powers are non-negative integers.
    Raises ExpressionSyntaxError with the 0-based position of the offending character.
    """
    assert isinstance(text, str), f"Expected a string, got {type(text)}"
    return _Parser(text).parse()


def parse_rational(text: str) -> Fraction:
    """ Parses a constant expression such as "-3/2" into a Fraction."""
    p = parse_polynomial(text)
    if p.degree() > 0:
        raise ExpressionSyntaxError("Expected a constant", text, 0)
    return p[0]
