"""Parser for the divisor notation used on the command line.

::

    divisor  := signed_term { ("+" | "-") term }
    term     := rational [ "*" ] point
    rational := integer [ "/" positive_integer ]
    point    := "[" label "]"
    label    := "inf" | ["-"] integer [ "/" positive_integer ]

Whitespace is ignored.  ``"1/2*[inf] - 1/3*[0] - 1/7*[1]"`` and
``"1/3[inf]+1/3[0]-1/3[1]"`` are both accepted.  Coefficients are reduced
to lowest terms; repeated points are rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FFRTError
from .qdiv import INF, PointLabel, RationalDivisor, Term

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<inf>inf)|(?P<op>[-+*/\[\]]))")


class DivisorSyntaxError(FFRTError):
    def __init__(self, position: int, expected: str, text: str = ""):
        self.position = position
        self.expected = expected
        found = text[position:position + 10] or "end of input"
        super().__init__(f"syntax error at column {position}: expected {expected}, found {found!r}")


class DivisorSemanticError(FFRTError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if not m:
                raise DivisorSyntaxError(pos + len(stripped[pos:]) - len(stripped[pos:].lstrip()),
                                         "a number, 'inf', or one of + - * / [ ]", text)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.k = 0

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else (None, None, len(self.text))

    def take(self, kind, value=None, expected=None):
        tk = self.peek()
        if tk[0] != kind or (value is not None and tk[1] != value):
            raise DivisorSyntaxError(tk[2], expected or repr(value or kind), self.text)
        self.k += 1
        return tk

    def at(self, value) -> bool:
        tk = self.peek()
        return tk[0] == "op" and tk[1] == value

    def rational(self, what="a coefficient") -> Fraction:
        num = int(self.take("int", expected=what)[1])
        if self.at("/"):
            self.k += 1
            pos = self.peek()[2]
            den = int(self.take("int", expected="a positive denominator")[1])
            if den == 0:
                raise DivisorSyntaxError(pos, "a positive denominator", self.text)
            return Fraction(num, den)
        return Fraction(num)

    def point(self) -> PointLabel:
        self.take("op", "[", "'['")
        if self.peek()[0] == "inf":
            self.k += 1
            label = INF
        else:
            sign = 1
            if self.at("-"):
                self.k += 1
                sign = -1
            label = PointLabel.affine(sign * self.rational("a point coordinate or 'inf'"))
        self.take("op", "]", "']'")
        return label

    def term(self, sign: int):
        coeff = sign * self.rational()
        if self.at("*"):
            self.k += 1
        return self.point(), coeff

    def divisor(self):
        if len(self.tokens) == 1 and self.tokens[0][:2] == ("int", "0"):
            return []
        sign = 1
        if self.at("-") or self.at("+"):
            sign = -1 if self.peek()[1] == "-" else 1
            self.k += 1
        terms = [self.term(sign)]
        while self.k < len(self.tokens):
            if self.at("+"):
                sign = 1
            elif self.at("-"):
                sign = -1
            else:
                raise DivisorSyntaxError(self.peek()[2], "'+' or '-'", self.text)
            self.k += 1
            terms.append(self.term(sign))
        return terms


def parse_divisor(text: str) -> RationalDivisor:
    pairs = _Parser(text).divisor()
    seen = set()
    terms = []
    for point, coeff in pairs:
        if point in seen:
            raise DivisorSemanticError(f"duplicate point [{point}]")
        seen.add(point)
        terms.append(Term(point, coeff.numerator, coeff.denominator))
    return RationalDivisor(terms)


def parse_weights(text: str) -> tuple:
    try:
        r = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise FFRTError(f"bad weight list {text!r}; expected e.g. 2,3,7") from None
    if any(x < 2 for x in r):
        raise FFRTError(f"weights must be >= 2, got {r}")
    return r
