# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import re
from collections import namedtuple

from sympy.polys.domains import QQ

from ansible_collections.singularities.realforms.plugins.module_utils.errors import ParseError
from ansible_collections.singularities.realforms.plugins.module_utils.exact_arith import QQ_RING, format_rational

TOKEN_RE = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))")

ParsedInput = namedtuple("ParsedInput", ["polynomial", "source_text"])

Token = namedtuple("Token", ["kind", "value", "position"])


def tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = TOKEN_RE.match(text, position)
        if not match:
            offset = len(text[position:]) - len(text[position:].lstrip())
            raise ParseError("Unexpected character {0!r}".format(text[position + offset]), position=position + offset)
        start = match.start(match.lastgroup)
        tokens.append(Token(match.lastgroup, match.group(match.lastgroup), start))
        position = match.end()
    tokens.append(Token("end", None, len(text)))
    return tokens


class _Parser(object):
    """Recursive descent over

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary | "/" unary)*
    unary  := "-" unary | "+" unary | power
    power  := atom ("^" integer)?
    atom   := integer | "x" | "y" | "(" expr ")"

    Division is only allowed by a constant, so n/m literals and (x+y)/2 both parse.
    """

    def __init__(self, text, poly_ring):
        self.text = text
        self.ring = poly_ring
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.token
        self.index += 1
        return token

    def expect(self, value):
        if self.token.value != value:
            raise ParseError("Expected {0!r} at position {1}".format(value, self.token.position), position=self.token.position)
        return self.advance()

    def parse(self):
        if self.token.kind == "end":
            raise ParseError("Empty polynomial", position=0)
        result = self.expr()
        if self.token.kind != "end":
            raise ParseError("Unexpected {0!r} at position {1}".format(self.token.value, self.token.position), position=self.token.position)
        return result

    def expr(self):
        result = self.term()
        while self.token.value in ("+", "-"):
            operator = self.advance().value
            right = self.term()
            result = result + right if operator == "+" else result - right
        return result

    def term(self):
        result = self.unary()
        while self.token.value in ("*", "/"):
            operator = self.advance()
            right = self.unary()
            if operator.value == "*":
                result = result * right
                continue
            if not right.is_ground:
                raise ParseError("Division by a non-constant at position {0}".format(operator.position), position=operator.position)
            divisor = right.LC if right else QQ.zero
            if divisor == QQ.zero:
                raise ParseError("Division by zero at position {0}".format(operator.position), position=operator.position)
            result = result.quo_ground(divisor)
        return result

    def unary(self):
        if self.token.value == "-":
            self.advance()
            return -self.unary()
        if self.token.value == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.token.value != "^":
            return base
        caret = self.advance()
        if self.token.value == "-":
            raise ParseError("Negative exponent at position {0}".format(self.token.position), position=self.token.position)
        if self.token.kind != "number":
            raise ParseError("Exponent must be a non-negative integer at position {0}".format(caret.position + 1), position=caret.position + 1)
        exponent = int(self.advance().value)
        if self.token.value == "/":
            raise ParseError("Exponent must be an integer at position {0}".format(self.token.position), position=self.token.position)
        return base**exponent

    def atom(self):
        token = self.token
        if token.kind == "number":
            self.advance()
            return self.ring.ground_new(QQ(int(token.value)))
        if token.kind == "name":
            self.advance()
            if token.value == "x":
                return self.ring.gens[0]
            if token.value == "y":
                return self.ring.gens[1]
            raise ParseError("Unknown variable {0} at position {1}".format(token.value, token.position), position=token.position, variable=token.value)
        if token.value == "(":
            self.advance()
            result = self.expr()
            self.expect(")")
            return result
        if token.kind == "end":
            raise ParseError("Unexpected end of input", position=token.position)
        raise ParseError("Unexpected {0!r} at position {1}".format(token.value, token.position), position=token.position)


def parse_polynomial(text, poly_ring=QQ_RING):
    """ParsedInput holding the polynomial over Q written in text (variables x and y, operators + - * / ^)."""
    if not isinstance(text, str):
        raise ParseError("Expected a string, got {0}".format(type(text).__name__))
    return ParsedInput(_Parser(text, poly_ring).parse(), text)


def _render_monomial(i, j):
    factors = []
    for name, exponent in (("x", i), ("y", j)):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append("{0}^{1}".format(name, exponent))
    return "*".join(factors)


def render_polynomial(f):
    """Text form of f that parse_polynomial reads back to the same polynomial; terms by decreasing degree."""
    if not f:
        return "0"
    parts = []
    for (i, j), c in sorted(f.iterterms(), key=lambda term: (-(term[0][0] + term[0][1]), -term[0][0])):
        monomial = _render_monomial(i, j)
        magnitude = format_rational(abs(c))
        if not monomial:
            body = magnitude
        elif magnitude == "1":
            body = monomial
        else:
            body = "{0}*{1}".format(magnitude, monomial)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)
