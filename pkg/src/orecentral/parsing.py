"""Expression parser and algebra configuration files.

Grammar::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' uint)?
    atom     := rational | 'y' | 'x' | '(' expr ')'
    rational := uint ('/' uint)?

Juxtaposition is not accepted; products need an explicit ``*``.  Operator
expressions are evaluated with the Ore multiplication, so the result is
always in canonical form.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .basepoly import BasePoly, OreAlgebra
from .errors import ConfigError, ParseError
from .ore import OrePoly

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^/()])|(?P<bad>\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos and m.lastgroup is None:
            break
        start = m.start(m.lastgroup)
        offset = len(text[:start].encode())
        kind = m.lastgroup
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group('bad')!r}", offset)
        if kind == "name" and m.group("name") not in ("x", "y"):
            raise ParseError(f"unknown symbol {m.group('name')!r}", offset)
        tokens.append((kind, m.group(kind), offset))
        pos = m.end()
    tokens.append(("end", "", len(text.encode())))
    return tokens


class _Parser:
    def __init__(self, text, const, gen_y, gen_x):
        self.tokens = _tokenize(text)
        self.i = 0
        self.const = const
        self.gen_y = gen_y
        self.gen_x = gen_x

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, off = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val or 'end of input'!r}", off)

    def parse(self):
        value = self.expr()
        kind, val, off = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", off)
        return value

    def expr(self):
        negate = False
        kind, val, _ = self.peek()
        if kind == "op" and val == "-":
            self.take()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                value = value * self.factor()
            elif kind in ("int", "name") or (kind == "op" and val == "("):
                raise ParseError("missing '*' between factors", self.peek()[2])
            else:
                return value

    def factor(self):
        value = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, off = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", off)
            value = value ** int(val)
        return value

    def atom(self):
        kind, val, off = self.take()
        if kind == "int":
            num = int(val)
            k2, v2, _ = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, v3, off3 = self.take()
                if k3 != "int":
                    raise ParseError("expected denominator", off3)
                if int(v3) == 0:
                    raise ParseError("zero denominator", off3)
                return self.const(Fraction(num, int(v3)))
            return self.const(Fraction(num))
        if kind == "name":
            if val == "y":
                return self.gen_y()
            if self.gen_x is None:
                raise ParseError("unexpected x", off)
            return self.gen_x()
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected {val or 'end of input'!r}", off)


def parse_base(text):
    """Parse an element of K[y]."""
    return _Parser(text, BasePoly.constant, BasePoly.gen, None).parse()


def parse_operator(text, algebra):
    """Parse an element of S = K[y][x; sigma, delta] into canonical form."""
    return _Parser(
        text,
        lambda c: OrePoly(algebra, [BasePoly.constant(c)]),
        lambda: OrePoly.y(algebra),
        lambda: OrePoly.x(algebra),
    ).parse()


@dataclass(frozen=True)
class AlgebraConfig:
    sigma_y: str
    delta_y: str
    field: str = "Q"

    def to_algebra(self):
        try:
            sigma = parse_base(self.sigma_y)
            delta = parse_base(self.delta_y)
        except ParseError as exc:
            raise ConfigError(f"bad algebra expression: {exc}") from exc
        if not sigma:
            raise ConfigError("sigma_y must be nonzero")
        return OreAlgebra(sigma, delta)

    def dumps(self):
        return f"field={self.field}\nsigma_y={self.sigma_y}\ndelta_y={self.delta_y}\n"


PRESETS = {
    "weyl": AlgebraConfig("y", "1"),
    "qpower": AlgebraConfig("y^2", "0"),
    "degenerate": AlgebraConfig("1", "0"),
}


def parse_config(text):
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in ("field", "sigma_y", "delta_y"):
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        values[key] = value
    if values.get("field", "Q") != "Q":
        raise ConfigError(f"unsupported field {values['field']!r}; only Q is available")
    for key in ("sigma_y", "delta_y"):
        if key not in values:
            raise ConfigError(f"missing key {key!r}")
    return AlgebraConfig(values["sigma_y"], values["delta_y"], values.get("field", "Q"))


def load_algebra(source):
    """Load an algebra from a config file path or a preset name."""
    path = Path(source)
    if path.is_file():
        return parse_config(path.read_text()).to_algebra()
    if source in PRESETS:
        return PRESETS[source].to_algebra()
    raise ConfigError(f"no such algebra config file or preset: {source!r}")
