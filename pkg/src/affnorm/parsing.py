"""Text input: polynomial expressions and ideal files.

Expression grammar (used by the CLI and throughout the tests)::

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' natural]
    atom   := '(' expr ')' | identifier | natural ['/' natural]

Multiplication is always written explicitly (``2*x``, never ``2x``); ``^`` is
the power operator; ``3/4`` is a rational literal.  Errors carry 1-based
line/column positions.

Ideal files::

    ring: QQ[x,y]          # or Fp(32003)[x,y]
    order: dp              # dp = degrevlex, lp = lex
    ideal:
    x^4 + y^2*(y-1)^3

One generator per line after ``ideal:``; ``#`` starts a comment.
"""

import re
from fractions import Fraction

from .errors import InputSyntaxError
from .polyring import RingContext, prime_field, rationals

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text, line=1):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = pos + len(text[pos:]) - len(stripped) + 1
            raise InputSyntaxError(
                "unexpected character %r" % stripped[0], line, col
            )
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num")), m.start("num") + 1))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start("name") + 1))
        else:
            tokens.append(("op", m.group("op"), m.start("op") + 1))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _ExprParser:
    def __init__(self, tokens, ctx, line):
        self.tokens = tokens
        self.i = 0
        self.ctx = ctx
        self.line = line

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise InputSyntaxError(message, self.line, tok[2])

    def parse(self):
        poly = self.expr()
        kind, _, _ = self.peek()
        if kind != "end":
            self.fail("trailing input")
        return poly

    def expr(self):
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.next()
            negate = val == "-"
        poly = self.term()
        if negate:
            poly = -poly
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                poly = poly - rhs if val == "-" else poly + rhs
            else:
                return poly

    def term(self):
        poly = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.next()
                poly = poly * self.factor()
            elif kind in ("name", "num") or (kind == "op" and val == "("):
                self.fail("missing '*' (implicit multiplication is not allowed)")
            else:
                return poly

    def factor(self):
        poly = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, exp, _ = self.peek()
            if kind != "num":
                self.fail("exponent must be a nonnegative integer")
            self.next()
            poly = poly**exp
        return poly

    def atom(self):
        kind, val, _ = self.next()
        if kind == "num":
            nkind, nval, _ = self.peek()
            if nkind == "op" and nval == "/":
                self.next()
                dkind, dval, _ = self.peek()
                if dkind != "num":
                    self.fail("denominator must be an integer")
                self.next()
                if dval == 0:
                    self.fail("zero denominator")
                return self.ctx.constant(Fraction(val, dval))
            return self.ctx.constant(val)
        if kind == "name":
            if val not in self.ctx._var_index:
                raise InputSyntaxError(
                    "unknown variable %r" % val, self.line, self.tokens[self.i - 1][2]
                )
            return self.ctx.var(val)
        if kind == "op" and val == "(":
            poly = self.expr()
            kind, val, _ = self.peek()
            if kind != "op" or val != ")":
                self.fail("expected ')'")
            self.next()
            return poly
        self.fail("expected a number, variable or '('", self.tokens[self.i - 1])


def parse_polynomial(text, ctx, line=1):
    """Parse ``text`` as a polynomial in ``ctx``."""
    return _ExprParser(_tokenize(text, line), ctx, line).parse()


_RING_RE = re.compile(
    r"^\s*(?:(?P<qq>QQ)|Fp\(\s*(?P<p>\d+)\s*\))\s*\[\s*(?P<vars>[^\]]*)\]\s*$"
)


def _parse_ring(spec, line):
    m = _RING_RE.match(spec)
    if m is None:
        raise InputSyntaxError(
            "ring must look like QQ[x,y] or Fp(32003)[x,y]", line, 1
        )
    if m.group("qq"):
        field = rationals()
    else:
        p = int(m.group("p"))
        if p < 2 or not _is_probable_prime(p):
            raise InputSyntaxError("Fp modulus must be prime", line, 1)
        field = prime_field(p)
    names = [v.strip() for v in m.group("vars").split(",") if v.strip()]
    if not names:
        raise InputSyntaxError("empty variable list", line, 1)
    for v in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
            raise InputSyntaxError("bad variable name %r" % v, line, 1)
    if len(set(names)) != len(names):
        raise InputSyntaxError("duplicate variable name", line, 1)
    return names, field


def _is_probable_prime(n):
    from .arith import is_prime

    return is_prime(n)


_ORDERS = {"dp": ("degrevlex",), "lp": ("lex",)}


def parse_input_text(text):
    """Parse an ideal file; returns ``(RingContext, [generators])``."""
    names = None
    field = None
    order_spec = ("degrevlex",)
    gens = []
    in_ideal = False
    saw_ideal = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not in_ideal:
            if line.startswith("ring:"):
                names, field = _parse_ring(line[5:], lineno)
            elif line.startswith("order:"):
                token = line[6:].strip()
                if token not in _ORDERS:
                    raise InputSyntaxError(
                        "unknown order %r (use dp or lp; local orders are not"
                        " supported)" % token,
                        lineno,
                        1,
                    )
                order_spec = _ORDERS[token]
            elif line == "ideal:":
                in_ideal = True
                saw_ideal = True
            else:
                raise InputSyntaxError("expected ring:/order:/ideal:", lineno, 1)
        else:
            if names is None:
                raise InputSyntaxError("ring: must come before the ideal", lineno, 1)
            ctx = RingContext(names, field, order_spec)
            gens.append(parse_polynomial(line, ctx, lineno))
    if names is None:
        raise InputSyntaxError("missing ring: declaration", 1, 1)
    if not saw_ideal or not gens:
        raise InputSyntaxError("empty ideal section", 1, 1)
    ctx = RingContext(names, field, order_spec)
    return ctx, [g.convert(ctx) if g.ctx != ctx else g for g in gens]


def parse_input_file(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_input_text(handle.read())
