"""Recursive-descent parsing of polynomials, point literals and session scripts.

Polynomial grammar (precedence low to high)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary | NUMBER-juxtaposed-with-NAME)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := RATIONAL | NAME | "(" expr ")"

``3x`` means ``3*x``; ``xy`` is an unknown variable and ``x y`` is an error.

Script grammar (statements end with ``;``, ``#`` starts a comment)::

    ring S = [x, y, z] order grevlex;
    ideal I = (x - y + z, z + y);
    point p = {1, 2, 3};
    list L = {{0, 1}, {1, 2}};
    product I J;  power J 3;  points-ideal L;  equal A B;  gb I;  print p;

Bindings may also take a command as value: ``ideal A = points-ideal X;``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from hadamard.algebra import GREVLEX, LEX, Polynomial, Ring
from hadamard.errors import InvalidPointError, ParseError, ScriptError

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<number>\d+(?:/\d*)?)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*^(){}\[\],;=/])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # number | name | op | eof
    text: str
    pos: int
    line: int
    col: int


def tokenize(text: str) -> list:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        tok = m.group()
        if kind == "number" and "/" in tok:
            num, den = tok.split("/")
            if not den or int(den) == 0:
                raise ParseError(f"malformed rational {tok!r}", line, col)
        if kind == "op" and tok == "/":
            raise ParseError("malformed rational: write a/b with no spaces", line, col)
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, tok, pos, line, col))
        newlines = tok.count("\n")
        if newlines:
            line += newlines
            line_start = pos + tok.rindex("\n") + 1
        pos = m.end()
    col = pos - line_start + 1
    tokens.append(Token("eof", "", pos, line, col))
    return tokens


class _Cursor:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def next(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def at(self, text) -> bool:
        return self.tok.kind in ("op", "name") and self.tok.text == text

    def accept(self, text) -> bool:
        if self.at(text):
            self.next()
            return True
        return False

    def expect(self, text) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}")
        return self.next()

    def expect_name(self) -> Token:
        if self.tok.kind != "name":
            raise self.error("expected a name")
        return self.next()

    def error(self, message, tok=None, cls=ParseError):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return cls(f"{message}, found {found}", tok.line, tok.col)


def _number(tok: Token) -> Fraction:
    return Fraction(tok.text)


# -- polynomials -------------------------------------------------------------

def _parse_expr(cur: _Cursor, ring: Ring) -> Polynomial:
    f = _parse_term(cur, ring)
    while cur.at("+") or cur.at("-"):
        op = cur.next().text
        g = _parse_term(cur, ring)
        f = f + g if op == "+" else f - g
    return f


def _parse_term(cur: _Cursor, ring: Ring) -> Polynomial:
    f, numeric = _parse_unary(cur, ring)
    while True:
        if cur.accept("*"):
            g, numeric = _parse_unary(cur, ring)
            f = f * g
        elif cur.tok.kind == "name" and numeric:
            g, numeric = _parse_power(cur, ring)
            f = f * g
        elif cur.tok.kind == "name":
            raise cur.error("adjacent factors need an explicit '*'")
        elif cur.tok.kind == "number" or cur.at("("):
            raise cur.error("unexpected token")
        else:
            return f


def _parse_unary(cur: _Cursor, ring: Ring):
    if cur.at("-") or cur.at("+"):
        neg = cur.next().text == "-"
        f, numeric = _parse_unary(cur, ring)
        return (-f if neg else f), numeric
    return _parse_power(cur, ring)


def _parse_power(cur: _Cursor, ring: Ring):
    tok = cur.tok
    if tok.kind == "number":
        cur.next()
        f, numeric = ring.constant(_number(tok)), True
    elif tok.kind == "name":
        cur.next()
        if tok.text not in ring.variables:
            raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col)
        f, numeric = ring.var(tok.text), False
    elif cur.accept("("):
        f = _parse_expr(cur, ring)
        cur.expect(")")
        numeric = False
    else:
        raise cur.error("expected a number, variable or '('")
    if cur.accept("^"):
        e = cur.tok
        if e.kind != "number" or "/" in e.text:
            raise cur.error("exponent must be a non-negative integer")
        cur.next()
        f = f ** int(e.text)
    return f, numeric


def _finish(cur: _Cursor):
    if cur.tok.kind != "eof":
        raise cur.error("unexpected trailing input")


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` as an exact polynomial in ``ring``."""
    cur = _Cursor(tokenize(text))
    if cur.tok.kind == "eof":
        raise ParseError("empty polynomial", cur.tok.line, cur.tok.col)
    f = _parse_expr(cur, ring)
    _finish(cur)
    return f


def parse_polynomials(text: str, ring: Ring) -> list:
    """Parse a comma-separated generator list, optionally wrapped in ``ideal(...)`` or ``(...)``."""
    cur = _Cursor(tokenize(text))
    cur.accept("ideal")
    wrapped = cur.accept("(")
    polys = _parse_poly_list(cur, ring, ")" if wrapped else None)
    if wrapped:
        cur.expect(")")
    _finish(cur)
    return polys


def _parse_poly_list(cur, ring, closer):
    polys = []
    if closer and cur.at(closer):
        return polys
    if cur.tok.kind == "eof":
        raise ParseError("empty polynomial", cur.tok.line, cur.tok.col)
    polys.append(_parse_expr(cur, ring))
    while cur.accept(","):
        polys.append(_parse_expr(cur, ring))
    return polys


# -- points ------------------------------------------------------------------

def _parse_coordinate(cur: _Cursor) -> Fraction:
    sign = 1
    while cur.at("-") or cur.at("+"):
        if cur.next().text == "-":
            sign = -sign
    tok = cur.tok
    if tok.kind != "number":
        raise cur.error("expected a rational coordinate")
    cur.next()
    return sign * _number(tok)


def _parse_point_literal(cur: _Cursor):
    from hadamard.products import ProjectivePoint

    start = cur.tok
    if cur.accept("{"):
        closer = "}"
    elif cur.accept("["):
        closer = "]"
    else:
        raise cur.error("expected '{' or '['")
    coords = [_parse_coordinate(cur)]
    while cur.accept(","):
        coords.append(_parse_coordinate(cur))
    cur.expect(closer)
    try:
        return ProjectivePoint(coords)
    except InvalidPointError as exc:
        raise InvalidPointError(f"line {start.line}, column {start.col}: {exc}") from None


def parse_point(text: str):
    """Parse ``{a, b, ...}`` or ``[a, b, ...]`` into a :class:`ProjectivePoint`."""
    cur = _Cursor(tokenize(text))
    p = _parse_point_literal(cur)
    _finish(cur)
    return p


def parse_points(text: str) -> list:
    """Parse ``{{...}, {...}}`` (or a single point literal) into a list of points."""
    cur = _Cursor(tokenize(text))
    if cur.at("{") and cur.peek().text in ("{", "["):
        cur.next()
        pts = [_parse_point_literal(cur)]
        while cur.accept(","):
            pts.append(_parse_point_literal(cur))
        cur.expect("}")
    else:
        pts = [_parse_point_literal(cur)]
    _finish(cur)
    return pts


# -- scripts -----------------------------------------------------------------

# command -> number of value arguments (None: one or more)
COMMANDS = {
    "product": None,
    "power": 2,
    "points-ideal": 1,
    "span-ideal": 1,
    "equal": 2,
    "gb": 1,
    "print": 1,
}

_COMMAND_HEADS = {c.split("-")[0] for c in COMMANDS}

# value kinds
IDEAL, POINT, POINTS, IDEALS, BOOL = "ideal", "point", "points", "ideals", "bool"


@dataclass
class Literal:
    kind: str
    value: object
    token: Token


@dataclass
class Ref:
    kind: str
    name: str
    token: Token


@dataclass
class IntArg:
    value: int
    token: Token
    kind: str = "int"


@dataclass
class ListExpr:
    kind: str
    items: list
    token: Token


@dataclass
class Call:
    kind: str
    command: str
    args: list
    token: Token
    ring: Optional[Ring] = None


@dataclass
class RingDecl:
    name: str
    ring: Ring
    token: Token


@dataclass
class Binding:
    kind: str
    name: str
    value: object
    token: Token


@dataclass
class Command:
    call: Call
    token: Token


@dataclass
class SessionScript:
    statements: list = field(default_factory=list)

    def __len__(self):
        return len(self.statements)


_BIND_KINDS = {"ideal": IDEAL, "point": POINT, "list": (POINTS, IDEALS)}


class _ScriptParser:
    def __init__(self, text: str, order_override=None):
        self.cur = _Cursor(tokenize(text))
        self.ring: Optional[Ring] = None
        self.names: dict = {}  # name -> kind ("ring" for rings)
        self.order_override = order_override

    def error(self, message, tok=None):
        return self.cur.error(message, tok, ScriptError)

    def parse(self) -> SessionScript:
        script = SessionScript()
        cur = self.cur
        while cur.tok.kind != "eof":
            script.statements.append(self.statement())
            cur.expect(";")
        return script

    def _bind_name(self):
        tok = self.cur.expect_name()
        if tok.text in self.names:
            raise ScriptError(f"duplicate binding of {tok.text!r}", tok.line, tok.col)
        return tok

    def statement(self):
        cur = self.cur
        tok = cur.tok
        if tok.kind != "name":
            raise cur.error("expected a statement")
        if tok.text == "ring":
            cur.next()
            name = self._bind_name()
            cur.expect("=")
            cur.expect("[")
            var_toks = [cur.expect_name()]
            while cur.accept(","):
                var_toks.append(cur.expect_name())
            cur.expect("]")
            order = GREVLEX
            if cur.accept("order"):
                o = cur.expect_name()
                if o.text not in ("lex", "grevlex"):
                    raise ParseError(f"unknown monomial order {o.text!r}", o.line, o.col)
                order = LEX if o.text == "lex" else GREVLEX
            if self.order_override is not None:
                order = self.order_override
            try:
                ring = Ring(tuple(t.text for t in var_toks), order)
            except ValueError as exc:
                raise ParseError(str(exc), tok.line, tok.col) from None
            self.names[name.text] = "ring"
            self.ring = ring
            return RingDecl(name.text, ring, tok)
        if tok.text in _BIND_KINDS and cur.peek().kind == "name" and cur.peek(2).text == "=":
            cur.next()
            name = self._bind_name()
            cur.expect("=")
            value = self.value(tok.text)
            wanted = _BIND_KINDS[tok.text]
            ok = value.kind in wanted if isinstance(wanted, tuple) else value.kind == wanted
            if not ok:
                raise self.error(f"{tok.text} binding receives a {value.kind} value", value.token)
            self.names[name.text] = value.kind
            return Binding(value.kind, name.text, value, tok)
        call = self.call()
        return Command(call, tok)

    def command_name(self) -> Optional[str]:
        cur = self.cur
        tok = cur.tok
        if tok.kind != "name":
            return None
        text, j = tok.text, cur.i
        end = tok.pos + len(tok.text)
        while (cur.tokens[j + 1].text == "-" and cur.tokens[j + 1].pos == end
               and cur.tokens[j + 2].kind == "name" and cur.tokens[j + 2].pos == end + 1):
            text += "-" + cur.tokens[j + 2].text
            j += 2
            end = cur.tokens[j].pos + len(cur.tokens[j].text)
        if text in COMMANDS:
            cur.i = j + 1
            return text
        return None

    def call(self) -> Call:
        tok = self.cur.tok
        name = self.command_name()
        if name is None:
            if tok.kind == "name" and (tok.text in self.names or tok.text in _BIND_KINDS):
                raise self.error("expected a command", tok)
            raise self.error("unknown command", tok)
        return self.call_args(name, tok)

    def call_args(self, name, tok) -> Call:
        args = []
        while not (self.cur.at(";") or self.cur.at(")") or self.cur.at(",") or self.cur.at("}")
                   or self.cur.tok.kind == "eof"):
            args.append(self.arg())
        return self.check_call(name, args, tok)

    def check_call(self, name, args, tok) -> Call:
        arity = COMMANDS[name]
        if arity is None and not args:
            raise self.error(f"{name} needs at least one argument", tok)
        if arity is not None and len(args) != arity:
            raise ScriptError(f"{name} takes {arity} argument(s), got {len(args)}", tok.line, tok.col)
        kinds = [a.kind for a in args]

        def bad():
            return ScriptError(f"{name} cannot take arguments of kind {', '.join(kinds)}",
                               tok.line, tok.col)

        ring = None
        if name == "product":
            if len(args) == 1:
                kind = {IDEALS: IDEAL, POINTS: POINT, IDEAL: IDEAL, POINT: POINT}.get(kinds[0])
            elif len(set(kinds)) == 1 and kinds[0] in (IDEAL, POINT, POINTS):
                kind = kinds[0]
            else:
                kind = None
        elif name == "power":
            if kinds[1] != "int":
                raise ScriptError("power exponent must be an integer", tok.line, tok.col)
            kind = kinds[0] if kinds[0] in (IDEAL, POINT, POINTS) else None
        elif name in ("points-ideal", "span-ideal"):
            kind = IDEAL if kinds[0] in (POINT, POINTS) else None
            if self.ring is None:
                raise ScriptError(f"ring used before it is bound: {name} needs a ring", tok.line, tok.col)
            ring = self.ring
        elif name == "equal":
            kind = BOOL if kinds[0] == kinds[1] and kinds[0] in (IDEAL, POINT, POINTS) else None
        elif name == "gb":
            kind = IDEAL if kinds[0] == IDEAL else None
        else:  # print
            kind = kinds[0] if kinds[0] != "int" else None
        if kind is None:
            raise bad()
        return Call(kind, name, args, tok, ring)

    def ideal_literal(self) -> Literal:
        cur = self.cur
        tok = cur.expect("(")
        if self.ring is None:
            raise ScriptError("ring used before it is bound: declare a ring first", tok.line, tok.col)
        polys = _parse_poly_list(cur, self.ring, ")")
        cur.expect(")")
        from hadamard.groebner import Ideal

        return Literal(IDEAL, Ideal(self.ring, polys), tok)

    def ref(self) -> Ref:
        tok = self.cur.expect_name()
        kind = self.names.get(tok.text)
        if kind is None:
            raise ScriptError(f"{tok.text!r} is used before it is bound", tok.line, tok.col)
        if kind == "ring":
            raise ScriptError(f"ring {tok.text!r} is not a value", tok.line, tok.col)
        return Ref(kind, tok.text, tok)

    def list_literal(self) -> ListExpr:
        cur = self.cur
        tok = cur.expect("{")
        items = [self.list_item()]
        while cur.accept(","):
            items.append(self.list_item())
        cur.expect("}")
        kinds = {i.kind for i in items}
        if kinds == {POINT}:
            return ListExpr(POINTS, items, tok)
        if kinds == {IDEAL}:
            return ListExpr(IDEALS, items, tok)
        raise ScriptError("list items must be all points or all ideals", tok.line, tok.col)

    def list_item(self):
        cur = self.cur
        if cur.at("{") or cur.at("["):
            tok = cur.tok
            return Literal(POINT, _parse_point_literal(cur), tok)
        if cur.at("("):
            return self.paren()
        return self.ref()

    def arg(self):
        cur = self.cur
        tok = cur.tok
        if tok.kind == "number":
            if "/" in tok.text:
                raise self.error("expected an integer")
            cur.next()
            return IntArg(int(tok.text), tok)
        if cur.at("("):
            return self.paren()
        return self.value_atom()

    def paren(self):
        """``(cmd args)`` or an ideal literal ``(f, g, ...)``."""
        cur = self.cur
        nxt = cur.peek()
        if nxt.kind == "name" and nxt.text in _COMMAND_HEADS \
                and nxt.text not in (self.ring.variables if self.ring else ()):
            cur.next()
            call = self.call()
            cur.expect(")")
            return call
        return self.ideal_literal()

    def value_atom(self):
        cur = self.cur
        tok = cur.tok
        if cur.at("["):
            return Literal(POINT, _parse_point_literal(cur), tok)
        if cur.at("{"):
            if cur.peek().text in ("{", "[", "(") or cur.peek().kind == "name":
                return self.list_literal()
            return Literal(POINT, _parse_point_literal(cur), tok)
        if cur.tok.kind == "name":
            return self.ref()
        raise self.error("expected a value")

    def value(self, bind_kind):
        """Right-hand side of a binding: a literal, a bound name or a command."""
        cur = self.cur
        if cur.at("("):
            return self.ideal_literal()
        tok = cur.tok
        name = self.command_name()
        if name is not None:
            return self.call_args(name, tok)
        return self.value_atom()


def parse_script(text: str, order_override=None) -> SessionScript:
    """Parse and name-resolve a session script; stops at the first error."""
    return _ScriptParser(text, order_override).parse()
