import random
import string
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hadamard.algebra import Ring
from hadamard.errors import InvalidPointError, ParseError, ScriptError
from hadamard.parser import (
    Binding,
    Command,
    RingDecl,
    parse_point,
    parse_points,
    parse_polynomial,
    parse_polynomials,
    parse_script,
)
from hadamard.products import ProjectivePoint

from conftest import SEED, random_polynomial

R = Ring.of("x,y,z,w")
x, y, z, w = R.gens()


def test_parse_polynomial():
    assert parse_polynomial("x*y-z^2", R) == x * y - z**2
    assert parse_polynomial("0", R) == R.zero()
    assert parse_polynomial("2*x-y", R) == 2 * x - y


@pytest.mark.parametrize("text, expected", [
    ("3x", lambda: 3 * x),
    ("-3x^2", lambda: -3 * x**2),
    ("1/2x", lambda: F(1, 2) * x),
    ("-(x+y)^2", lambda: -(x + y) ** 2),
    ("2*(x - y)*(x + y)", lambda: 2 * x**2 - 2 * y**2),
    ("x^2^1", None),
    ("--x", lambda: x),
    ("x*-y", lambda: -x * y),
    ("6x^2 - 9x*y + 3y^2", lambda: 6 * x**2 - 9 * x * y + 3 * y**2),
])
def test_precedence(text, expected):
    if expected is None:
        with pytest.raises(ParseError):
            parse_polynomial(text, R)
    else:
        assert parse_polynomial(text, R) == expected()


@pytest.mark.parametrize("text", ["", "x y", "xy", "q", "1/0", "1/", "1 / 2", "x^-1", "x^1/2",
                                  "(x", "x)", "x+", "2 3", "x(y)", "x $ y"])
def test_polynomial_errors(text):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, R)
    assert info.value.line == 1 and info.value.column >= 1


def test_error_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x + y\n + q", R)
    assert (info.value.line, info.value.column) == (2, 4)


def test_parse_polynomials():
    assert parse_polynomials("ideal(x-y+z, z+y+w)", R) == [x - y + z, z + y + w]
    assert parse_polynomials("x, y", R) == [x, y]
    assert parse_polynomials("()", R) == []


def test_parse_point():
    assert parse_point("{1,2,3}") == ProjectivePoint([1, 2, 3])
    assert parse_point("[-1,2,5]") == ProjectivePoint([-1, 2, 5])
    assert parse_point("{1,1/2,-1/3}").coordinates == (1, F(1, 2), F(-1, 3))
    assert parse_point("{2,4}") == parse_point("[1,2]")
    with pytest.raises(InvalidPointError):
        parse_point("{0,0}")
    for bad in ("{1,2", "{x,1}", "{}", "(1,2)", "{1,2}}"):
        with pytest.raises(ParseError):
            parse_point(bad)


def test_parse_points():
    assert parse_points("{{0,1},{1,2}}") == [ProjectivePoint([0, 1]), ProjectivePoint([1, 2])]
    assert parse_points("[3,4]") == [ProjectivePoint([3, 4])]


def test_parse_script():
    s = parse_script("ring S = [x,y,z,w]; ideal I = (x-y+z, z+y+w);")
    assert len(s) == 2
    assert isinstance(s.statements[0], RingDecl)
    assert isinstance(s.statements[1], Binding)
    assert len(parse_script("")) == 0
    assert len(parse_script("# only a comment\n")) == 0


@pytest.mark.parametrize("text, fragment", [
    ("ideal I = (x);", "before it is bound"),
    ("ring S = [x]; product K;", "before it is bound"),
    ("ring S = [x]; ideal I = (x); ideal I = (x^2);", "duplicate"),
    ("ring S = [x]; ring S = [y];", "duplicate"),
    ("ring S = [x]; frobnicate 3;", "unknown command"),
    ("ring S = [x]; ideal I = (x); power I;", "argument"),
    ("ring S = [x]; ideal I = (x); equal I;", "argument"),
    ("ring S = [x]; point p = {1}; ideal I = (x); equal p I;", "cannot take"),
    ("ring S = [x]; point p = {1}; ideal J = p;", "binding receives"),
    ("ring S = [x]; list L = {{1}, (x)};", "all points or all ideals"),
    ("point p = {1,2}; points-ideal {p};", "before it is bound"),
])
def test_script_errors(text, fragment):
    with pytest.raises(ScriptError) as info:
        parse_script(text)
    assert fragment in str(info.value)


def test_script_syntax_errors():
    for text in ("ring S = [x]", "ring S = x;", "ring S = [x] order deglex;", "ring = [x];"):
        with pytest.raises(ParseError):
            parse_script(text)


def test_script_commands_and_nesting():
    s = parse_script("""
        ring S = [x,y];
        point p = {1,2}; point q = [3,4];
        list L = {p, q, {5,6}};
        ideal A = points-ideal L;
        equal (points-ideal {(product p q)}) (product (points-ideal {p}) (points-ideal {q}));
        power L 2;
    """)
    kinds = [type(st).__name__ for st in s.statements]
    assert kinds == ["RingDecl", "Binding", "Binding", "Binding", "Binding", "Command", "Command"]
    assert s.statements[5].call.kind == "bool"
    assert s.statements[6].call.kind == "points"


def test_ring_order_clause():
    s = parse_script("ring S = [x,y] order lex;")
    assert s.statements[0].ring.order.kind == "lex"


# -- properties ----------------------------------------------------------------

def test_roundtrip_random():
    rng = random.Random(SEED)
    S = Ring.of("x,y,z,t1")
    for _ in range(200):
        f = random_polynomial(rng, S, max_terms=6, max_degree=5, coeff=50, rational=True)
        assert parse_polynomial(str(f), S) == f


@settings(max_examples=300, derandomize=True, deadline=None)
@given(st.text(alphabet="xyzw0123456789/^*+-() ,{}[];=", max_size=30))
def test_fuzz_polynomial_total(text):
    try:
        parse_polynomial(text, R)
    except ParseError as exc:
        assert exc.line is not None and exc.column is not None


@settings(max_examples=300, derandomize=True, deadline=None)
@given(st.text(alphabet=string.ascii_lowercase[:6] + "xyz 0123/^*+-(){}[],;=#\n", max_size=40))
def test_fuzz_script_total(text):
    try:
        parse_script("ring S = [x,y,z]; " + text)
    except ParseError as exc:
        assert exc.line is not None
    except InvalidPointError:
        pass
