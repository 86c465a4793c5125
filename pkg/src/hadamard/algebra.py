"""Exact multivariate polynomials over QQ.

Coefficients are :class:`fractions.Fraction`; a polynomial is a sparse map
from exponent tuples to nonzero coefficients, stored sorted by the ring's
monomial order (largest first).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence

from hadamard.errors import ArityError, RingMismatchError, ZeroPolynomialError

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

Monomial = tuple  # tuple[int, ...]


def _grevlex_key(e):
    return (sum(e),) + tuple(-a for a in reversed(e))


def _block_key(k):
    def key(e):
        return _grevlex_key(e[:k]) + _grevlex_key(e[k:])
    return key


@lru_cache(maxsize=None)
def _key_function(order):
    if order.kind == "lex":
        raw = tuple
    elif order.kind == "grevlex":
        raw = _grevlex_key
    else:
        raw = _block_key(order.block)
    cache = {}

    def key(exps):
        k = cache.get(exps)
        if k is None:
            if len(cache) > 1 << 20:
                cache.clear()
            k = cache[exps] = raw(exps)
        return k

    return key


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: ``lex``, ``grevlex`` or ``elim`` (block order).

    ``elim`` with block size ``k`` compares the first ``k`` exponents by
    grevlex and breaks ties by grevlex on the rest.  A monomial involving one
    of the first ``k`` variables is therefore larger than any monomial free of
    them.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 0:
            raise ValueError("elimination block size must be non-negative")

    def key(self, exps: Monomial) -> tuple:
        """Sort key: ``a < b`` in this order iff ``key(a) < key(b)``."""
        return _key_function(self)(exps)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __str__(self):
        return f"elim({self.block})" if self.kind == "elim" else self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elimination(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


@dataclass(frozen=True)
class Ring:
    """Polynomial ring QQ[variables] with a monomial order.

    Variable names must be identifiers so that rendered polynomials parse back.
    """

    variables: tuple
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")

    @classmethod
    def of(cls, names: str | Sequence[str], order: MonomialOrder = GREVLEX) -> "Ring":
        """Build a ring from ``"x,y,z"`` or a sequence of names."""
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",") if n.strip()]
        return cls(tuple(names), order)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.variables, order)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> list:
        return [self.var(i) for i in range(self.nvars)]

    def __str__(self):
        return f"QQ[{', '.join(self.variables)}]"


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("ring", "terms", "_dict", "_hash")

    def __init__(self, ring: Ring, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        n = ring.nvars
        clean = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise ArityError(f"monomial {exps} has arity {len(exps)}, ring has {n} variables")
            c = _coerce(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        key = ring.order.key
        self.ring = ring
        self.terms = tuple(sorted(((m, c) for m, c in clean.items() if c),
                                  key=lambda t: key(t[0]), reverse=True))
        self._dict = None
        self._hash = None

    @classmethod
    def _from_sorted(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = tuple(terms)
        p._dict = None
        p._hash = None
        return p

    def as_dict(self) -> dict:
        if self._dict is None:
            self._dict = dict(self.terms)
        return dict(self._dict)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == (((0,) * self.ring.nvars, Fraction(other)),)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def _check(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.constant(_coerce(other))

    def __add__(self, other):
        other = self._check(other)
        d = self.as_dict()
        for m, c in other.terms:
            d[m] = d.get(m, 0) + c
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_sorted(self.ring, [(m, -c) for m, c in self.terms])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return Polynomial._from_sorted(self.ring, [(m, c * other) for m, c in self.terms])
        other = self._check(other)
        d = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                d[m] = d.get(m, 0) + c1 * c2
        return Polynomial(self.ring, d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def leading_term(self, order: MonomialOrder | None = None) -> tuple:
        """Return ``(monomial, coefficient)`` of the order-maximal term."""
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        if order is None or order == self.ring.order:
            return self.terms[0]
        return max(self.terms, key=lambda t: order.key(t[0]))

    def leading_monomial(self, order=None) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order=None) -> Fraction:
        return self.leading_term(order)[1]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m, _ in self.terms)

    def variables_used(self) -> set:
        return {i for m, _ in self.terms for i, a in enumerate(m) if a}

    def canonicalize(self) -> "Polynomial":
        return canonicalize(self)

    def evaluate(self, point) -> Fraction:
        return evaluate(self, point)

    def with_ring(self, ring: Ring) -> "Polynomial":
        """Reinterpret the same exponent vectors in a ring of equal arity."""
        if ring.nvars != self.ring.nvars:
            raise ArityError(f"cannot move {self.ring} polynomial into {ring}")
        if ring.order == self.ring.order:
            return Polynomial._from_sorted(ring, self.terms)
        return Polynomial(ring, self.terms)

    def __str__(self):
        return render_polynomial(self)

    def __repr__(self):
        return f"Polynomial({render_polynomial(self)!r})"


def canonicalize(f: Polynomial) -> Polynomial:
    """Scale ``f`` to a primitive integer polynomial with positive leading coefficient."""
    if not f.terms:
        return f
    den = 1
    for _, c in f.terms:
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for _, c in f.terms:
        num = gcd(num, c.numerator * (den // c.denominator))
    if f.terms[0][1] < 0:
        num = -num
    scale = Fraction(den, num)
    if scale == 1:
        return f
    return Polynomial._from_sorted(f.ring, [(m, c * scale) for m, c in f.terms])


def evaluate(f: Polynomial, point: Sequence) -> Fraction:
    """Substitute exact rational values for the ring variables."""
    if len(point) != f.ring.nvars:
        raise ArityError(f"point has {len(point)} coordinates, ring has {f.ring.nvars} variables")
    vals = [_coerce(v) for v in point]
    total = Fraction(0)
    for m, c in f.terms:
        t = c
        for v, a in zip(vals, m):
            if a:
                t *= v ** a
        total += t
    return total


def render_monomial(ring: Ring, m: Monomial) -> str:
    parts = []
    for name, a in zip(ring.variables, m):
        if a == 1:
            parts.append(name)
        elif a:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def render_polynomial(f: Polynomial) -> str:
    """Render like ``6x^2 - 9x*y + 3y^2``; non-integer coefficients get an explicit ``*``."""
    if not f.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(f.terms):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = render_monomial(f.ring, m)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        elif c.denominator == 1:
            body = f"{c}{mono}"
        else:
            body = f"{c}*{mono}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
