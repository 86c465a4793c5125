"""Groebner bases over QQ: division, Buchberger, elimination, intersection and kernels.

The heavy lifting happens on plain ``{exponents: Fraction}`` dicts ordered by a
key function, so auxiliary rings used for elimination never need named
variables.  :class:`Ideal` and :class:`GroebnerBasis` wrap the results as
:class:`~hadamard.algebra.Polynomial` values.
"""

from __future__ import annotations

import contextvars
import heapq
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from hadamard.algebra import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    Ring,
    _key_function,
    canonicalize,
    elimination,
)
from hadamard.errors import ArityError, BudgetExceededError, RingMismatchError, ZeroPolynomialError

DEFAULT_BUDGET = 10**6

_budget = contextvars.ContextVar("groebner_budget", default=DEFAULT_BUDGET)


@contextmanager
def computation_budget(max_pairs: int):
    """Cap the number of S-pair reductions per Buchberger run inside the block."""
    if max_pairs <= 0:
        raise ValueError("budget must be positive")
    token = _budget.set(max_pairs)
    try:
        yield
    finally:
        _budget.reset(token)


# -- monomial helpers -------------------------------------------------------

def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _neg(k):
    return tuple(-x for x in k)


# -- dict-level kernels ----------------------------------------------------

class _Elem:
    """A monic basis element: leading monomial plus the remaining terms."""

    __slots__ = ("lm", "tail", "terms")

    def __init__(self, terms: dict, key):
        lm = max(terms, key=key)
        c = terms[lm]
        if c != 1:
            terms = {m: v / c for m, v in terms.items()}
        self.lm = lm
        self.terms = terms
        self.tail = [(m, v) for m, v in terms.items() if m != lm]


def _lead(terms: dict, key):
    return max(terms, key=key)


def _reduce(f: dict, basis: Sequence[_Elem], key, full: bool = True) -> dict:
    """Remainder of ``f`` modulo monic ``basis`` (first divisor wins)."""
    p = dict(f)
    heap = [(_neg(key(m)), m) for m in p]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for g in basis:
            if _divides(g.lm, m):
                break
        else:
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
            continue
        q = tuple(a - b for a, b in zip(m, g.lm))
        for gm, gc in g.tail:
            mm = tuple(a + b for a, b in zip(q, gm))
            v = p.get(mm)
            if v is None:
                p[mm] = -c * gc
                heapq.heappush(heap, (_neg(key(mm)), mm))
            else:
                v -= c * gc
                if v:
                    p[mm] = v
                else:
                    del p[mm]
    return rem


def _spoly(f: _Elem, g: _Elem) -> dict:
    l = _lcm(f.lm, g.lm)
    qf = tuple(a - b for a, b in zip(l, f.lm))
    qg = tuple(a - b for a, b in zip(l, g.lm))
    out = {}
    for m, c in f.tail:
        mm = tuple(a + b for a, b in zip(qf, m))
        out[mm] = out.get(mm, 0) + c
    for m, c in g.tail:
        mm = tuple(a + b for a, b in zip(qg, m))
        v = out.get(mm, 0) - c
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


def _groebner(polys: Iterable[dict], key, budget: int | None = None) -> list:
    """Reduced Groebner basis (monic dicts) of the ideal generated by ``polys``.

    Pairs are processed by the normal strategy (smallest lcm degree, then
    smallest lcm in the order) and pruned with the Gebauer-Moeller update,
    which subsumes the coprime and chain criteria.
    """
    if budget is None:
        budget = _budget.get()
    elems: list[_Elem] = []
    active: list[int] = []
    pairs: list[tuple] = []

    def pair_key(lcm):
        return (sum(lcm), key(lcm))

    def update(h: int):
        nonlocal active, pairs
        lh = elems[h].lm
        cand = [(g, _lcm(lh, elems[g].lm)) for g in active]
        kept = []
        for idx, (g1, l1) in enumerate(cand):
            if _coprime(lh, elems[g1].lm):
                kept.append((g1, l1, True))
                continue
            redundant = any(_divides(l2, l1) for _, l2 in cand[idx + 1:]) or \
                any(_divides(l2, l1) for _, l2, _ in kept)
            if not redundant:
                kept.append((g1, l1, False))
        new_pairs = []
        for g1, g2, l in pairs:
            if (_divides(lh, l) and _lcm(elems[g1].lm, lh) != l
                    and _lcm(elems[g2].lm, lh) != l):
                continue
            new_pairs.append((g1, g2, l))
        for g1, l1, coprime in kept:
            if not coprime:
                new_pairs.append((g1, h, l1))
        pairs = new_pairs
        active = [g for g in active if not _divides(lh, elems[g].lm)] + [h]

    def add(terms):
        elems.append(_Elem(terms, key))
        update(len(elems) - 1)

    for f in polys:
        if not f:
            continue
        r = _reduce(f, [elems[i] for i in active], key)
        if r:
            add(r)

    reductions = 0
    while pairs:
        best = min(range(len(pairs)), key=lambda i: pair_key(pairs[i][2]))
        g1, g2, _ = pairs.pop(best)
        reductions += 1
        if reductions > budget:
            raise BudgetExceededError(f"Groebner basis computation exceeded {budget} pair reductions")
        s = _spoly(elems[g1], elems[g2])
        if not s:
            continue
        r = _reduce(s, [elems[i] for i in active], key)
        if r:
            add(r)

    basis = [elems[i] for i in active]
    reduced = []
    for i, g in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        tail = _reduce(dict(g.tail), others, key)
        tail[g.lm] = Fraction(1)
        reduced.append(tail)
    reduced.sort(key=lambda t: key(_lead(t, key)))
    return reduced


# -- public types ------------------------------------------------------------

def _sort_key(ring: Ring, order: MonomialOrder):
    key = _key_function(order)

    def k(f: Polynomial):
        lm = f.leading_monomial(order)
        return (sum(lm), key(lm))

    return k


def _canonical_in(ring: Ring, terms: dict, order: MonomialOrder) -> Polynomial:
    f = canonicalize(Polynomial(ring, terms))
    if order != ring.order and f.leading_coefficient(order) < 0:
        f = -f
    return f


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis of an ideal with respect to ``order``.

    Elements are canonicalized (primitive integer coefficients, positive
    leading coefficient under ``order``) and sorted by leading monomial.
    """

    ring: Ring
    order: MonomialOrder
    elements: tuple

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.elements]

    def _monic(self) -> list:
        key = _key_function(self.order)
        return [_Elem(g.as_dict(), key) for g in self.elements]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.elements)


class Ideal:
    """Finitely generated ideal of a polynomial ring.

    Generators are canonicalized, zero-free and deduplicated.  Equality is
    mathematical: two ideals are equal iff their reduced Groebner bases agree.
    """

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: Ring, generators: Iterable = ()):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring != ring:
                raise RingMismatchError(f"generator in {g.ring}, ideal in {ring}")
            if not g:
                continue
            g = canonicalize(g)
            if g not in seen:
                seen.add(g)
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = {}

    @classmethod
    def _from_basis(cls, basis: GroebnerBasis) -> "Ideal":
        ideal = cls(basis.ring, basis.elements)
        ideal._gb[basis.order] = basis
        return ideal

    def gb(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        return buchberger(self, order)

    def reduced(self) -> "Ideal":
        """The same ideal, presented by its reduced Groebner basis."""
        return Ideal._from_basis(self.gb())

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __contains__(self, f: Polynomial) -> bool:
        return ideal_membership(f, self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equals(self, other)

    def __hash__(self):
        return hash((self.ring, self.gb().elements))

    def __str__(self):
        return render_ideal(self)

    def __repr__(self):
        return f"Ideal({self.ring.variables}, {render_ideal(self)!r})"


def render_ideal(ideal: Ideal) -> str:
    """``ideal(g1, g2, ...)`` with generators sorted by degree, then leading monomial."""
    gens = ideal.generators
    if not gens:
        return "ideal(0)"
    if any(g.is_constant() for g in gens):
        return "ideal(1)"
    gens = sorted(gens, key=_sort_key(ideal.ring, ideal.ring.order))
    return "ideal(" + ", ".join(str(g) for g in gens) + ")"


# -- operations --------------------------------------------------------------

def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder | None = None):
    """Multivariate division.  Returns ``(quotients, remainder)``.

    ``f == sum(q * g for q, g in zip(quotients, divisors)) + remainder`` and no
    term of the remainder is divisible by a leading monomial of a divisor.
    """
    ring = f.ring
    order = order or ring.order
    key = _key_function(order)
    leads = []
    for g in divisors:
        if g.ring != ring:
            raise RingMismatchError(f"divisor in {g.ring}, dividend in {ring}")
        if not g:
            raise ZeroPolynomialError("cannot divide by the zero polynomial")
        leads.append(g.leading_term(order))
    quotients = [{} for _ in divisors]
    p = f.as_dict()
    rem = {}
    while p:
        m = _lead(p, key)
        c = p[m]
        for i, (lm, lc) in enumerate(leads):
            if _divides(lm, m):
                q = tuple(a - b for a, b in zip(m, lm))
                qc = c / lc
                quotients[i][q] = quotients[i].get(q, 0) + qc
                for gm, gc in divisors[i].terms:
                    mm = tuple(a + b for a, b in zip(q, gm))
                    v = p.get(mm, 0) - qc * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
            del p[m]
    return [Polynomial(ring, q) for q in quotients], Polynomial(ring, rem)


def buchberger(ideal: Ideal, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` under ``order`` (default: the ring's)."""
    order = order or ideal.ring.order
    cached = ideal._gb.get(order)
    if cached is not None:
        return cached
    key = _key_function(order)
    reduced = _groebner((g.as_dict() for g in ideal.generators), key)
    elements = [_canonical_in(ideal.ring, t, order) for t in reduced]
    basis = GroebnerBasis(ideal.ring, order, tuple(elements))
    ideal._gb[order] = basis
    return basis


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    order = order or f.ring.order
    key = _key_function(order)
    return Polynomial(f.ring, _spoly(_Elem(f.as_dict(), key), _Elem(g.as_dict(), key)))


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Unique remainder of ``f`` modulo a Groebner basis; zero iff ``f`` is a member."""
    if f.ring != basis.ring:
        raise RingMismatchError(f"{f.ring} vs {basis.ring}")
    key = _key_function(basis.order)
    return Polynomial(f.ring, _reduce(f.as_dict(), basis._monic(), key))


def ideal_membership(f: Polynomial, ideal: Ideal) -> bool:
    return not normal_form(f, ideal.gb())


def ideal_equals(a: Ideal, b: Ideal) -> bool:
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")
    return set(a.gb().elements) == set(b.gb().elements)


def _subring_order(order: MonomialOrder) -> MonomialOrder:
    return GREVLEX if order.kind == "elim" else order


def _eliminate_dicts(polys, k: int, budget=None) -> list:
    """Reduced GB elements free of the first ``k`` variables, with those exponents stripped."""
    key = _key_function(elimination(k))
    basis = _groebner(polys, key, budget)
    out = []
    for t in basis:
        if all(not any(m[:k]) for m in t):
            out.append({m[k:]: c for m, c in t.items()})
    return out


def eliminate(ideal: Ideal, drop: Iterable) -> Ideal:
    """``ideal`` intersected with the subring in the variables not in ``drop``.

    ``drop`` holds variable names or indices.  The result lives in the ring of
    the remaining variables (declaration order kept).
    """
    ring = ideal.ring
    drop_idx = sorted({ring.index(v) if isinstance(v, str) else v for v in drop})
    if not drop_idx:
        return ideal.reduced()
    keep_idx = [i for i in range(ring.nvars) if i not in drop_idx]
    perm = drop_idx + keep_idx
    polys = [{tuple(m[i] for i in perm): c for m, c in g.terms} for g in ideal.generators]
    survivors = _eliminate_dicts(polys, len(drop_idx))
    sub = Ring(tuple(ring.variables[i] for i in keep_idx), _subring_order(ring.order))
    return Ideal(sub, [Polynomial(sub, t) for t in survivors]).reduced()


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """``a`` intersected with ``b``: eliminate ``t`` from ``t*a + (1 - t)*b``."""
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return Ideal(ring)
    polys = []
    for g in a.generators:
        polys.append({(1,) + m: c for m, c in g.terms})
    for g in b.generators:
        d = {(0,) + m: c for m, c in g.terms}
        d.update({(1,) + m: -c for m, c in g.terms})
        polys.append(d)
    survivors = _eliminate_dicts(polys, 1)
    return Ideal(ring, [Polynomial(ring, t) for t in survivors]).reduced()


def ring_map_kernel(targets: Sequence[Polynomial], result_ring: Ring,
                    relations: Ideal | None = None) -> Ideal:
    """Kernel of ``result_ring -> source/relations`` sending variable ``i`` to ``targets[i]``.

    Eliminates the source variables from ``relations + (w_i - targets[i])`` in
    the ring with the source variables first.
    """
    if len(targets) != result_ring.nvars:
        raise ArityError(f"{len(targets)} targets for {result_ring.nvars} result variables")
    if not targets:
        return Ideal(result_ring)
    source = targets[0].ring
    for t in targets:
        if t.ring != source:
            raise RingMismatchError("all targets must live in one ring")
    if relations is not None and relations.ring != source:
        raise RingMismatchError(f"relations in {relations.ring}, targets in {source}")
    k, n = source.nvars, result_ring.nvars
    pad = (0,) * n
    polys = []
    if relations is not None:
        for g in relations.generators:
            polys.append({m + pad: c for m, c in g.terms})
    for i, t in enumerate(targets):
        w = [0] * n
        w[i] = 1
        d = {(0,) * k + tuple(w): Fraction(1)}
        for m, c in t.terms:
            mm = m + pad
            d[mm] = d.get(mm, 0) - c
        polys.append({m: c for m, c in d.items() if c})
    survivors = _eliminate_dicts(polys, k)
    return Ideal(result_ring, [Polynomial(result_ring, t) for t in survivors]).reduced()
