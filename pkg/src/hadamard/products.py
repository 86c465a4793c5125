"""Hadamard (coordinate-wise) products of projective points and varieties.

Varieties are handled through their homogeneous vanishing ideals.  The
product of two varieties is the kernel of

    w_i  |->  x_i * y_i    from  K[w]  to  K[x]/I (x) K[y]/J,

which elimination hands back already Zariski-closed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from hadamard.algebra import Polynomial, Ring
from hadamard.errors import (
    ArityError,
    HomogeneityError,
    InvalidPointError,
    UndefinedProductError,
)
from hadamard.groebner import Ideal, intersect, ring_map_kernel


class ProjectivePoint:
    """A point of P^n with rational coordinates.

    Stored normalized so that the first nonzero coordinate is 1; equality and
    hashing are therefore projective.
    """

    __slots__ = ("coordinates",)

    def __init__(self, coordinates: Iterable):
        coords = [c if isinstance(c, Fraction) else Fraction(c) for c in coordinates]
        pivot = next((c for c in coords if c), None)
        if pivot is None:
            raise InvalidPointError("a projective point needs a nonzero coordinate")
        self.coordinates = tuple(c / pivot for c in coords)

    @property
    def arity(self) -> int:
        return len(self.coordinates)

    def __len__(self):
        return len(self.coordinates)

    def __iter__(self):
        return iter(self.coordinates)

    def __getitem__(self, i):
        return self.coordinates[i]

    def __mul__(self, other: "ProjectivePoint") -> "ProjectivePoint":
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return point_hadamard(self, other)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return point_equals(self, other)

    def __hash__(self):
        return hash(self.coordinates)

    def __lt__(self, other):
        return self.coordinates < other.coordinates

    def __str__(self):
        return "Point{" + ", ".join(str(c) for c in self.coordinates) + "}"

    def __repr__(self):
        return f"ProjectivePoint({[str(c) for c in self.coordinates]})"


def _same_arity(a: ProjectivePoint, b: ProjectivePoint):
    if a.arity != b.arity:
        raise ArityError(f"points of arity {a.arity} and {b.arity}")


def point_hadamard(a: ProjectivePoint, b: ProjectivePoint) -> ProjectivePoint:
    """Coordinate-wise product ``[a0*b0 : ... : an*bn]``."""
    _same_arity(a, b)
    prod = [x * y for x, y in zip(a.coordinates, b.coordinates)]
    if not any(prod):
        raise UndefinedProductError(f"{a} * {b} is not defined: every coordinate product is zero")
    return ProjectivePoint(prod)


def point_equals(a: ProjectivePoint, b: ProjectivePoint) -> bool:
    """Projective equality: all 2x2 minors of the pair vanish."""
    _same_arity(a, b)
    p, q = a.coordinates, b.coordinates
    n = len(p)
    return all(p[i] * q[j] == p[j] * q[i] for i in range(n) for j in range(i + 1, n))


def _dedupe_sorted(points: Iterable[ProjectivePoint]) -> list:
    return sorted(set(points))


def hadamard_product_points(left: Sequence[ProjectivePoint],
                            right: Sequence[ProjectivePoint]) -> list:
    """All defined pairwise products, deduplicated and sorted by coordinates."""
    out = []
    for a in left:
        for b in right:
            _same_arity(a, b)
            prod = [x * y for x, y in zip(a.coordinates, b.coordinates)]
            if any(prod):
                out.append(ProjectivePoint(prod))
    return _dedupe_sorted(out)


def _check_homogeneous(ideal: Ideal):
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise HomogeneityError(f"generator {g} is not homogeneous")


def hadamard_product_ideals(a: Ideal, b: Ideal) -> Ideal:
    """Vanishing ideal of the Hadamard product of V(a) and V(b).

    Both ideals must be homogeneous in rings of the same arity; the result
    lives in ``a.ring``.
    """
    if a.ring.nvars != b.ring.nvars:
        raise ArityError(f"ideals in rings with {a.ring.nvars} and {b.ring.nvars} variables")
    _check_homogeneous(a)
    _check_homogeneous(b)
    n = a.ring.nvars
    names = tuple(f"x{i}" for i in range(n)) + tuple(f"y{i}" for i in range(n))
    segre = Ring(names)
    pad = (0,) * n
    relations = Ideal(segre,
                      [Polynomial(segre, {m + pad: c for m, c in g.terms}) for g in a.generators]
                      + [Polynomial(segre, {pad + m: c for m, c in g.terms}) for g in b.generators])
    targets = [segre.var(i) * segre.var(n + i) for i in range(n)]
    return ring_map_kernel(targets, a.ring, relations)


def hadamard_product(*items):
    """Hadamard product of two or more ideals, points or point lists (left fold)."""
    if len(items) == 1 and isinstance(items[0], (list, tuple)):
        return hadamard_product_list(items[0])
    return hadamard_product_list(list(items))


def hadamard_product_list(items: Sequence):
    """Left fold of the binary product over a nonempty list of one kind.

    Accepts ideals, projective points, or point lists (sequences of points).
    """
    if not items:
        raise ValueError("cannot take the Hadamard product of an empty list")
    first = items[0]
    if isinstance(first, Ideal):
        kind, op = Ideal, hadamard_product_ideals
    elif isinstance(first, ProjectivePoint):
        kind, op = ProjectivePoint, point_hadamard
    elif isinstance(first, (list, tuple)):
        kind, op = (list, tuple), hadamard_product_points
    else:
        raise TypeError(f"cannot take Hadamard products of {type(first).__name__}")
    for it in items:
        if not isinstance(it, kind):
            raise TypeError("all items of a Hadamard product must be of one kind")
    if kind is Ideal and len(items) == 1:
        _check_homogeneous(first)
    if kind == (list, tuple) and len(items) == 1:
        return _dedupe_sorted(first)
    return reduce(op, items)


def hadamard_power_ideal(ideal: Ideal, r: int) -> Ideal:
    """``r``-th Hadamard power: ``X^[1] = X``, ``X^[r] = X * X^[r-1]``."""
    if r < 1:
        raise ValueError("Hadamard power needs r >= 1")
    _check_homogeneous(ideal)
    result = ideal
    for _ in range(r - 1):
        result = hadamard_product_ideals(ideal, result)
    return result


def hadamard_power_points(points: Sequence[ProjectivePoint], r: int) -> list:
    if r < 1:
        raise ValueError("Hadamard power needs r >= 1")
    result = list(points)
    for _ in range(r - 1):
        result = hadamard_product_points(points, result)
    return result


def hadamard_power(item, r: int):
    """Hadamard power of an ideal, a point, or a point list."""
    if isinstance(item, Ideal):
        return hadamard_power_ideal(item, r)
    if isinstance(item, ProjectivePoint):
        if r < 1:
            raise ValueError("Hadamard power needs r >= 1")
        return ProjectivePoint([c ** r for c in item.coordinates])
    return hadamard_power_points(item, r)


def single_point_ideal(point: ProjectivePoint, ring: Ring) -> Ideal:
    """Vanishing ideal of one point: the linear forms ``p_i0*v_j - p_j*v_i0``."""
    if point.arity != ring.nvars:
        raise ArityError(f"point of arity {point.arity} in a ring with {ring.nvars} variables")
    p = point.coordinates
    i0 = next(i for i, c in enumerate(p) if c)
    v = ring.gens()
    return Ideal(ring, [p[i0] * v[j] - p[j] * v[i0] for j in range(ring.nvars) if j != i0]).reduced()


def ideal_of_projective_points(points: Sequence[ProjectivePoint], ring: Ring) -> Ideal:
    """Vanishing ideal of a finite point set: intersection of the single-point ideals."""
    if not points:
        raise ValueError("need at least one point")
    distinct = list(dict.fromkeys(points))
    ideals = [single_point_ideal(p, ring) for p in distinct]
    return reduce(intersect, ideals)


def linear_span_ideal(points: Sequence[ProjectivePoint], ring: Ring) -> Ideal:
    """Vanishing ideal of the projective linear span of ``points``.

    The generators are ``v . k`` for ``k`` running over a basis of the right
    kernel of the matrix whose rows are the points.
    """
    n = ring.nvars
    for p in points:
        if p.arity != n:
            raise ArityError(f"point of arity {p.arity} in a ring with {n} variables")
    rows = [list(p.coordinates) for p in points]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [c / lead for c in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    v = ring.gens()
    forms = []
    for free in (c for c in range(n) if c not in pivots):
        k = [Fraction(0)] * n
        k[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            k[pc] = -rows[i][free]
        forms.append(sum((k[j] * v[j] for j in range(n) if k[j]), ring.zero()))
    return Ideal(ring, forms).reduced()
