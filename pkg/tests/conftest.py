import random
from fractions import Fraction

import pytest

from hadamard.algebra import Polynomial, Ring
from hadamard.groebner import _key_function, _reduce, _spoly, _Elem

SEED = 20201211


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_polynomial(rng, ring, max_terms=5, max_degree=4, coeff=10, rational=False):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        deg = rng.randint(0, max_degree)
        e = [0] * ring.nvars
        for _ in range(deg):
            e[rng.randrange(ring.nvars)] += 1
        c = Fraction(rng.randint(-coeff, coeff))
        if rational:
            c /= rng.randint(1, 5)
        terms[tuple(e)] = c
    return Polynomial(ring, terms)


def random_form(rng, ring, degree, coeff=5, max_terms=None):
    """Random nonzero homogeneous polynomial of the given degree."""
    while True:
        terms = {}
        for _ in range(max_terms or 2 * ring.nvars):
            e = [0] * ring.nvars
            for _ in range(degree):
                e[rng.randrange(ring.nvars)] += 1
            terms[tuple(e)] = rng.randint(-coeff, coeff)
        f = Polynomial(ring, terms)
        if f:
            return f


def assert_groebner(basis):
    """Every S-polynomial of the basis reduces to zero, and the basis is reduced."""
    key = _key_function(basis.order)
    elems = basis._monic()
    lms = [e.lm for e in elems]
    for i, g in enumerate(elems):
        for m in g.terms:
            for j, lm in enumerate(lms):
                if i != j:
                    assert not all(a <= b for a, b in zip(lm, m)), "basis is not reduced"
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            s = _spoly(elems[i], elems[j])
            assert not _reduce(s, elems, key), "S-polynomial does not reduce to zero"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        prev = _criteria.get(n, (title, True))
        _criteria[n] = (title, prev[1] and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")
