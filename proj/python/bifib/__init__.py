"""Exact bivariate Fibonacci and Lucas polynomials."""

from fractions import Fraction

from . import _bifib
from ._bifib import DomainError, Error, IndexError, IntegralityViolation, MalformedElement, Poly

__all__ = [
    "Poly", "Error", "DomainError", "IndexError", "MalformedElement", "IntegralityViolation",
    "gen", "chebyshev", "table", "decompose", "recompose", "det", "verify", "terms",
]


def _num(s):
    f = Fraction(s)
    return f.numerator if f.denominator == 1 else f


def gen(kind, n):
    """U_n or V_n as a Poly."""
    return _bifib.gen(kind, n)


def chebyshev(kind, n):
    return _bifib.chebyshev(kind, n)


def terms(p):
    """{(x_exp, y_exp): coefficient}"""
    return {(x, y): _num(c) for x, y, c in p.terms()}


def table(family, n_max, method="closed"):
    """Rows of a coefficient triangle as a dict row index -> list of ints."""
    first, rows = _bifib.table_rows(family, n_max, method)
    return {first + i: [int(v) for v in row] for i, row in enumerate(rows)}


def decompose(target, family, n):
    return [_num(c) for c in _bifib.decompose(target, family, n)]


def recompose(family, n, coords):
    return _bifib.recompose(family, n, [str(Fraction(c)) for c in coords])


def det(family, n):
    return _num(_bifib.det(family, n))


def verify(n_max, scope="all"):
    import json
    return json.loads(_bifib.verify_json(n_max, scope))
