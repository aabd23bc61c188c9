"""Brute-force reference implementations used to cross-check the library.

These avoid the library's algorithms: roots come from classical Euclidean
models, linear algebra goes through sympy, and face membership is tested
straight from the defining inequalities over all weights.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from fractions import Fraction
from itertools import product

import sympy

# -- classical root systems -----------------------------------------------------------


def _e(i, m, s=1):
    v = [0] * m
    v[i] = s
    return v


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def euclidean_roots(family: str, n: int):
    """(roots, ordered simple roots) as Fraction tuples in a standard model."""
    F = Fraction
    if family == "A":
        m = n + 1
        roots = {tuple(F(x) for x in _add(_e(i, m), _e(j, m, -1)))
                 for i in range(m) for j in range(m) if i != j}
        simple = [tuple(F(x) for x in _add(_e(i, m), _e(i + 1, m, -1))) for i in range(n)]
    elif family in "BCD":
        m = n
        roots = set()
        for i in range(m):
            for j in range(i + 1, m):
                for s, t in product((1, -1), repeat=2):
                    roots.add(tuple(F(x) for x in _add(_e(i, m, s), _e(j, m, t))))
        if family == "B":
            roots |= {tuple(F(x) for x in _e(i, m, s)) for i in range(m) for s in (1, -1)}
            last = tuple(F(x) for x in _e(m - 1, m))
        elif family == "C":
            roots |= {tuple(F(2 * x) for x in _e(i, m, s)) for i in range(m) for s in (1, -1)}
            last = tuple(F(2 * x) for x in _e(m - 1, m))
        else:
            last = tuple(F(x) for x in _add(_e(m - 2, m), _e(m - 1, m)))
        simple = [tuple(F(x) for x in _add(_e(i, m), _e(i + 1, m, -1))) for i in range(m - 1)]
        simple.append(last)
    elif family == "G":
        # inside the plane x+y+z=0 of R^3
        short = [(1, -1, 0), (0, 1, -1), (-1, 0, 1)]
        long_ = [(2, -1, -1), (-1, 2, -1), (-1, -1, 2)]
        roots = set()
        for v in short + long_:
            roots.add(tuple(F(x) for x in v))
            roots.add(tuple(F(-x) for x in v))
        simple = [tuple(map(F, (1, -1, 0))), tuple(map(F, (-2, 1, 1)))]
    elif family == "F":
        m = 4
        roots = set()
        for i in range(m):
            for s in (1, -1):
                roots.add(tuple(F(x) for x in _e(i, m, s)))
            for j in range(i + 1, m):
                for s, t in product((1, -1), repeat=2):
                    roots.add(tuple(F(x) for x in _add(_e(i, m, s), _e(j, m, t))))
        for signs in product((1, -1), repeat=4):
            roots.add(tuple(F(s, 2) for s in signs))
        simple = [tuple(map(F, (0, 1, -1, 0))), tuple(map(F, (0, 0, 1, -1))),
                  tuple(map(F, (0, 0, 0, 1))), (F(1, 2), F(-1, 2), F(-1, 2), F(-1, 2))]
    else:
        raise ValueError(family)
    return roots, simple


def _ip(u, v):
    return sum(a * b for a, b in zip(u, v))


def cartan_of(simple):
    return [[int(2 * _ip(a, b) / _ip(a, a)) for b in simple] for a in simple]


# -- exact linear algebra via sympy ---------------------------------------------------

def rank(rows) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction)
                          else sympy.Integer(x) for x in r] for r in rows]).rank()


def in_span(vec, rows) -> bool:
    return rank(list(rows) + [vec]) == rank(rows)


# -- weights ------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _inverse_of_columns(columns: tuple) -> tuple:
    """Inverse of the matrix whose j-th column is ``columns[j]``, as Fractions."""
    n = len(columns)
    inv = sympy.Matrix(n, n, lambda i, j: columns[j][i]).inv()
    return tuple(tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(n))
                 for i in range(n))


def _solve_columns(columns, v):
    inv = _inverse_of_columns(tuple(tuple(c) for c in columns))
    return [sum(r * x for r, x in zip(row, v)) for row in inv]


def _root_coords(cartan, v):
    """Solve v = sum c_j alpha_j where alpha_j is column j of the Cartan matrix."""
    n = len(v)
    return _solve_columns([tuple(cartan[i][j] for i in range(n)) for j in range(n)], v)


def _dominant_conjugate(cartan, mu):
    mu = list(mu)
    while True:
        i = next((k for k, c in enumerate(mu) if c < 0), None)
        if i is None:
            return tuple(mu)
        c = mu[i]
        mu = [mu[j] - c * cartan[j][i] for j in range(len(mu))]


def brute_weights(rs, lam) -> set:
    """Weights by saturation: ``mu`` in ``lam - Q+`` whose dominant conjugate
    stays below ``lam``, reached by subtracting simple roots one at a time."""
    cartan = [list(r) for r in rs.cartan_matrix]
    n = len(lam)

    def is_weight(mu):
        plus = _dominant_conjugate(cartan, mu)
        c = _root_coords(cartan, [a - b for a, b in zip(lam, plus)])
        return all(x.denominator == 1 and x >= 0 for x in c)

    lam = tuple(lam)
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for i in range(n):
            nu = tuple(mu[j] - cartan[j][i] for j in range(n))
            if nu not in seen and is_weight(nu):
                seen.add(nu)
                queue.append(nu)
    return seen


# -- faces, straight from the definition ---------------------------------------------

def coefficients(rs, base_roots, v):
    """Coefficients of ``v`` over ``base_roots`` (both in fundamental coordinates)."""
    return _solve_columns(base_roots, list(v))


def support_over(rs, base_roots, top, lam):
    c = coefficients(rs, base_roots, [a - b for a, b in zip(top, lam)])
    return frozenset(i for i, x in enumerate(c) if x > 0)


def literal_member(rs, weights, base, top, Y, x) -> bool:
    """``a(x) = 0`` on ``Y`` and ``(top - lam)(x) > 0`` for every weight whose
    difference with ``top`` leaves ``Y``."""
    roots = base.roots
    if any(rs.evaluate(roots[i], x) != 0 for i in Y):
        return False
    for lam in weights:
        if not support_over(rs, roots, top, lam) <= set(Y):
            d = [a - b for a, b in zip(top, lam)]
            if rs.evaluate(d, x) <= 0:
                return False
    return True


def span_equal(rs, F1, F2, top1, top2) -> bool:
    r1 = [F1.base.roots[i] for i in sorted(F1.Y)]
    r2 = [F2.base.roots[i] for i in sorted(F2.Y)]
    k = rank(r1)
    if k != rank(r2) or rank(r1 + r2) != k:
        return False
    return in_span([a - b for a, b in zip(top1, top2)], r1) if r1 else top1 == top2


def grid(n: int, bound: int):
    return list(product(range(-bound, bound + 1), repeat=n))


def sign_vector_faces(rs, bound: int) -> int:
    """Number of faces of the reflection arrangement met by integer grid points."""
    pos = rs.positive_roots
    vectors = set()
    for x in grid(rs.rank, bound):
        vectors.add(tuple((rs.evaluate(a, x) > 0) - (rs.evaluate(a, x) < 0) for a in pos))
    return len(vectors)


def is_connected(rs, nodes) -> bool:
    """Connectivity of a set of dual vectors under nonzero pairing."""
    nodes = list(nodes)
    if not nodes:
        return True
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(len(nodes)):
            if j not in seen and rs.inner(nodes[i], nodes[j]) != 0:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(nodes)
