"""Exact linear algebra over the rationals.

Rows are sequences of ``int`` or ``Fraction``.  Rank and span tests clear
denominators row by row and then run fraction-free (Bareiss) elimination on
integers, so no tolerance appears anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Number = int | Fraction


def as_fraction(value) -> Fraction:
    """Parse ``value`` (int, Fraction or a string such as ``"-3/4"``) exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Number) -> str:
    """Lowest-terms ``p/q`` with ``q > 0``; integers print as ``p``."""
    return str(Fraction(value))


def integer_row(row: Sequence[Number]) -> list[int]:
    """Scale ``row`` by the positive lcm of its denominators."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def primitive_row(row: Sequence[int]) -> list[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g <= 1:
        return list(row)
    return [x // g for x in row]


def rank(rows: Iterable[Sequence[Number]]) -> int:
    """Rank of the matrix with the given rows (Bareiss elimination)."""
    m = [integer_row(r) for r in rows]
    if not m:
        return 0
    n_cols = len(m[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            row_i = m[i]
            row_r = m[r]
            m[i] = [(p * row_i[k] - f * row_r[k]) // prev for k in range(n_cols)]
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def in_span(vec: Sequence[Number], rows: Sequence[Sequence[Number]]) -> bool:
    rows = list(rows)
    if not any(vec):
        return True
    if not rows:
        return False
    return rank(rows + [vec]) == rank(rows)


def same_span(rows1: Sequence[Sequence[Number]], rows2: Sequence[Sequence[Number]]) -> bool:
    rows1, rows2 = list(rows1), list(rows2)
    r1 = rank(rows1)
    if r1 != rank(rows2):
        return False
    return rank(rows1 + rows2) == r1


def span_contains(big: Sequence[Sequence[Number]], small: Sequence[Sequence[Number]]) -> bool:
    """True iff span(small) is a subspace of span(big)."""
    big, small = list(big), list(small)
    if not small:
        return True
    return rank(big + small) == rank(big)


def rref(rows: Sequence[Sequence[Number]], n_cols: int | None = None) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced row echelon form with zero rows dropped.  A canonical key for a span."""
    m = [[as_fraction(x) for x in r] for r in rows]
    if not m:
        return ()
    n_cols = len(m[0]) if n_cols is None else n_cols
    piv_r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(piv_r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[piv_r], m[pivot] = m[pivot], m[piv_r]
        p = m[piv_r][c]
        m[piv_r] = [x / p for x in m[piv_r]]
        for i in range(len(m)):
            if i != piv_r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[piv_r])]
        piv_r += 1
        if piv_r == len(m):
            break
    return tuple(tuple(r) for r in m[:piv_r])


def solve(matrix: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> list[Fraction] | None:
    """Solve ``matrix @ x = rhs`` exactly; ``None`` if inconsistent.

    Free variables are set to zero, so for full-column-rank systems the
    returned solution is the unique one.
    """
    n_rows = len(matrix)
    n_cols = len(matrix[0]) if n_rows else 0
    aug = [[as_fraction(x) for x in row] + [as_fraction(b)] for row, b in zip(matrix, rhs)]
    pivots: list[int] = []
    piv_r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(piv_r, n_rows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[piv_r], aug[pivot] = aug[pivot], aug[piv_r]
        p = aug[piv_r][c]
        aug[piv_r] = [x / p for x in aug[piv_r]]
        for i in range(n_rows):
            if i != piv_r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[piv_r])]
        pivots.append(c)
        piv_r += 1
        if piv_r == n_rows:
            break
    for i in range(piv_r, n_rows):
        if aug[i][n_cols] != 0:
            return None
    x = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][n_cols]
    return x


def coefficients_in_basis(vec: Sequence[Number], basis: Sequence[Sequence[Number]]) -> list[Fraction] | None:
    """Coefficients ``c`` with ``vec = sum c_k basis[k]``, or ``None``.

    ``basis`` must be linearly independent for the answer to be unique.
    """
    if not basis:
        return [] if not any(vec) else None
    n = len(vec)
    columns = [[basis[k][i] for k in range(len(basis))] for i in range(n)]
    return solve(columns, vec)


def inverse(matrix: Sequence[Sequence[Number]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[as_fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def mat_vec(matrix: Sequence[Sequence[Number]], vec: Sequence[Number]) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, vec)) for row in matrix)


def mat_mul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> tuple[tuple, ...]:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def dot(u: Sequence[Number], v: Sequence[Number]):
    return sum(a * b for a, b in zip(u, v))
