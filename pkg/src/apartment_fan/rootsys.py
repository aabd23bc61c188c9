"""Reduced crystallographic root systems, Weyl groups and their bases.

Coordinates
-----------
Elements of the dual space (roots, weights, any functional on the apartment)
are stored in the fundamental-weight basis; roots and weights then have
integer coordinates.  Points of the apartment are stored by their values on
the standard simple roots, ``x[i] = alpha_i(x)``.  A functional ``phi`` is
evaluated on ``x`` through its simple-root coordinates, which are integers
whenever ``phi`` lies in the root lattice.

The invariant scalar product gives the long roots of every irreducible
component squared length 2.
"""

from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterator, Sequence

from . import exact

DEFAULT_GUARD = 10**6
GUARD_ENV = "APARTMENT_FAN_GUARD"


class ClassificationError(ValueError):
    """The requested (family, rank) is not a reduced crystallographic type."""


class SizeLimitError(RuntimeError):
    """The Weyl group is larger than the enumeration guard allows."""

    def __init__(self, order: int, guard: int):
        super().__init__(f"|W| = {order} exceeds the enumeration guard {guard}")
        self.order = order
        self.guard = guard


_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_EXCEPTIONAL_ORDER = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                      ("F", 4): 1152, ("G", 2): 12}


def _check_type(family: str, rank: int) -> None:
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise ClassificationError(f"rank must be an integer, got {rank!r}")
    if family in _MIN_RANK:
        if rank < _MIN_RANK[family]:
            raise ClassificationError(f"{family}{rank} is not a valid type "
                                      f"({family}_n needs n >= {_MIN_RANK[family]})")
    elif family in _EXCEPTIONAL:
        if rank not in _EXCEPTIONAL[family]:
            raise ClassificationError(f"{family}{rank} is not a valid type")
    else:
        raise ClassificationError(f"unknown family {family!r}")


def _component_gram(family: str, n: int) -> list[list[Fraction]]:
    """Gram matrix of the simple roots, Bourbaki numbering."""
    g = [[Fraction(0)] * n for _ in range(n)]

    def link(i, j, value):
        g[i][j] = g[j][i] = Fraction(value)

    if family == "A":
        for i in range(n):
            g[i][i] = Fraction(2)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif family == "B":
        for i in range(n):
            g[i][i] = Fraction(2)
        g[n - 1][n - 1] = Fraction(1)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif family == "C":
        for i in range(n):
            g[i][i] = Fraction(1)
        g[n - 1][n - 1] = Fraction(2)
        for i in range(n - 2):
            link(i, i + 1, Fraction(-1, 2))
        link(n - 2, n - 1, -1)
    elif family == "D":
        for i in range(n):
            g[i][i] = Fraction(2)
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 3, n - 1, -1)
    elif family == "E":
        for i in range(n):
            g[i][i] = Fraction(2)
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    elif family == "F":
        g[0][0] = g[1][1] = Fraction(2)
        g[2][2] = g[3][3] = Fraction(1)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, Fraction(-1, 2))
    elif family == "G":
        g[0][0] = Fraction(2, 3)
        g[1][1] = Fraction(2)
        link(0, 1, -1)
    return g


def weyl_order(components: Sequence[tuple[str, int]]) -> int:
    """|W| from the classical formulas, without enumerating anything."""
    total = 1
    for family, n in components:
        if family == "A":
            total *= factorial(n + 1)
        elif family in "BC":
            total *= 2**n * factorial(n)
        elif family == "D":
            total *= 2 ** (n - 1) * factorial(n)
        else:
            total *= _EXCEPTIONAL_ORDER[(family, n)]
    return total


def resolve_guard(guard: int | None = None) -> int:
    if guard is not None:
        return guard
    env = os.environ.get(GUARD_ENV)
    return int(env) if env else DEFAULT_GUARD


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element.

    ``word`` is the lexicographically smallest reduced word, ``matrix`` the
    integer action on fundamental-weight coordinates.  Equality compares
    matrices.
    """

    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    point_matrix: tuple[tuple[int, ...], ...] = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __len__(self):
        return len(self.word)

    def act(self, v: Sequence) -> tuple:
        """Image of a dual vector given in fundamental-weight coordinates."""
        return exact.mat_vec(self.matrix, v)

    def act_point(self, x: Sequence) -> tuple:
        """Image of an apartment point given by its simple-root values."""
        return exact.mat_vec(self.point_matrix, x)


@dataclass(frozen=True)
class Weight:
    """A vector of the dual space in fundamental-weight coordinates."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords):
        object.__setattr__(self, "coords", tuple(exact.as_fraction(c) for c in coords))

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError(f"{self} is not integral")
        return tuple(int(c) for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(exact.format_rational(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Base:
    """The simple system ``witness(standard simple roots)``."""

    witness: WeylElement
    roots: tuple[tuple[int, ...], ...]

    @property
    def word(self) -> tuple[int, ...]:
        return self.witness.word

    def __eq__(self, other):
        return isinstance(other, Base) and self.witness == other.witness

    def __hash__(self):
        return hash(self.witness)

    def sort_key(self):
        return (len(self.word), self.word)


_TYPE_RE = re.compile(r"([A-Ga-g])\s*_?\s*(\d+)")


def parse_cartan_type(text: str) -> tuple[tuple[str, int], ...]:
    """Parse ``"A2"``, ``"B3"``, ``"A1xA1"``, ``"A1×G2"`` ... into components."""
    parts = re.split(r"\s*[x×*+]\s*", text.strip())
    comps = []
    for part in parts:
        m = _TYPE_RE.fullmatch(part)
        if not m:
            raise ClassificationError(f"cannot parse Cartan type {text!r}")
        comps.append((m.group(1).upper(), int(m.group(2))))
    return tuple(comps)


class RootSystem:
    """A (possibly reducible) reduced crystallographic root system.

    Build one with :func:`build_root_system`.  Instances are treated as
    immutable; the lazily computed caches fill idempotently.
    """

    def __init__(self, components: Sequence[tuple[str, int]]):
        comps = tuple((f.upper(), int(n)) for f, n in components)
        if not comps:
            raise ClassificationError("a root system needs at least one component")
        for f, n in comps:
            _check_type(f, n)
        self.components = comps
        self.rank = sum(n for _, n in comps)
        n = self.rank
        gram = [[Fraction(0)] * n for _ in range(n)]
        offset = 0
        self.component_indices: tuple[tuple[int, ...], ...] = ()
        blocks = []
        for f, k in comps:
            g = _component_gram(f, k)
            for i in range(k):
                for j in range(k):
                    gram[offset + i][offset + j] = g[i][j]
            blocks.append(tuple(range(offset, offset + k)))
            offset += k
        self.component_indices = tuple(blocks)
        self.gram = tuple(tuple(r) for r in gram)
        self.cartan_matrix = tuple(
            tuple(int(2 * gram[i][j] / gram[i][i]) for j in range(n)) for i in range(n))
        # simple root alpha_j in fundamental coordinates: m_i = <alpha_j, alpha_i^vee>
        self.simple_roots = tuple(
            tuple(self.cartan_matrix[i][j] for i in range(n)) for j in range(n))
        self._cartan_inv = exact.inverse(self.cartan_matrix)
        self._fund_gram = self._fundamental_gram()
        self._elements: dict[tuple[int, ...], WeylElement] = {}
        identity = self._make_element(())
        self._identity = identity

    # -- naming -------------------------------------------------------------
    @property
    def name(self) -> str:
        return "x".join(f"{f}{n}" for f, n in self.components)

    @property
    def family(self) -> str:
        return self.components[0][0] if len(self.components) == 1 else self.name

    def __repr__(self):
        return f"RootSystem({self.name})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    # -- coordinates and pairing -------------------------------------------
    def _fundamental_gram(self):
        n = self.rank
        root_coords = [self.to_root_coords(tuple(int(i == j) for j in range(n))) for i in range(n)]
        return tuple(tuple(self._inner_root(u, v) for v in root_coords) for u in root_coords)

    def _inner_root(self, u, v):
        return sum(u[i] * self.gram[i][j] * v[j]
                   for i in range(self.rank) if u[i] for j in range(self.rank) if v[j])

    def to_root_coords(self, v: Sequence) -> tuple:
        """Simple-root coordinates of a dual vector (ints when integral)."""
        # fundamental coords m = C c  (C = cartan_matrix with columns = alpha_j)
        c = exact.mat_vec(self._cartan_inv, v)
        if all(x.denominator == 1 for x in c):
            return tuple(int(x) for x in c)
        return c

    def from_root_coords(self, c: Sequence) -> tuple:
        return exact.mat_vec(self.cartan_matrix, c)

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        """The invariant scalar product of two dual vectors (fundamental coords)."""
        g = self._fund_gram
        n = self.rank
        return sum((u[i] * g[i][j] * v[j] for i in range(n) if u[i] for j in range(n) if v[j]),
                   Fraction(0))

    def evaluate(self, functional: Sequence, x: Sequence):
        """``functional(x)`` for a dual vector and an apartment point."""
        return exact.dot(self.to_root_coords(functional), x)

    def height(self, v: Sequence):
        return sum(self.to_root_coords(v))

    # -- roots ---------------------------------------------------------------
    @cached_property
    def _root_data(self):
        found = set(self.simple_roots)
        queue = deque(self.simple_roots)
        while queue:
            r = queue.popleft()
            for i in range(self.rank):
                img = self.reflect(r, i)
                if img not in found:
                    found.add(img)
                    queue.append(img)
        coords = {r: self.to_root_coords(r) for r in found}
        positive = [r for r in found if all(c >= 0 for c in coords[r])]
        positive.sort(key=lambda r: (sum(coords[r]), tuple(-c for c in coords[r])))
        negative = [tuple(-c for c in r) for r in positive]
        return tuple(positive), tuple(negative)

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return self._root_data[0]

    @cached_property
    def all_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots by height (ties: larger simple-root coordinates first),
        followed by their negatives in the same order."""
        pos, neg = self._root_data
        return pos + neg

    @cached_property
    def root_index(self) -> dict[tuple[int, ...], int]:
        return {r: i for i, r in enumerate(self.all_roots)}

    def is_root(self, v: Sequence) -> bool:
        return tuple(v) in self.root_index

    def reflect(self, v: Sequence, i: int) -> tuple:
        """Simple reflection ``s_i`` on a dual vector in fundamental coords."""
        m = v[i]
        if not m:
            return tuple(v)
        a = self.simple_roots[i]
        return tuple(x - m * y for x, y in zip(v, a))

    def reflect_point(self, x: Sequence, i: int) -> tuple:
        """Simple reflection ``s_i`` on an apartment point."""
        xi = x[i]
        if not xi:
            return tuple(x)
        row = self.cartan_matrix[i]
        return tuple(xj - row[j] * xi for j, xj in enumerate(x))

    # -- Weyl group ------------------------------------------------------------
    @property
    def weyl_order(self) -> int:
        return weyl_order(self.components)

    @property
    def identity(self) -> WeylElement:
        return self._identity

    def _make_element(self, word: tuple[int, ...]) -> WeylElement:
        cached = self._elements.get(word)
        if cached is not None:
            return cached
        n = self.rank
        cols = []
        for j in range(n):
            v = tuple(int(i == j) for i in range(n))
            for i in reversed(word):
                v = self.reflect(v, i)
            cols.append(v)
        matrix = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        pcols = []
        for j in range(n):
            x = tuple(int(i == j) for i in range(n))
            for i in reversed(word):
                x = self.reflect_point(x, i)
            pcols.append(x)
        pmatrix = tuple(tuple(pcols[j][i] for j in range(n)) for i in range(n))
        el = WeylElement(word, matrix, pmatrix)
        self._elements[word] = el
        return el

    def canonical_word(self, word: Sequence[int]) -> tuple[int, ...]:
        """Lexicographically least reduced word of the element ``s_{w0} s_{w1} ...``.

        The first letter of such a word is the smallest left descent; left
        descents of ``w`` are read off the image of a regular dominant point.
        """
        q = tuple([1] * self.rank)
        for i in reversed(word):
            q = self.reflect_point(q, i)
        out = []
        while True:
            i = next((k for k, qk in enumerate(q) if qk < 0), None)
            if i is None:
                return tuple(out)
            out.append(i)
            q = self.reflect_point(q, i)

    def element(self, word: Sequence[int] = ()) -> WeylElement:
        """The Weyl element ``s_{word[0]} s_{word[1]} ...`` (any word accepted)."""
        for i in word:
            if not 0 <= i < self.rank:
                raise ValueError(f"simple reflection index {i} out of range")
        return self._make_element(self.canonical_word(word))

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return self.element(u.word + v.word)

    def inverse(self, u: WeylElement) -> WeylElement:
        cache = self.__dict__.setdefault("_inverse_cache", {})
        hit = cache.get(u.word)
        if hit is None:
            hit = cache[u.word] = self.element(tuple(reversed(u.word)))
        return hit

    def reflection_in(self, root: Sequence[int]) -> WeylElement:
        """The reflection ``s_a`` for an arbitrary root ``a``."""
        root = tuple(root)
        if not self.is_root(root):
            raise ValueError(f"{root} is not a root")
        word: list[int] = []
        r = root
        if any(c < 0 for c in self.to_root_coords(r)):
            r = tuple(-c for c in r)
        # bring r to a simple root: w^{-1} r = alpha_i, then s_r = w s_i w^{-1}
        while r not in self.simple_roots:
            i = next(k for k in range(self.rank)
                     if r[k] > 0 and r != self.simple_roots[k])
            r = self.reflect(r, i)
            word.append(i)
        i = self.simple_roots.index(r)
        w = tuple(word)
        return self.element(w + (i,) + tuple(reversed(w)))

    def base_for(self, element: WeylElement) -> Base:
        roots = tuple(element.act(a) for a in self.simple_roots)
        return Base(element, roots)

    @property
    def standard_base(self) -> Base:
        return self.base_for(self.identity)

    def base_from_word(self, word: Sequence[int]) -> Base:
        return self.base_for(self.element(word))

    @cached_property
    def _dynkin_components(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        seen: set[int] = set()
        comps = []
        for s in range(n):
            if s in seen:
                continue
            stack, comp = [s], []
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j not in seen and self.gram[i][j] != 0:
                        seen.add(j)
                        stack.append(j)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @property
    def dynkin_components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the Dynkin diagram, read off the Cartan matrix."""
        return self._dynkin_components

    def __getstate__(self):
        return {"components": self.components}

    def __setstate__(self, state):
        self.__init__(state["components"])


def build_root_system(family: str, rank: int | None = None) -> RootSystem:
    """Root system of type ``family``+``rank``; ``family`` may also carry the
    whole type, e.g. ``build_root_system("A1xA1")``."""
    if rank is None:
        comps = parse_cartan_type(family)
    else:
        if not isinstance(family, str) or len(family.strip()) != 1:
            comps = parse_cartan_type(family)
            if sum(n for _, n in comps) != rank:
                raise ClassificationError(f"type {family} does not have rank {rank}")
        else:
            comps = ((family.strip().upper(), rank),)
    return RootSystem(comps)


def enumerate_bases(rs: RootSystem, guard: int | None = None) -> Iterator[Base]:
    """Yield every base once, in shortlex order of the witness word.

    The standard base comes first.  Raises :class:`SizeLimitError` before
    yielding anything if ``|W|`` exceeds the guard.
    """
    limit = resolve_guard(guard)
    order = rs.weyl_order
    if order > limit:
        raise SizeLimitError(order, limit)
    return iter(_all_bases(rs))


def _all_bases(rs: RootSystem) -> tuple[Base, ...]:
    cached = rs.__dict__.get("_bases")
    if cached is not None:
        return cached
    # BFS over right multiplication: discovery order is shortlex, so the
    # first word to reach an element is its lexicographically least reduced word.
    n = rs.rank
    # Elements are told apart by their image of a regular point (free orbit).
    regular = tuple([1] * n)
    kicked = [rs.reflect_point(regular, i) for i in range(n)]
    seen = {regular}
    frontier = [rs.identity]
    order = [()]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n):
                p = w.act_point(kicked[i])
                if p not in seen:
                    seen.add(p)
                    order.append(w.word + (i,))
                    nxt.append(rs._make_element(w.word + (i,)))
        frontier = nxt
    bases = tuple(rs.base_for(rs._make_element(w)) for w in order)
    rs.__dict__["_bases"] = bases
    return bases


def base_index(rs: RootSystem, guard: int | None = None) -> dict[Base, int]:
    cached = rs.__dict__.get("_base_index")
    if cached is None:
        cached = {b: i for i, b in enumerate(enumerate_bases(rs, guard))}
        rs.__dict__["_base_index"] = cached
    return cached


def dominant_conjugate(rs: RootSystem, v: Sequence) -> tuple[tuple[int, ...], tuple]:
    """``(word, u)`` with ``u = w^{-1} v`` dominant, ``w`` the shortest such element
    and ``word`` its lexicographically least reduced word."""
    if len(v) != rs.rank:
        raise ValueError(f"point has {len(v)} coordinates, expected {rs.rank}")
    u = tuple(c if isinstance(c, int) else exact.as_fraction(c) for c in v)
    word = []
    while True:
        i = next((k for k, uk in enumerate(u) if uk < 0), None)
        if i is None:
            return tuple(word), u
        u = rs.reflect_point(u, i)
        word.append(i)


def dominant_base_for(rs: RootSystem, v: Sequence) -> Base:
    """A base whose closed chamber contains ``v``.

    The witness is the shortest Weyl element ``w`` with ``w^{-1} v``
    dominant (unique: the minimal coset representative), written as its
    lexicographically least reduced word.
    """
    word, _ = dominant_conjugate(rs, v)
    return rs.base_for(rs.element(word))


def pairing(rs: RootSystem, x, y) -> Fraction:
    """Invariant scalar product; accepts :class:`Weight` or coordinate tuples
    (fundamental-weight basis)."""
    xv = x.coords if isinstance(x, Weight) else tuple(x)
    yv = y.coords if isinstance(y, Weight) else tuple(y)
    if len(xv) != rs.rank or len(yv) != rs.rank:
        raise ValueError(f"dimension mismatch: expected {rs.rank} coordinates")
    return rs.inner(xv, yv)


def is_simple_system(rs: RootSystem, roots: Sequence[Sequence[int]]) -> bool:
    """Brute-force check that every root is a non-negative or non-positive
    integer combination of ``roots``."""
    mat = [rs.to_root_coords(r) for r in roots]
    cols = [[mat[k][i] for k in range(len(mat))] for i in range(rs.rank)]
    if exact.rank(mat) != rs.rank:
        return False
    for r in rs.all_roots:
        c = exact.solve(cols, rs.to_root_coords(r))
        if c is None or any(x.denominator != 1 for x in c):
            return False
        if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            return False
    return True
