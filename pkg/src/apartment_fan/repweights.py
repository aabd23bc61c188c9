"""Weights of irreducible representations, supports and admissible subsets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .rootsys import Base, RootSystem, Weight


class WeightError(ValueError):
    """Highest weight is not dominant/integral, or a vector is not a weight."""


class FaithfulnessError(ValueError):
    """Highest weight is perpendicular to a whole irreducible component."""


def _as_vector(rs: RootSystem, lam) -> tuple[int, ...]:
    coords = lam.coords if isinstance(lam, Weight) else tuple(lam)
    if len(coords) != rs.rank:
        raise WeightError(f"weight has {len(coords)} coordinates, expected {rs.rank}")
    if any(getattr(c, "denominator", 1) != 1 for c in coords):
        raise WeightError(f"weight {tuple(map(str, coords))} is not integral")
    return tuple(int(c) for c in coords)


def dominant_weights_below(rs: RootSystem, lambda0: Sequence[int]) -> list[tuple[int, ...]]:
    """Dominant ``mu`` with ``lambda0 - mu`` a non-negative integer combination
    of simple roots.

    Dominant weights below ``lambda0`` are reachable from it through dominant
    weights by subtracting one positive root at a time, so a closure over
    positive roots finds all of them.
    """
    lambda0 = tuple(lambda0)
    found = {lambda0}
    queue = deque([lambda0])
    while queue:
        mu = queue.popleft()
        for beta in rs.positive_roots:
            nu = tuple(a - b for a, b in zip(mu, beta))
            if nu not in found and all(c >= 0 for c in nu):
                found.add(nu)
                queue.append(nu)
    return sorted(found, key=lambda m: (rs.height(tuple(a - b for a, b in zip(lambda0, m))), m))


def weyl_orbit(rs: RootSystem, mu: Sequence[int]) -> set[tuple[int, ...]]:
    mu = tuple(mu)
    orbit = {mu}
    queue = deque([mu])
    while queue:
        v = queue.popleft()
        for i in range(rs.rank):
            img = rs.reflect(v, i)
            if img not in orbit:
                orbit.add(img)
                queue.append(img)
    return orbit


def weight_set(rs: RootSystem, lambda0) -> frozenset[tuple[int, ...]]:
    """All weights of the irreducible representation with highest weight ``lambda0``.

    Saturation: every W-image of a dominant weight below ``lambda0``.
    Weights are integer tuples in fundamental-weight coordinates.
    """
    lam = _as_vector(rs, lambda0)
    if any(c < 0 for c in lam):
        raise WeightError(f"highest weight {lam} is not dominant")
    out: set[tuple[int, ...]] = set()
    for mu in dominant_weights_below(rs, lam):
        out |= weyl_orbit(rs, mu)
    return frozenset(out)


@dataclass(frozen=True)
class SupportSet:
    base: Base
    elements: frozenset[int]

    def roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.base.roots[i] for i in sorted(self.elements))


def _connected_to_top(rs: RootSystem, top, roots: Sequence, indices: Iterable[int]) -> set[int]:
    """Indices joined to ``top`` in the nonzero-pairing graph on the given roots."""
    todo = set(indices)
    reached: set[int] = set()
    frontier = [i for i in todo if rs.inner(top, roots[i]) != 0]
    reached.update(frontier)
    todo -= reached
    while frontier:
        nxt = []
        for i in frontier:
            for j in list(todo):
                if rs.inner(roots[i], roots[j]) != 0:
                    todo.discard(j)
                    reached.add(j)
                    nxt.append(j)
        frontier = nxt
    return reached


class RepData:
    """An irreducible representation, known through its weight set.

    ``lambda0`` is dominant for the standard base; ``highest_weight(base)``
    gives the highest weight with respect to any other base.  Weight
    multiplicities are never computed.
    """

    def __init__(self, rs: RootSystem, lambda0):
        self.rs = rs
        lam = _as_vector(rs, lambda0)
        if any(c < 0 for c in lam):
            raise WeightError(f"highest weight {lam} is not dominant")
        self.lambda0 = lam
        self._support_cache: dict[tuple, frozenset[int]] = {}
        self._admissible_cache: dict[Base, tuple[frozenset[int], ...]] = {}

    def __repr__(self):
        return f"RepData({self.rs.name}, lambda0={self.lambda0})"

    @cached_property
    def weights(self) -> frozenset[tuple[int, ...]]:
        return weight_set(self.rs, self.lambda0)

    @property
    def highest(self) -> Weight:
        return Weight(self.lambda0)

    def highest_weight(self, base: Base) -> tuple[int, ...]:
        return base.witness.act(self.lambda0)

    @cached_property
    def sorted_weights(self) -> tuple[tuple[int, ...], ...]:
        """Weights ordered by depth below ``lambda0``, then coordinates descending."""
        diff = self.root_difference
        return tuple(sorted(self.weights, key=lambda m: (sum(diff[m]), tuple(-c for c in m))))

    @cached_property
    def root_difference(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        """Simple-root coordinates (standard base) of ``lambda0 - mu`` per weight."""
        rs = self.rs
        out = {}
        for mu in self.weights:
            c = rs.to_root_coords(tuple(a - b for a, b in zip(self.lambda0, mu)))
            if not all(isinstance(x, int) and x >= 0 for x in c):
                raise AssertionError(f"{mu} is not below the highest weight")
            out[mu] = c
        return out

    @cached_property
    def depth(self) -> int:
        """Height of ``lambda0`` minus the lowest weight."""
        return max(sum(c) for c in self.root_difference.values())

    def coefficients(self, base: Base, lam: Sequence[int]) -> tuple[int, ...]:
        """``n_a`` with ``lambda0(base) - lam = sum n_a a`` over the roots of ``base``."""
        lam = tuple(lam)
        if lam not in self.weights:
            raise WeightError(f"{lam} is not a weight of {self}")
        inv = self.rs.inverse(base.witness)
        return self.root_difference[inv.act(lam)]

    def support_indices(self, base: Base, lam: Sequence[int]) -> frozenset[int]:
        key = (base, tuple(lam))
        hit = self._support_cache.get(key)
        if hit is None:
            n = self.coefficients(base, lam)
            hit = frozenset(i for i, c in enumerate(n) if c > 0)
            self._support_cache[key] = hit  # idempotent fill
        return hit

    def support_indices_std(self, mu: Sequence[int]) -> frozenset[int]:
        """Support of ``lambda0 - mu`` for the standard base."""
        return frozenset(i for i, c in enumerate(self.root_difference[tuple(mu)]) if c > 0)


def support(rep: RepData, base: Base, lam) -> SupportSet:
    """``[lambda0(base) - lam]``: the simple roots of ``base`` with positive coefficient."""
    return SupportSet(base, rep.support_indices(base, _as_vector(rep.rs, lam)))


def _check_subset(base: Base, Y: Iterable[int]) -> frozenset[int]:
    Y = frozenset(Y)
    if any(not (isinstance(i, int) and 0 <= i < len(base.roots)) for i in Y):
        raise ValueError(f"{sorted(Y)} is not a subset of the base indices")
    return Y


def is_admissible(rep: RepData, base: Base, Y: Iterable[int]) -> bool:
    """Whether ``Y`` together with ``lambda0(base)`` is connected under nonzero pairing.

    ``Y`` is a set of indices into ``base.roots``.  The empty set is admissible.
    """
    Y = _check_subset(base, Y)
    if not Y:
        return True
    top = rep.highest_weight(base)
    return _connected_to_top(rep.rs, top, base.roots, Y) == set(Y)


def admissible_subsets(rep: RepData, base: Base) -> tuple[frozenset[int], ...]:
    """All admissible subsets of ``base``, ordered by size then lexicographically."""
    hit = rep._admissible_cache.get(base)
    if hit is not None:
        return hit
    n = len(base.roots)
    out = []
    for k in range(n + 1):
        for Y in combinations(range(n), k):
            if is_admissible(rep, base, Y):
                out.append(frozenset(Y))
    hit = tuple(out)
    rep._admissible_cache[base] = hit
    return hit


def maximal_admissible_subset(rep: RepData, base: Base, Z: Iterable[int]) -> frozenset[int]:
    """The largest admissible subset of ``Z``.

    Admissible subsets of ``Z`` are closed under union (connected graphs
    sharing the vertex ``lambda0(base)``), so the maximum is the set of
    elements of ``Z`` joined to ``lambda0(base)`` inside ``Z``.
    """
    Z = _check_subset(base, Z)
    if not Z:
        return frozenset()
    top = rep.highest_weight(base)
    return frozenset(_connected_to_top(rep.rs, top, base.roots, Z))


def is_faithful(rs: RootSystem, lambda0) -> bool:
    lam = lambda0.coords if isinstance(lambda0, Weight) else tuple(lambda0)
    return all(any(lam[i] != 0 for i in comp) for comp in rs.dynkin_components)


def validate_faithful(rep: RepData) -> bool:
    """True iff every Dynkin component has a simple root pairing nonzero with ``lambda0``."""
    rs = rep.rs
    return all(any(rs.inner(rep.lambda0, rs.simple_roots[i]) != 0 for i in comp)
               for comp in rs.dynkin_components)
