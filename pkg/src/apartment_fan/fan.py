"""The face decomposition of the apartment induced by a representation.

A face is named by a pair ``(base, Y)`` with ``Y`` an admissible set of
indices into ``base.roots``.  Two names denote the same subset of the
apartment iff their Y-spans agree and the highest weights of the two bases
differ by an element of that span; enumeration buckets names with exactly
this predicate.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import lcm
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import exact
from .repweights import (FaithfulnessError, RepData, WeightError, admissible_subsets,
                         is_admissible, is_faithful, maximal_admissible_subset)
from .rootsys import Base, RootSystem, Weight, dominant_conjugate, enumerate_bases


@dataclass(frozen=True)
class Face:
    """The face ``F_Y^base``; ``Y`` holds indices into ``base.roots``."""

    base: Base
    Y: frozenset[int]

    def __init__(self, base: Base, Y: Iterable[int]):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "Y", frozenset(Y))

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.Y))

    @property
    def roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.base.roots[i] for i in self.indices)

    def sort_key(self):
        return (len(self.base.word), self.base.word, self.indices)

    def __repr__(self):
        return f"Face(base={list(self.base.word)}, Y={list(self.indices)})"


@dataclass(frozen=True)
class ChamberFace:
    """``E_Z``: ``Z`` vanishes, the rest of ``base`` is strictly positive."""

    base: Base
    Z: frozenset[int]

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.Z))


@dataclass(frozen=True, eq=False)
class CanonicalFaceId:
    """One class of equal face names, with its deterministic representative."""

    representative: Face
    id: str
    index: int
    members: tuple[Face, ...] = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, CanonicalFaceId) and self.id == other.id

    def __hash__(self):
        return hash(self.id)

    @property
    def span_dim(self) -> int:
        return len(self.representative.Y)

    @property
    def stratum_dim(self) -> int:
        # A_F = A / <F>, whose dual is <Y>; Y is linearly independent
        return len(self.representative.Y)


def make_face(rep: RepData, base: Base, Y: Iterable[int]) -> Face:
    Y = frozenset(Y)
    if not is_admissible(rep, base, Y):
        raise ValueError(f"Y={sorted(Y)} is not admissible for base {list(base.word)}")
    return Face(base, Y)


def faces_equal(rep: RepData, F1: Face, F2: Face) -> bool:
    """Equal iff the Y-spans agree and the highest weights differ by a vector inside that span."""
    if len(F1.Y) != len(F2.Y):
        return False
    r1 = F1.roots
    if not exact.same_span(r1, F2.roots):
        return False
    d = tuple(a - b for a, b in zip(rep.highest_weight(F1.base), rep.highest_weight(F2.base)))
    return exact.in_span(d, r1)


def _pullback(rep: RepData, base: Base, x: Sequence) -> tuple:
    """``w^{-1} x`` for ``base = w(standard)``: its coordinates are the values
    of ``base.roots`` at ``x``."""
    return rep.rs.inverse(base.witness).act_point(x)


def _escaping(rep: RepData, Y: frozenset[int]) -> tuple[tuple[int, ...], ...]:
    """Coefficient vectors of ``lambda0 - mu`` (standard base) whose support
    is not inside ``Y``, deduplicated."""
    cache = rep.__dict__.setdefault("_escaping_cache", {})
    hit = cache.get(Y)
    if hit is None:
        vecs = {c for c in rep.root_difference.values()
                if any(ci > 0 and i not in Y for i, ci in enumerate(c))}
        hit = cache[Y] = tuple(sorted(vecs))
    return hit


def face_membership(rep: RepData, F: Face, x: Sequence) -> bool:
    """Whether ``x`` lies in ``F_Y^base``.

    With ``base = w(standard)``, ``(lambda0(base) - lambda)(x)`` equals
    ``(lambda0 - w^{-1} lambda)(w^{-1} x)``, and ``w^{-1}`` permutes the
    weights, so the test runs over standard-base coefficient vectors.
    """
    u = _pullback(rep, F.base, [exact.as_fraction(c) for c in x])
    if any(u[i] != 0 for i in F.Y):
        return False
    for c in _escaping(rep, F.Y):
        if exact.dot(c, u) <= 0:
            return False
    return True


def face_of_point(rep: RepData, x: Sequence) -> Face:
    """The face containing ``x``: dominant base for ``x``, then the maximal
    admissible subset of the simple roots vanishing at ``x``."""
    x = [exact.as_fraction(c) for c in x]
    # faces are cones: clearing denominators keeps the face and the arithmetic integral
    den = lcm(*(c.denominator for c in x)) if x else 1
    word, u = dominant_conjugate(rep.rs, [int(c * den) for c in x])
    base = rep.rs.base_for(rep.rs.element(word))
    Z = [i for i, ui in enumerate(u) if ui == 0]
    return Face(base, maximal_admissible_subset(rep, base, Z))


def face_witness(rep: RepData, F: Face) -> tuple[int, ...]:
    """A point of ``E_Y`` over ``F.base``, hence of ``F``."""
    u = tuple(0 if i in F.Y else 1 for i in range(rep.rs.rank))
    return F.base.witness.act_point(u)


def closure_contains(rep: RepData, F: Face, Fp: Face) -> bool:
    """Whether ``Fp`` lies in the closure of ``F``.

    Test: the support of ``lambda0(Fp.base) - lambda0(F.base)`` over
    ``Fp.base`` is inside ``Fp.Y``, and ``<F.Y>`` is inside ``<Fp.Y>``.
    """
    top = rep.highest_weight(F.base)
    if not rep.support_indices(Fp.base, top) <= Fp.Y:
        return False
    return exact.span_contains(Fp.roots, F.roots)


def _content_id(rep: RepData, F: Face) -> str:
    payload = "|".join([
        rep.rs.name,
        ",".join(map(str, rep.lambda0)),
        ",".join(map(str, F.base.word)),
        ",".join(map(str, F.indices)),
    ])
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


class Fan:
    """Canonical faces of one representation, in representative order."""

    def __init__(self, rep: RepData, faces: Sequence[CanonicalFaceId],
                 lookup: dict[tuple[Base, frozenset[int]], CanonicalFaceId]):
        self.rep = rep
        self.faces = tuple(faces)
        self._lookup = lookup

    def __iter__(self) -> Iterator[CanonicalFaceId]:
        return iter(self.faces)

    def __len__(self):
        return len(self.faces)

    def __getitem__(self, i) -> CanonicalFaceId:
        return self.faces[i]

    def canonical(self, F: Face) -> CanonicalFaceId:
        return self._lookup[(F.base, F.Y)]

    def by_id(self, face_id: str) -> CanonicalFaceId:
        for c in self.faces:
            if c.id == face_id:
                return c
        raise KeyError(face_id)

    def closure_edges(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)``, ``i != j``, with face ``j`` in the closure of face ``i``."""
        edges = []
        for a in self.faces:
            for b in self.faces:
                if a.index != b.index and closure_contains(self.rep, a.representative,
                                                           b.representative):
                    edges.append((a.index, b.index))
        return edges

    def ids(self) -> frozenset[str]:
        return frozenset(c.id for c in self.faces)


def _base_candidates(rep: RepData, base: Base):
    out = []
    for Y in admissible_subsets(rep, base):
        F = Face(base, Y)
        out.append((F, exact.rref(F.roots)))
    return out


def enumerate_faces(rep: RepData, guard: int | None = None, n_jobs: int = 1) -> Fan:
    """Bucket every ``(base, admissible Y)`` into equality classes.

    The representative of a class is its least member by (witness length,
    witness word, sorted Y indices).  ``n_jobs`` threads prepare the per-base
    candidates; the result does not depend on it.
    """
    cached = rep.__dict__.get("_fan")
    bases = list(enumerate_bases(rep.rs, guard))
    if cached is not None:
        return cached
    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            per_base = list(pool.map(lambda b: _base_candidates(rep, b), bases))
    else:
        per_base = [_base_candidates(rep, b) for b in bases]
    candidates = sorted((c for chunk in per_base for c in chunk), key=lambda c: c[0].sort_key())

    # span equality is necessary for face equality; compare pairwise within a span bucket
    buckets: dict[tuple, list[list[Face]]] = {}
    classes: list[list[Face]] = []
    for F, key in candidates:
        groups = buckets.setdefault(key, [])
        for g in groups:
            if faces_equal(rep, g[0], F):
                g.append(F)
                break
        else:
            g = [F]
            groups.append(g)
            classes.append(g)

    faces = []
    lookup = {}
    for i, members in enumerate(classes):
        c = CanonicalFaceId(members[0], _content_id(rep, members[0]), i, tuple(members))
        faces.append(c)
        for F in members:
            lookup[(F.base, F.Y)] = c
    fan = Fan(rep, faces, lookup)
    rep.__dict__["_fan"] = fan
    return fan


def canonical_face(rep: RepData, F: Face, guard: int | None = None) -> CanonicalFaceId:
    return enumerate_faces(rep, guard).canonical(F)


def representative_over(rep: RepData, F: Face, basep: Base) -> Face | None:
    """The unique ``Face(basep, Y')`` equal to ``F``, if any."""
    for Yp in admissible_subsets(rep, basep):
        G = Face(basep, Yp)
        if faces_equal(rep, F, G):
            return G
    return None


def chamber_intersection(rep: RepData, F: Face, basep: Base) -> list[ChamberFace]:
    """Chamber faces ``E_Z`` of ``basep`` inside ``F``.

    These are the ``Z`` whose maximal admissible subset is the representative
    ``Y'`` of ``F`` over ``basep``; the list is empty iff ``F`` has no
    representative over ``basep``.  Ordered by size of ``Z``, then lexicographically.
    """
    G = representative_over(rep, F, basep)
    if G is None:
        return []
    n = rep.rs.rank
    out = []
    for k in range(n + 1):
        for Z in combinations(range(n), k):
            if maximal_admissible_subset(rep, basep, Z) == G.Y:
                out.append(ChamberFace(basep, frozenset(Z)))
    return out


def chamber_face_witness(rs: RootSystem, E: ChamberFace) -> tuple[int, ...]:
    """A point of ``E_Z``; equal chamber faces give the same point."""
    u = tuple(0 if i in E.Z else 1 for i in range(rs.rank))
    return E.base.witness.act_point(u)


def chamber_faces(rs: RootSystem, guard: int | None = None) -> list[tuple[int, ...]]:
    """One witness point per face of the Weyl chamber complex."""
    pts = set()
    for base in enumerate_bases(rs, guard):
        for k in range(rs.rank + 1):
            for Z in combinations(range(rs.rank), k):
                pts.add(chamber_face_witness(rs, ChamberFace(base, frozenset(Z))))
    return sorted(pts)


def point_set_signature(rep: RepData, guard: int | None = None) -> frozenset[frozenset[tuple]]:
    """The decomposition as sets of chamber faces, independent of naming.

    Every chamber face lies inside exactly one face, so two representations
    decompose the apartment identically iff their signatures agree.
    """
    fan = enumerate_faces(rep, guard)
    pts = chamber_faces(rep.rs, guard)
    mat = membership_matrix(rep, [c.representative for c in fan], pts)
    return frozenset(frozenset(pts[i] for i in np.flatnonzero(mat[:, j]))
                     for j in range(len(fan)))


def _check_dominant_faithful(rs: RootSystem, lam) -> tuple[int, ...]:
    coords = lam.coords if isinstance(lam, Weight) else tuple(lam)
    if len(coords) != rs.rank:
        raise WeightError(f"weight has {len(coords)} coordinates, expected {rs.rank}")
    if any(getattr(c, "denominator", 1) != 1 for c in coords) or any(c < 0 for c in coords):
        raise WeightError(f"{tuple(map(str, coords))} is not a dominant integral weight")
    v = tuple(int(c) for c in coords)
    if not is_faithful(rs, v):
        raise FaithfulnessError(f"highest weight {v} is perpendicular to a whole "
                                "irreducible component")
    return v


def support_pattern(rs: RootSystem, lam) -> frozenset[int]:
    """``{i : (lam, alpha_i) > 0}`` for a dominant weight."""
    v = lam.coords if isinstance(lam, Weight) else tuple(lam)
    return frozenset(i for i in range(rs.rank) if rs.inner(v, rs.simple_roots[i]) > 0)


def same_compactification(rs: RootSystem, lam, mu) -> bool:
    """Whether two faithful highest weights lie in the same face of the dual
    Weyl chamber, i.e. pair positively with the same simple roots."""
    a = _check_dominant_faithful(rs, lam)
    b = _check_dominant_faithful(rs, mu)
    return support_pattern(rs, a) == support_pattern(rs, b)


@dataclass(frozen=True)
class SupportPattern:
    indices: frozenset[int]
    witness: Weight


def compactification_family(rs: RootSystem) -> list[SupportPattern]:
    """Subsets of the simple roots meeting every Dynkin component, each with
    the witness weight summing the matching fundamental weights."""
    out = []
    n = rs.rank
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            if all(any(i in S for i in comp) for comp in rs.dynkin_components):
                out.append(SupportPattern(frozenset(S),
                                          Weight(tuple(int(i in S) for i in range(n)))))
    return out


# -- batched exact membership ---------------------------------------------------------

def _integer_points(points: Sequence[Sequence]) -> np.ndarray:
    """Scale each point by the positive lcm of its denominators.

    Faces are open cones, so positive rescaling preserves membership.
    """
    rows = []
    for p in points:
        fr = [exact.as_fraction(c) for c in p]
        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        rows.append([int(c * den) for c in fr])
    arr = np.array(rows, dtype=object)
    if arr.size and max(abs(int(v)) for v in arr.ravel()) < 2**20:
        return arr.astype(np.int64)
    return arr


def _face_system(rep: RepData, F: Face):
    """Integer matrices (equalities, strict inequalities) on apartment points."""
    rs = rep.rs
    inv = rs.inverse(F.base.witness)
    P = np.array(inv.point_matrix, dtype=np.int64)  # u = P x
    eq = P[sorted(F.Y)] if F.Y else np.zeros((0, rs.rank), dtype=np.int64)
    esc = _escaping(rep, F.Y)
    C = np.array(esc, dtype=np.int64).reshape(len(esc), rs.rank)
    return eq, C @ P


def membership_matrix(rep: RepData, faces: Sequence[Face], points: Sequence[Sequence]) -> np.ndarray:
    """Boolean ``(len(points), len(faces))`` matrix of :func:`face_membership`.

    Evaluated with integer arithmetic (int64 for small data, Python ints
    otherwise), so it is exact.
    """
    X = _integer_points(points)
    if X.dtype == object:
        out = np.zeros((len(points), len(faces)), dtype=bool)
        for j, F in enumerate(faces):
            for i, p in enumerate(points):
                out[i, j] = face_membership(rep, F, p)
        return out
    out = np.empty((X.shape[0], len(faces)), dtype=bool)
    for j, F in enumerate(faces):
        eq, ineq = _face_system(rep, F)
        ok = np.ones(X.shape[0], dtype=bool)
        if eq.shape[0]:
            ok &= np.all(X @ eq.T == 0, axis=1)
        if ineq.shape[0]:
            ok &= np.all(X @ ineq.T > 0, axis=1)
        out[:, j] = ok
    return out
