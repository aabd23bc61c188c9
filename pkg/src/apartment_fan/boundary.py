"""Boundary strata of the compactified apartment.

A boundary point lives in the stratum ``A_F = A / <F>`` of a face
``F = F_Y^base``.  Its coordinates are the values ``a(x)`` for ``a`` in ``Y``
(sorted by index), which is a basis of the dual of ``A_F``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import exact
from .fan import Face, Fan, _pullback, faces_equal, representative_over
from .repweights import RepData, maximal_admissible_subset
from .rootsys import Base, RootSystem, WeylElement, dominant_base_for

NEG_INFINITY = "neg_infinity"
FINITE = "finite"
POS_INFINITY = "pos_infinity"
_RANK = {NEG_INFINITY: 0, FINITE: 1, POS_INFINITY: 2}


@dataclass(frozen=True)
class ExtendedValue:
    """An element of ``{-inf} | Q | {+inf}``."""

    kind: str
    value: Fraction | None = None

    def __post_init__(self):
        if self.kind not in _RANK:
            raise ValueError(f"unknown kind {self.kind!r}")
        if (self.kind == FINITE) != (self.value is not None):
            raise ValueError("a finite value carries exactly one rational")

    @classmethod
    def finite(cls, value) -> "ExtendedValue":
        return cls(FINITE, exact.as_fraction(value))

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    def _key(self):
        return (_RANK[self.kind], self.value if self.kind == FINITE else 0)

    def __lt__(self, other):
        return self._key() < other._key()

    def __le__(self, other):
        return self._key() <= other._key()

    def __gt__(self, other):
        return self._key() > other._key()

    def __ge__(self, other):
        return self._key() >= other._key()

    def __str__(self):
        if self.kind == FINITE:
            return exact.format_rational(self.value)
        return "-inf" if self.kind == NEG_INFINITY else "+inf"


NEG_INF = ExtendedValue(NEG_INFINITY)
POS_INF = ExtendedValue(POS_INFINITY)


@dataclass(frozen=True)
class Stratum:
    face: Face

    @property
    def dual_basis(self) -> tuple[tuple[int, ...], ...]:
        return self.face.roots

    @property
    def dim(self) -> int:
        return len(self.face.Y)


@dataclass(frozen=True)
class BoundaryPoint:
    face: Face
    coords: tuple[Fraction, ...]

    def __init__(self, face: Face, coords: Iterable):
        coords = tuple(exact.as_fraction(c) for c in coords)
        if len(coords) != len(face.Y):
            raise ValueError(f"stratum has dimension {len(face.Y)}, got {len(coords)} coordinates")
        object.__setattr__(self, "face", face)
        object.__setattr__(self, "coords", coords)

    @property
    def stratum(self) -> Stratum:
        return Stratum(self.face)

    @property
    def is_interior(self) -> bool:
        return len(self.face.Y) == len(self.face.base.roots)

    def value(self, functional: Sequence) -> Fraction:
        """Evaluate a functional from ``<Y>`` on this point."""
        c = exact.coefficients_in_basis(tuple(functional), self.face.roots)
        if c is None:
            raise ValueError(f"{tuple(functional)} is not in the span of {self.face}")
        return sum((ck * xk for ck, xk in zip(c, self.coords)), Fraction(0))

    @classmethod
    def from_apartment(cls, rs: RootSystem, x: Sequence) -> "BoundaryPoint":
        """An ordinary point of ``A``, as a point of the stratum ``A`` itself."""
        if len(x) != rs.rank:
            raise ValueError(f"point has {len(x)} coordinates, expected {rs.rank}")
        return cls(Face(rs.standard_base, range(rs.rank)), x)


def express_on(p: BoundaryPoint, F: Face) -> BoundaryPoint:
    """The same point written over another name ``F`` of the same span."""
    return BoundaryPoint(F, [p.value(r) for r in F.roots])


def points_equal(rep: RepData, p: BoundaryPoint, q: BoundaryPoint) -> bool:
    if not faces_equal(rep, p.face, q.face):
        return False
    return all(p.value(r) == c for r, c in zip(q.face.roots, q.coords))


def canonicalize(fan: Fan, p: BoundaryPoint) -> BoundaryPoint:
    return express_on(p, fan.canonical(p.face).representative)


@dataclass(frozen=True)
class Ray:
    """``t -> origin + t * direction`` for ``t >= 0``."""

    origin: tuple[Fraction, ...]
    direction: tuple[Fraction, ...]

    def __init__(self, origin: Sequence, direction: Sequence):
        o = tuple(exact.as_fraction(c) for c in origin)
        d = tuple(exact.as_fraction(c) for c in direction)
        if len(o) != len(d):
            raise ValueError("origin and direction differ in dimension")
        if not any(d):
            raise ValueError("ray direction must be nonzero")
        object.__setattr__(self, "origin", o)
        object.__setattr__(self, "direction", d)

    def at(self, t) -> tuple[Fraction, ...]:
        t = exact.as_fraction(t)
        return tuple(o + t * d for o, d in zip(self.origin, self.direction))


def ray_limit(rep: RepData, ray: Ray) -> BoundaryPoint:
    """Limit of the ray in the compactified apartment.

    Over the dominant base of the direction, simple roots vanishing on the
    direction form ``Z``; the limit lies in the stratum of ``F_Y`` with ``Y``
    the maximal admissible subset of ``Z``, at coordinates ``a(origin)``.
    """
    if not any(ray.direction):
        raise ValueError("ray direction must be nonzero")
    base = dominant_base_for(rep.rs, ray.direction)
    v = _pullback(rep, base, ray.direction)
    Z = [i for i, vi in enumerate(v) if vi == 0]
    Y = maximal_admissible_subset(rep, base, Z)
    o = _pullback(rep, base, ray.origin)
    return BoundaryPoint(Face(base, Y), [o[i] for i in sorted(Y)])


def _root_vector(rs: RootSystem, a) -> tuple[int, ...]:
    if isinstance(a, int):
        return rs.all_roots[a]
    a = tuple(a)
    if not rs.is_root(a):
        raise ValueError(f"{a} is not a root")
    return a


def _has_weight_string(rep: RepData, Y: frozenset[int], b: tuple[int, ...]) -> bool:
    """Some weight with standard support inside ``Y`` has ``mu + l b`` a weight, ``l >= 1``."""
    cache = rep.__dict__.setdefault("_string_cache", {})
    key = (Y, b)
    hit = cache.get(key)
    if hit is None:
        weights = rep.weights
        hit = False
        for mu in weights:
            if not rep.support_indices_std(mu) <= Y:
                continue
            nu = mu
            for _ in range(rep.depth):
                nu = tuple(x + y for x, y in zip(nu, b))
                if nu in weights:
                    hit = True
                    break
            if hit:
                break
        cache[key] = hit
    return hit


def weight_string_exists(rep: RepData, base: Base, Y: Iterable[int], a, bound: int | None = None) -> bool:
    """Whether some weight ``lam`` with ``[lambda0(base) - lam]`` inside ``Y``
    has ``lam + l a`` a weight for an integer ``1 <= l <= bound``.

    Literal search over the weights of ``base``; ``bound`` defaults to the
    depth of the weight diagram.
    """
    Y = frozenset(Y)
    a = _root_vector(rep.rs, a)
    bound = rep.depth if bound is None else bound
    weights = rep.weights
    for lam in weights:
        if not rep.support_indices(base, lam) <= Y:
            continue
        nu = lam
        for _ in range(bound):
            nu = tuple(x + y for x, y in zip(nu, a))
            if nu in weights:
                return True
    return False


def classify_f(rep: RepData, x: BoundaryPoint, a) -> ExtendedValue:
    """``f_x(a)``: finite ``-a(x)`` for ``a`` in ``<Y>``, ``+inf`` when a weight
    string leaves the weights supported in ``Y`` along ``a``, else ``-inf``."""
    rs = rep.rs
    a = _root_vector(rs, a)
    F = x.face
    c = exact.coefficients_in_basis(a, F.roots)
    if c is not None:
        return ExtendedValue.finite(-sum((ck * xk for ck, xk in zip(c, x.coords)), Fraction(0)))
    # pull back to the standard base: weights and supports move with w^{-1}
    b = rs.inverse(F.base.witness).act(a)
    return POS_INF if _has_weight_string(rep, F.Y, b) else NEG_INF


def classify_f_set(rep: RepData, omega: Iterable[BoundaryPoint]) -> dict[int, ExtendedValue]:
    """``f_Omega`` for finite ``Omega``: the pointwise maximum of ``f_x``."""
    omega = list(omega)
    if not omega:
        raise ValueError("Omega must be non-empty")
    out: dict[int, ExtendedValue] = {}
    for i in range(len(rep.rs.all_roots)):
        out[i] = max(classify_f(rep, x, i) for x in omega)
    return out


FULL = "full"
TRIVIAL = "trivial"


@dataclass(frozen=True)
class RootGroupShadow:
    """Whether the filtered root group at a point is full, trivial, or at a finite level."""

    kind: str
    value: Fraction | None = None

    def __str__(self):
        return f"finite({exact.format_rational(self.value)})" if self.kind == FINITE else self.kind


def stabilizer_shadow(rep: RepData, x: BoundaryPoint) -> dict[int, RootGroupShadow]:
    out = {}
    for i in range(len(rep.rs.all_roots)):
        f = classify_f(rep, x, i)
        if f.kind == NEG_INFINITY:
            out[i] = RootGroupShadow(FULL)
        elif f.kind == POS_INFINITY:
            out[i] = RootGroupShadow(TRIVIAL)
        else:
            out[i] = RootGroupShadow(FINITE, f.value)
    n_pos = len(rep.rs.positive_roots)
    for i in range(n_pos):
        if (out[i].kind == FINITE) != (out[i + n_pos].kind == FINITE):
            raise AssertionError(f"finite/infinite mismatch between roots {i} and {-i}")
    return out


def stratum_parabolic_type(rep: RepData, F: Face) -> frozenset[int]:
    """Simple roots of ``F.base`` orthogonal to all of ``Y`` and to ``lambda0(F.base)``."""
    rs = rep.rs
    top = rep.highest_weight(F.base)
    roots = F.base.roots
    return frozenset(
        i for i, a in enumerate(roots)
        if rs.inner(top, a) == 0 and all(rs.inner(a, roots[j]) == 0 for j in F.Y))


@dataclass(frozen=True)
class AffineSymmetry:
    """``x -> linear(x) + translation`` on the apartment."""

    linear: WeylElement
    translation: tuple[Fraction, ...]

    def __init__(self, linear: WeylElement, translation: Sequence):
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "translation", tuple(exact.as_fraction(c) for c in translation))

    def act_point(self, x: Sequence) -> tuple[Fraction, ...]:
        wx = self.linear.act_point(x)
        return tuple(a + b for a, b in zip(wx, self.translation))

    def act_ray(self, ray: Ray) -> Ray:
        return Ray(self.act_point(ray.origin), self.linear.act_point(ray.direction))


def apply_symmetry(rep: RepData, g: AffineSymmetry, p: BoundaryPoint) -> BoundaryPoint:
    """Image of a boundary point: the stratum of ``F`` goes to that of ``w(F)``
    and each coordinate shifts by the translation's value on ``w(a)``."""
    rs = rep.rs
    w = g.linear
    base = rs.base_for(rs.multiply(w, p.face.base.witness))
    F = Face(base, p.face.Y)
    shifted = [c + rs.evaluate(r, g.translation) for c, r in zip(p.coords, F.roots)]
    return BoundaryPoint(F, shifted)


def representative_point(rep: RepData, p: BoundaryPoint, basep: Base) -> BoundaryPoint | None:
    G = representative_over(rep, p.face, basep)
    return None if G is None else express_on(p, G)
