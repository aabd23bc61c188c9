import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apartment_fan import exact
from apartment_fan.boundary import (NEG_INF, POS_INF, AffineSymmetry, BoundaryPoint,
                                    ExtendedValue, Ray, apply_symmetry, canonicalize, classify_f,
                                    classify_f_set, express_on, points_equal, ray_limit,
                                    stabilizer_shadow, stratum_parabolic_type,
                                    weight_string_exists)
from apartment_fan.fan import Face, enumerate_faces, faces_equal
from apartment_fan.repweights import RepData, admissible_subsets, is_admissible
from apartment_fan.rootsys import build_root_system, enumerate_bases

REPS = [("A2", (1, 0)), ("A2", (1, 1)), ("B2", (0, 1)), ("G2", (1, 0)), ("A1xA1", (1, 1)),
        ("A3", (1, 0, 0)), ("B3", (0, 1, 0)), ("C3", (1, 0, 0))]


def rep_of(name, lam):
    return RepData(build_root_system(name), lam)


@pytest.fixture(scope="module")
def a2w1():
    return rep_of("A2", (1, 0))


def neg(v):
    return tuple(-c for c in v)


def test_ray_limit_examples(a2w1):
    std = a2w1.rs.standard_base
    p = ray_limit(a2w1, Ray((3, 5), (1, 2)))
    assert p.face == Face(std, []) and p.coords == ()
    p = ray_limit(a2w1, Ray((3, 5), (0, 1)))
    assert p.face == Face(std, [0]) and p.coords == (3,)
    p = ray_limit(a2w1, Ray((3, 5), (1, 0)))
    assert p.face == Face(std, []) and p.coords == ()
    with pytest.raises(ValueError):
        Ray((0, 0), (0, 0))


def test_classify_examples(a2w1):
    rs = a2w1.rs
    a1, a2 = rs.simple_roots
    x = BoundaryPoint(Face(rs.standard_base, [0]), [3])
    assert classify_f(a2w1, x, a1) == ExtendedValue.finite(-3)
    assert classify_f(a2w1, x, neg(a1)) == ExtendedValue.finite(3)
    assert classify_f(a2w1, x, neg(a2)) == POS_INF
    assert classify_f(a2w1, x, a2) == NEG_INF
    inner = BoundaryPoint.from_apartment(rs, (2, Fraction(1, 3)))
    for a in rs.all_roots:
        assert classify_f(a2w1, inner, a) == ExtendedValue.finite(-rs.evaluate(a, (2, Fraction(1, 3))))
    with pytest.raises(ValueError):
        classify_f(a2w1, x, (1, 0))


def test_shadow_at_point_stratum(a2w1):
    rs = a2w1.rs
    x = BoundaryPoint(Face(rs.standard_base, []), [])
    shadow = stabilizer_shadow(a2w1, x)
    idx = rs.root_index
    a1, a2 = rs.simple_roots
    assert shadow[idx[a1]].kind == "full"
    assert shadow[idx[neg(a1)]].kind == "trivial"
    # a2 is orthogonal to the highest weight: both signs full (Levi directions)
    assert shadow[idx[a2]].kind == shadow[idx[neg(a2)]].kind == "full"
    assert stratum_parabolic_type(a2w1, x.face) == {1}


def test_parabolic_type_examples(a2w1):
    std = a2w1.rs.standard_base
    assert stratum_parabolic_type(a2w1, Face(std, [])) == {1}
    assert stratum_parabolic_type(a2w1, Face(std, [0])) == frozenset()
    regular = rep_of("A2", (1, 1))
    for c in enumerate_faces(regular):
        assert stratum_parabolic_type(regular, c.representative) == frozenset()


def test_classify_f_set(a2w1):
    rs = a2w1.rs
    x1 = BoundaryPoint.from_apartment(rs, (1, 2))
    x2 = BoundaryPoint.from_apartment(rs, (-3, 1))
    single = classify_f_set(a2w1, [x1])
    assert single == {i: classify_f(a2w1, x1, i) for i in range(len(rs.all_roots))}
    both = classify_f_set(a2w1, [x1, x2])
    for i, a in enumerate(rs.all_roots):
        assert both[i] == ExtendedValue.finite(max(-rs.evaluate(a, (1, 2)), -rs.evaluate(a, (-3, 1))))
    far = BoundaryPoint(Face(rs.standard_base, [0]), [3])
    mixed = classify_f_set(a2w1, [x1, far])
    assert mixed[rs.root_index[neg(rs.simple_roots[1])]] == POS_INF
    with pytest.raises(ValueError):
        classify_f_set(a2w1, [])


def test_extended_value_order():
    vals = [POS_INF, ExtendedValue.finite(Fraction(1, 2)), NEG_INF, ExtendedValue.finite(-7)]
    assert sorted(vals) == [NEG_INF, ExtendedValue.finite(-7), ExtendedValue.finite(Fraction(1, 2)),
                            POS_INF]
    assert [str(v) for v in sorted(vals)] == ["-inf", "-7", "1/2", "+inf"]
    with pytest.raises(ValueError):
        ExtendedValue("finite")


def test_apply_symmetry_examples(a2w1):
    rs = a2w1.rs
    std = rs.standard_base
    p = BoundaryPoint(Face(std, [0]), [3])
    ident = AffineSymmetry(rs.identity, (0, 0))
    assert apply_symmetry(a2w1, ident, p) == p
    pt = BoundaryPoint(Face(std, []), [])
    assert apply_symmetry(a2w1, AffineSymmetry(rs.identity, (5, -2)), pt) == pt
    s1 = AffineSymmetry(rs.element((0,)), (0, 0))
    q = apply_symmetry(a2w1, s1, p)
    assert q.face.base.word == (0,)
    assert q.face.roots == (neg(rs.simple_roots[0]),)
    # (w a)(w x) = a(x): the new coordinate on -a1 equals a1(p)
    assert q.coords == (3,)
    assert faces_equal(a2w1, q.face, p.face)


def _point_on(rep, F, rng):
    return BoundaryPoint(F, [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in F.Y])


def _random_symmetry(rs, rng):
    w = rs.element([rng.randrange(rs.rank) for _ in range(rng.randint(0, 7))])
    t = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rs.rank)]
    return AffineSymmetry(w, t)


def _random_ray(rs, rng):
    o = [Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(rs.rank)]
    while True:
        d = [0 if rng.random() < 0.4 else Fraction(rng.randint(-6, 6), rng.randint(1, 3))
             for _ in range(rs.rank)]
        if any(d):
            return Ray(o, d)


def check_convergence(rep, ray, p):
    """Exact slope signs along the ray for every weight, over the limit's base."""
    rs = rep.rs
    F = p.face
    top = rep.highest_weight(F.base)
    for i in F.Y:
        if rs.evaluate(F.base.roots[i], ray.direction) != 0:
            return False
    for lam in rep.weights:
        diff = [a - b for a, b in zip(top, lam)]
        slope = rs.evaluate(diff, ray.direction)
        if rep.support_indices(F.base, lam) <= F.Y:
            if slope != 0:
                return False
        elif slope <= 0:
            return False
    return all(c == rs.evaluate(r, ray.origin) for c, r in zip(p.coords, F.roots))


@pytest.mark.parametrize("name,lam", REPS)
def test_rays_converge(name, lam):
    rep = rep_of(name, lam)
    rng = random.Random(17)
    for _ in range(150):
        ray = _random_ray(rep.rs, rng)
        p = ray_limit(rep, ray)
        assert is_admissible(rep, p.face.base, p.face.Y)
        assert check_convergence(rep, ray, p)


@pytest.mark.parametrize("name,lam", REPS)
def test_ray_limit_equivariance(name, lam):
    rep = rep_of(name, lam)
    rng = random.Random(19)
    for _ in range(60):
        ray = _random_ray(rep.rs, rng)
        g = _random_symmetry(rep.rs, rng)
        lhs = ray_limit(rep, g.act_ray(ray))
        rhs = apply_symmetry(rep, g, ray_limit(rep, ray))
        assert points_equal(rep, lhs, rhs)


def _sample_points(rep, rng, count):
    fan = enumerate_faces(rep)
    out = []
    for _ in range(count):
        c = rng.choice(fan.faces)
        out.append(_point_on(rep, rng.choice(c.members), rng))
    return out


@pytest.mark.parametrize("name,lam", REPS)
def test_trichotomy(name, lam):
    rep = rep_of(name, lam)
    rs = rep.rs
    n_pos = len(rs.positive_roots)
    rng = random.Random(23)
    for p in _sample_points(rep, rng, 60):
        F = p.face
        X = stratum_parabolic_type(rep, F)
        levi = [F.base.roots[i] for i in sorted(X)]
        f = {i: classify_f(rep, p, i) for i in range(len(rs.all_roots))}
        for i in range(n_pos):
            a, b = f[i], f[i + n_pos]
            root = rs.all_roots[i]
            assert a.is_finite == b.is_finite == exact.in_span(root, F.roots)
            if a.is_finite:
                assert a.value + b.value == 0
                assert a.value == -p.value(root)
                continue
            assert not (a == POS_INF and b == POS_INF)
            both_full = a == NEG_INF and b == NEG_INF
            assert both_full == (bool(levi) and exact.in_span(root, levi))
        # positive roots of the base outside <Y> always act fully
        for a in rs.all_roots:
            c = exact.coefficients_in_basis(a, F.base.roots)
            if all(x >= 0 for x in c) and not exact.in_span(a, F.roots):
                assert classify_f(rep, p, a) == NEG_INF


@pytest.mark.parametrize("name,lam", REPS)
def test_classification_ignores_the_name(name, lam):
    rep = rep_of(name, lam)
    fan = enumerate_faces(rep)
    rng = random.Random(29)
    for p in _sample_points(rep, rng, 30):
        other = rng.choice(fan.canonical(p.face).members)
        q = express_on(p, other)
        assert points_equal(rep, p, q)
        assert canonicalize(fan, p) == canonicalize(fan, q)
        for i in range(len(rep.rs.all_roots)):
            assert classify_f(rep, p, i) == classify_f(rep, q, i)


@pytest.mark.parametrize("name,lam", REPS)
def test_classification_equivariance(name, lam):
    rep = rep_of(name, lam)
    rs = rep.rs
    rng = random.Random(31)
    for p in _sample_points(rep, rng, 30):
        g = _random_symmetry(rs, rng)
        q = apply_symmetry(rep, g, p)
        for a in rs.all_roots:
            wa = g.linear.act(a)
            before, after = classify_f(rep, p, a), classify_f(rep, q, wa)
            if before.is_finite:
                assert after == ExtendedValue.finite(before.value - rs.evaluate(wa, g.translation))
            else:
                assert after == before


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A1xA1", "A3", "B3", "C3"])
def test_string_existence_iff_admissible_union(name):
    rs = build_root_system(name)
    for lam in [(1,) * rs.rank, (1,) + (0,) * (rs.rank - 1), (0,) * (rs.rank - 1) + (2,)]:
        if not all(any(lam[i] for i in comp) for comp in rs.dynkin_components):
            continue
        rep = RepData(rs, lam)
        for base in enumerate_bases(rs):
            for Y in admissible_subsets(rep, base):
                for a in rs.all_roots:
                    c = exact.coefficients_in_basis(a, base.roots)
                    if not all(x <= 0 for x in c):
                        continue
                    minus_a = {i for i, x in enumerate(c) if x < 0}
                    assert weight_string_exists(rep, base, Y, a) == \
                        is_admissible(rep, base, set(Y) | minus_a)


@pytest.mark.parametrize("name,lam", [("A2", (1, 0)), ("B2", (2, 1)), ("G2", (1, 1)),
                                      ("A1xA1", (2, 1))])
def test_string_search_bound_is_enough(name, lam):
    rep = rep_of(name, lam)
    rs = rep.rs
    for base in enumerate_bases(rs):
        for Y in admissible_subsets(rep, base):
            for a in rs.all_roots:
                short = weight_string_exists(rep, base, Y, a)
                assert short == weight_string_exists(rep, base, Y, a, bound=4 * rep.depth + 4)
                if not exact.in_span(a, [base.roots[i] for i in Y]):
                    p = BoundaryPoint(Face(base, Y), [0] * len(Y))
                    assert (classify_f(rep, p, a) == POS_INF) == short


def test_boundary_point_validation(a2w1):
    F = Face(a2w1.rs.standard_base, [0])
    with pytest.raises(ValueError):
        BoundaryPoint(F, [1, 2])
    p = BoundaryPoint(F, ["1/2"])
    assert p.value(a2w1.rs.simple_roots[0]) == Fraction(1, 2)
    assert not p.is_interior
    assert BoundaryPoint.from_apartment(a2w1.rs, (0, 0)).is_interior


@given(st.lists(st.fractions(min_value=-8, max_value=8, max_denominator=5), min_size=2,
                max_size=2),
       st.lists(st.integers(-4, 4), min_size=2, max_size=2).filter(any))
def test_ray_limit_stable_under_origin_shift_along_ray(origin, direction):
    rep = rep_of("G2", (1, 0))
    ray = Ray(origin, direction)
    later = Ray(ray.at(5), direction)
    assert points_equal(rep, ray_limit(rep, ray), ray_limit(rep, later))
