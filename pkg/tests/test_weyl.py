import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from orbitfuncs.rootsys import build, vec
from orbitfuncs.weyl import (
    generators, generate_group, to_dominant, orbit, signed_orbit,
    stabilizer_order, affine_r0, reflect_highest_root, in_fundamental_domain,
    positive_roots, positive_root_count, orth_group, orth_apply,
    GroupSizeError, WallError,
)

WEYL_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48,
               "C2": 8, "C3": 48, "D4": 192, "G2": 12}


def test_generator_actions():
    a2 = build("A2")
    r1, r2 = generators(a2)
    assert r1.apply((3, 5)) == vec([-3, 8])          # (a,b) -> (-a, a+b)
    assert r2.apply((3, 5)) == vec([8, -5])          # (a,b) -> (a+b, -b)
    c2 = build("C2")
    s1, s2 = generators(c2)
    assert s2.apply((3, 5)) == vec([13, -5])         # (a,b) -> (a+2b, -b)
    assert s1.apply((3, 5)) == vec([-3, 8])
    g2 = build("G2")
    t1, t2 = generators(g2)
    assert t1.apply((1, 1)) == vec([-1, 4])          # (a,b) -> (-a, 3a+b)
    assert t2.apply((1, 1)) == vec([2, -1])          # (a,b) -> (a+b, -b)


def test_generators_are_involutions_with_det_minus_one():
    for label in WEYL_ORDERS:
        rs = build(label)
        n = rs.rank
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        for g in generators(rs):
            assert g.det == -1
            assert (g * g).matrix == ident


def test_group_orders():
    for label, order in WEYL_ORDERS.items():
        assert len(generate_group(build(label))) == order


def test_group_size_limit():
    with pytest.raises(GroupSizeError):
        generate_group(build("A4"), limit=100)


def test_static_only_families_reject_enumeration():
    for label in ["E6", "E7", "E8", "F4"]:
        with pytest.raises(ValueError):
            generate_group(build(label))
        with pytest.raises(ValueError):
            generators(build(label))


def test_group_closure_and_det_multiplicativity():
    for label in ["A2", "C2", "G2", "B3"]:
        rs = build(label)
        grp = generate_group(rs)
        mats = {w.matrix: w.det for w in grp}
        rng = random.Random(7)
        for _ in range(60):
            w1, w2 = rng.choice(grp), rng.choice(grp)
            prod = w1 * w2
            assert prod.matrix in mats
            assert mats[prod.matrix] == w1.det * w2.det


def test_det_matches_word_parity():
    for label in ["A3", "C3", "G2"]:
        for w in generate_group(build(label)):
            assert w.det == (-1) ** len(w.word)


def _brute_dominant(rs, x):
    """Oracle: scan the whole group for the dominant representative."""
    hits = [(w.apply(vec(x)), w.det) for w in generate_group(rs)]
    dom = [(p, d) for p, d in hits if all(c >= 0 for c in p)]
    weights = {p for p, _ in dom}
    assert len(weights) == 1
    signs = {d for _, d in dom}
    return dom[0][0], signs


def test_to_dominant_against_brute_force():
    rng = random.Random(3)
    for label in ["A2", "C2", "G2", "A3", "B3"]:
        rs = build(label)
        for _ in range(40):
            x = [F(rng.randint(-6, 6), rng.choice([1, 2, 3])) for _ in range(rs.rank)]
            res = to_dominant(rs, x)
            weight, signs = _brute_dominant(rs, x)
            assert res.weight == weight
            assert res.sign in signs
            if not res.on_wall:
                assert len(signs) == 1 and res.sign in signs
            assert res.on_wall == any(c == 0 for c in weight)


def test_to_dominant_examples():
    a2 = build("A2")
    assert to_dominant(a2, (-1, 2)) == to_dominant(a2, (-1, 2))
    res = to_dominant(a2, (-1, 2))
    assert (res.weight, res.sign, res.on_wall) == (vec([1, 1]), -1, False)
    res = to_dominant(a2, (5, 2))
    assert (res.weight, res.sign) == (vec([5, 2]), 1)
    # (1,-1) reflects once onto the wall point (0,1)
    res = to_dominant(a2, (1, -1))
    assert (res.weight, res.sign, res.on_wall) == (vec([0, 1]), -1, True)
    # (0,-1) lands on (1,0) after two reflections (exhaustive check)
    res = to_dominant(a2, (0, -1))
    assert (res.weight, res.sign, res.on_wall) == (vec([1, 0]), 1, True)


# -- signed orbit tables (shared fixtures) --------------------------------

from reference_tables import ORBIT_TABLES as FIXTURES, _t


@pytest.mark.parametrize("label,table,args_list", FIXTURES)
def test_signed_orbit_tables(label, table, args_list):
    rs = build(label)
    for args in args_list:
        expected = table(*args)
        got = signed_orbit(rs, args)
        assert len(got.points) == rs.weyl_order == len(expected)
        assert sorted(got.points) == sorted(expected)


def test_signed_orbit_a1xa1_by_composition():
    a1 = build("A1")
    a, b = 2, 3
    prod = [((pa[0], pb[0]), sa * sb)
            for pa, sa in signed_orbit(a1, (a,)).points
            for pb, sb in signed_orbit(a1, (b,)).points]
    expected = _t(((a, b), 1), ((-a, b), -1), ((a, -b), -1), ((-a, -b), 1))
    assert sorted(prod) == sorted(expected)


def test_signed_orbit_rejects_wall():
    with pytest.raises(WallError):
        signed_orbit(build("A2"), (1, 0))


def test_signed_orbit_negation_closure_c2_g2():
    # every signed orbit of C_2 and G_2 contains (-c,-d) with the same sign
    for label in ["C2", "G2"]:
        pts = dict(signed_orbit(build(label), (1, 2)).points)
        for p, s in pts.items():
            assert pts[tuple(-c for c in p)] == s


def test_generator_neighbors_flip_sign():
    for label in ["A2", "C2", "G2"]:
        rs = build(label)
        pts = dict(signed_orbit(rs, (1, 2)).points)
        for g in generators(rs):
            for p, s in pts.items():
                assert pts[g.apply(p)] == -s


def test_orbit_sizes_and_stabilizer():
    a2 = build("A2")
    assert len(orbit(a2, (1, 0))) == 3
    assert orbit(a2, (0, 0)) == [vec([0, 0])]
    c2 = build("C2")
    assert len(orbit(c2, (1, 1))) == 8
    rng = random.Random(11)
    for label in ["A2", "A3", "B3", "C2", "C3", "G2", "D4"]:
        rs = build(label)
        for _ in range(50):
            lam = [rng.randint(0, 2) for _ in range(rs.rank)]
            assert len(orbit(rs, lam)) * stabilizer_order(rs, lam) == rs.weyl_order


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=3), min_size=2, max_size=2))
def test_orbit_stabilizer_property_c2(lam):
    rs = build("C2")
    assert len(orbit(rs, lam)) * stabilizer_order(rs, lam) == rs.weyl_order


def test_affine_reflection():
    for label in ["A2", "C2", "G2", "B3"]:
        rs = build(label)
        xi = rs.highest_root_omega
        zero = vec([0] * rs.rank)
        assert affine_r0(rs, zero) == xi
        half = tuple(c / 2 for c in xi)
        assert affine_r0(rs, half) == half
        rng = random.Random(5)
        for _ in range(10):
            x = vec([F(rng.randint(-9, 9), 4) for _ in range(rs.rank)])
            assert affine_r0(rs, affine_r0(rs, x)) == x
            # r0 after r_xi is the translation by xi^check
            assert affine_r0(rs, reflect_highest_root(rs, x)) == \
                tuple(a + b for a, b in zip(x, xi))


def test_fundamental_domain_membership():
    a2 = build("A2")
    for v in [(0, 0), (1, 0), (0, 1)]:
        assert in_fundamental_domain(a2, v) == "boundary"
    assert in_fundamental_domain(a2, (F(1, 3), F(1, 3))) == "interior"
    assert in_fundamental_domain(a2, (1, 1)) == "outside"
    assert in_fundamental_domain(a2, (-F(1, 8), F(1, 2))) == "outside"
    g2 = build("G2")
    for v in [(0, 0), (F(1, 2), 0), (0, 1)]:
        assert in_fundamental_domain(g2, v) == "boundary"
    assert in_fundamental_domain(g2, (F(1, 8), F(1, 8))) == "interior"


def test_positive_root_counts():
    assert positive_root_count(build("A2")) == 3
    assert positive_root_count(build("A3")) == 6
    assert positive_root_count(build("B3")) == 9
    assert positive_root_count(build("C3")) == 9
    assert positive_root_count(build("C2")) == 4
    assert positive_root_count(build("D4")) == 12
    assert positive_root_count(build("G2")) == 6


def test_positive_roots_contain_simple_and_highest():
    for label in ["A2", "C2", "G2", "B3"]:
        rs = build(label)
        pos = set(positive_roots(rs))
        for i in range(rs.rank):
            assert vec(rs.cartan[i]) in pos
        assert rs.highest_root_omega in pos


def test_orth_group_b_equals_c_and_d_even():
    b2 = set(orth_group(build("B2")))
    c2 = set(orth_group(build("C2")))
    assert b2 == c2
    m = (F(5, 2), F(3, 2))
    orb_b = sorted(orth_apply(p, s, m) for p, s, _ in orth_group(build("B2")))
    orb_c = sorted(orth_apply(p, s, m) for p, s, _ in orth_group(build("C2")))
    assert orb_b == orb_c
    d4 = list(orth_group(build("D4")))
    assert len(d4) == 192
    assert all(signs.count(-1) % 2 == 0 for _, signs, _ in d4)


def test_orth_group_matches_omega_action():
    # the orthogonal-coordinate signed orbit equals the omega one, mapped over
    from orbitfuncs.rootsys import to_orthogonal
    for label, lam in [("A2", (1, 2)), ("B3", (1, 2, 1)), ("C3", (2, 1, 1)), ("D4", (1, 1, 1, 1))]:
        rs = build(label)
        omega_pts = sorted((to_orthogonal(rs, p), s)
                           for p, s in signed_orbit(rs, lam).points)
        m = to_orthogonal(rs, lam)
        orth_pts = sorted((orth_apply(p, s, m), d) for p, s, d in orth_group(rs))
        assert omega_pts == orth_pts


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A2", "C2", "G2", "B3"]),
       st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=8),
                min_size=3, max_size=3))
def test_to_dominant_property(label, coords):
    rs = build(label)
    x = vec(coords[: rs.rank])
    res = to_dominant(rs, x)
    assert all(c >= 0 for c in res.weight)
    assert res.sign in (-1, 1)
    # the result lies in the orbit of x
    assert any(w.apply(x) == res.weight for w in generate_group(rs))
