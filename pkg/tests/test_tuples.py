import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from semiinf import affine_weyl as aw
from semiinf import schubert as sb
from semiinf import tuples as tp
from semiinf.rootsystem import DomainError, build_root_system


def coords_strategy(rs, lo=-3, hi=5):
    return st.tuples(*[st.integers(lo, hi) for _ in rs.psis])


def test_quasi_admissible_examples(A1, A2):
    w = aw.from_word(A2, [1, 2], (1, 0))
    assert tp.is_quasi_admissible(A2, (w,) * 6)
    assert tp.is_quasi_admissible(A1, (aw.translation(A1, (1,)), aw.finite(A1, 1)))
    broken = list(tp.standard_tuple(A2))
    s1 = A2.chamber_by_word("1").index
    broken[s1] = aw.translation(A2, (5, 7))
    assert not tp.is_quasi_admissible(A2, tuple(broken))


def test_admissible_examples(A1, A2):
    w = aw.from_word(A2, [2], (0, 1))
    assert tp.is_admissible(A2, (w,) * 6)
    assert tp.is_admissible(A1, (aw.translation(A1, (1,)), aw.finite(A1, 1)))
    assert tp.is_admissible(A2, tp.standard_tuple(A2))


def test_coordinates_a1(A1):
    assert tp.from_coords(A1, (0, 0)) == ((0,), (0,))
    assert tp.from_coords(A1, (1, 1)) == ((1,), (-1,))
    assert tp.coords_regularity(A1, (1, 1)) == 2
    assert tp.regularity(A1, ((0,), (0,))) == 0


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(("A1", "A2", "B2", "G2")), st.data())
def test_coordinate_round_trip(t, data):
    rs = build_root_system(t)
    x = data.draw(coords_strategy(rs))
    lt = tp.from_coords(rs, x)
    assert tp.to_coords(rs, lt) == x
    assert tp.is_quasi_admissible(rs, lt)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(("A2", "B2")), st.data())
def test_regularity_matches_definition(t, data):
    rs = build_root_system(t)
    x = data.draw(coords_strategy(rs))
    lt = tp.from_coords(rs, x)
    direct = min(rs.pairing(a, lt[c.index]) for c in rs.chambers for a in c.positive)
    assert tp.coords_regularity(rs, x) == direct


def test_meet_examples(A1):
    assert tp.meet(A1, (3, 1), (2, 5)) == (2, 1)
    assert tp.meet(A1, (3, 3), (3, 3)) == (3, 3)


def _regular(rs, rng, m):
    while True:
        base = tp.to_coords(rs, tp.dominant_tuple(rs, tp.minimal_dominant(rs, m + 4)))
        x = tuple(v + rng.randint(-2, 2) for v in base)
        if tp.coords_regularity(rs, x) >= m:
            return x


def test_meet_keeps_regularity(A2):
    rng = random.Random(1)
    for _ in range(50):
        a, b = _regular(A2, rng, 4), _regular(A2, rng, 4)
        assert tp.coords_regularity(A2, tp.meet(A2, a, b)) >= 4


def test_subtract_e_psi(A1, A2):
    assert tp.subtract_e_psi(A1, (3, 3), 0, 0) == (3, 3)
    out = tp.subtract_e_psi(A1, (3, 3), 0, 1)
    assert out == (2, 3) and tp.coords_regularity(A1, out) == 4
    rng = random.Random(2)
    for i in range(100):
        m, d = 1, i % 3
        x = _regular(A2, rng, m + 2 * d)
        before = tp.coords_regularity(A2, x)
        y = tp.subtract_e_psi(A2, x, rng.randrange(6), d)
        assert tp.coords_regularity(A2, y) >= before - 2 * d


def test_translate_tuple(A1, A2):
    e_plus = tp.from_coords(A1, tp.e_psi(A1, 0))
    out = tp.translate_tuple(A1, e_plus, (aw.identity(A1),) * 2)
    assert [w.translation for w in out] == list(e_plus)
    rng = random.Random(3)
    adm, lattices = [], []
    while len(adm) < 20 or len(lattices) < 20:
        x = tuple(rng.randint(0, 3) for _ in A2.psis)
        t = tp.weyl_tuple(A2, x, rng.choice(tp.finite_patterns(A2)))
        if tp.is_admissible(A2, t):
            adm.append(t)
        if tp.is_admissible(A2, tp.from_coords(A2, x)):
            lattices.append(tp.from_coords(A2, x))
    for _ in range(50):
        prod = tp.checked_translate(A2, rng.choice(lattices), rng.choice(adm))
        assert tp.is_admissible(A2, prod)


def test_standard_and_dominant_tuples(A1, A2):
    assert tp.standard_tuple(A1) == (aw.identity(A1), aw.finite(A1, 1))
    assert tp.dominant_tuple(A1, (1,)) == ((1,), (-1,))
    assert tp.is_admissible(A2, tp.standard_tuple(A2))
    with pytest.raises(DomainError):
        tp.dominant_tuple(A2, (1, -1))


def test_tuple_psi(A1, A2):
    w = aw.from_word(A2, [1], (2, 0))
    assert tp.tuple_psi(A2, (w,) * 6, A2.psis[0]) == aw.psi_factorize(A2, w, 0).minimal
    t = (aw.translation(A1, (1,)), aw.finite(A1, 1))
    assert tp.tuple_psi(A1, t, A1.psis[0]) == aw.translation(A1, (1,))
    rng = random.Random(4)
    for _ in range(30):
        w = rng.choice(aw.elements_up_to_length(A2, 5))
        tp.tuple_psi(A2, sb.schubert_tuple(A2, w), A2.psi_of_weight((1, 0)))


def test_psi_truncate(A1, A2):
    t = (aw.translation(A1, (1,)), aw.finite(A1, 1))
    trunc = tp.psi_truncate(A1, t, A1.psis[0])
    assert all(v == aw.identity(A1) for v in trunc.values())
    assert tp.levi_regularity(A1, trunc, A1.psis[0]) is None
    p = A2.psi_of_weight((1, 0))
    trunc = tp.psi_truncate(A2, tp.standard_tuple(A2), p)
    assert sorted(trunc) == sorted(p.chambers)
    assert tp.is_levi_admissible(A2, trunc, p)


def test_polytope_membership(A1, A2):
    lt = tp.from_coords(A1, (1, 1))
    assert tp.polytope_contains(A1, lt[0], (1, 1))
    assert not tp.polytope_contains(A1, (2,), (1, 1))
    rng = random.Random(5)
    for _ in range(200):
        x = tuple(rng.randint(-1, 4) for _ in A2.psis)
        pt = tuple(Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(2))
        if tp.is_admissible(A2, tp.from_coords(A2, x)):
            assert tp.polytope_contains(A2, pt, x) == tp.polytope_contains_by_cones(A2, pt, x)


def test_polytope_points_agree_with_membership(B2):
    x = (3, 1, 2, 2, 4, 1, 3, 2)
    pts = set(tp.polytope_points(B2, x))
    box = [p for p in product(range(-8, 9), repeat=2) if tp.polytope_contains(B2, p, x)]
    assert pts == set(box)


def test_face_check(A1, A2):
    assert tp.kreg_face_check(A1, (2, 3), A1.psis[0])
    p = A2.psi_of_weight((1, 0))
    verts = tp.face_vertices(A2, (2,) * 6, p)
    assert len(verts) == 2
    assert tp.kreg_face_check(A2, (2,) * 6, p, rng=random.Random(0))
    assert tp.kreg_face_check(A2, (1,) * 6, p, rng=random.Random(0))
    with pytest.raises(DomainError):
        tp.kreg_face_check(A2, (0,) * 6, p)


def test_order2_constant(A1, A2):
    e = (aw.identity(A1),) * 2
    assert tp.order2_constant(A1, e) == (0, (1,), 3)
    m_prime, mu, m = tp.order2_constant(A1, (aw.translation(A1, (1,)), aw.finite(A1, 1)))
    assert m_prime == 2 and m == 3
    assert tp.order2_constant(A2, tp.standard_tuple(A2))[2] >= 1


def test_finite_patterns_are_quasi_admissible(A2, B2):
    for rs in (A2, B2):
        for pat in tp.finite_patterns(rs):
            assert tp.is_quasi_admissible(rs, tp.weyl_tuple(rs, (0,) * len(rs.psis), pat))


def test_json_encodings(A2):
    t = tp.standard_tuple(A2)
    kind, back = tp.tuple_from_json(A2, tp.weyl_tuple_to_json(A2, t))
    assert kind == "weyl" and back == t
    kind, back = tp.tuple_from_json(A2, tp.coords_to_json(A2, (1, 2, 3, 4, 5, 6)))
    assert kind == "coords" and back == (1, 2, 3, 4, 5, 6)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(("A2", "B2")), st.data())
def test_admissibility_wall_test_matches_all_pairs(t, data):
    rs = build_root_system(t)
    x = data.draw(coords_strategy(rs, -2, 2))
    pat = data.draw(st.sampled_from(tp.finite_patterns(rs)))
    wt = tp.weyl_tuple(rs, x, pat)
    assert tp.is_admissible(rs, wt) == tp.is_admissible_all_pairs(rs, wt)
