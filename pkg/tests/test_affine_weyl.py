import random
from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from semiinf import affine_weyl as aw
from semiinf.affine_weyl import AffineRoot, Element
from semiinf.rootsystem import UsageError, build_root_system

TYPES = ("A1", "A2", "B2", "G2")


def words(rs, max_len=7):
    return st.lists(st.integers(0, rs.rank), max_size=max_len)


def element_from_affine_word(rs, word):
    gens = aw.simple_reflections(rs)
    w = aw.identity(rs)
    for i in word:
        w = aw.compose(rs, w, gens[i])
    return w


def test_translation_acts_on_affine_roots(A1):
    # mu(a, n) = (a, n - <a, mu>)
    assert aw.act_on_affine_root(A1, aw.translation(A1, (1,)), AffineRoot(0, 0)) == AffineRoot(0, -2)
    assert aw.act_on_affine_root(A1, aw.identity(A1), AffineRoot(0, 5)) == AffineRoot(0, 5)
    assert aw.act_on_affine_root(A1, aw.finite(A1, 1), AffineRoot(0, 1)) == AffineRoot(1, 1)


def test_reflections(A1):
    assert aw.reflection_of(A1, AffineRoot(0, 0)) == aw.finite(A1, 1)
    # s_{a,n} = (-n a^vee) s_a with n = -1
    assert aw.reflection_of(A1, AffineRoot(0, -1)) == Element((1,), 1)
    rng = random.Random(3)
    for _ in range(20):
        rs = build_root_system(rng.choice(TYPES))
        a = AffineRoot(rng.randrange(len(rs.roots)), rng.randint(-4, 4))
        r = aw.reflection_of(rs, a)
        assert aw.compose(rs, r, r) == aw.identity(rs)


def test_lengths_a1(A1):
    assert aw.length(A1, aw.identity(A1)) == 0
    assert aw.length(A1, aw.translation(A1, (1,))) == 2
    for n in range(-2, 4):
        assert aw.length(A1, Element((n,), 1)) == abs(2 * n - 1)


def test_bruhat_examples_a1(A1):
    s0, s1 = aw.simple_reflections(A1)
    assert not aw.bruhat_leq(A1, s0, s1) and not aw.bruhat_leq(A1, s1, s0)
    assert aw.bruhat_leq(A1, aw.translation(A1, (1,)), aw.translation(A1, (2,)))
    assert aw.lower_interval(A1, aw.translation(A1, (1,))) == {
        aw.identity(A1), s0, s1, aw.translation(A1, (1,))}
    assert aw.lower_interval(A1, aw.identity(A1)) == {aw.identity(A1)}


def test_identity_below_everything(A2):
    e = aw.identity(A2)
    assert all(aw.bruhat_leq(A2, e, w) for w in aw.elements_up_to_length(A2, 6))


def _interval_by_reflections(rs, w):
    """Downward closure under reflections that shorten: the Bruhat interval by definition."""
    seen = {w}
    queue = deque([w])
    while queue:
        y = queue.popleft()
        for a in aw.inversions(rs, aw.inverse(rs, y)):
            z = aw.compose(rs, aw.reflection_of(rs, a), y)
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return seen


@pytest.mark.parametrize("t", ["A2", "B2"])
def test_lower_interval_matches_reflection_closure(t):
    rs = build_root_system(t)
    for w in aw.elements_up_to_length(rs, 4):
        if aw.length(rs, w) >= 3:
            assert aw.lower_interval(rs, w) == _interval_by_reflections(rs, w)


def test_chamber_membership(A1):
    c_plus = A1.chambers[0]
    assert aw.in_chamber(A1, aw.identity(A1), c_plus)
    assert aw.in_chamber(A1, aw.translation(A1, (1,)), c_plus)
    assert not aw.in_chamber(A1, aw.finite(A1, 1), c_plus)


def test_chamber_characterisation_by_finite_ascents(A2):
    gens = aw.simple_reflections(A2)
    for w in aw.elements_up_to_length(A2, 6):
        up = all(aw.length(A2, aw.compose(A2, gens[i], w)) > aw.length(A2, w)
                 for i in range(1, 3))
        assert up == aw.in_chamber(A2, w, A2.chambers[0])
        assert sum(aw.in_chamber(A2, w, c) for c in A2.chambers) == 1


def test_psi_factorize_trivial_cases(A1, A2):
    w = aw.translation(A1, (3,))
    fac = aw.psi_factorize(A1, w, 0)
    assert fac.levi == aw.identity(A1) and fac.minimal == w
    p = A2.psi_of_weight((1, 0))
    m = aw.psi_factorize(A2, aw.translation(A2, (2, 1)), p.id).minimal
    again = aw.psi_factorize(A2, m, p.id)
    assert again.levi == aw.identity(A2) and again.minimal == m


def test_psi_factorize_against_coset_scan(A2):
    """Brute force: the coset W~^psi w contains exactly one psi-minimal element."""
    p = A2.psi_of_weight((1, 0))
    rng = random.Random(7)
    pool = aw.elements_up_to_length(A2, 6)
    levi = [w for w in aw.elements_up_to_length(A2, 8) if aw.in_levi_group(A2, w, p.id)]
    for w in rng.sample(pool, 30):
        fac = aw.psi_factorize(A2, w, p.id)
        assert aw.compose(A2, fac.levi, fac.minimal) == w
        assert aw.in_levi_group(A2, fac.levi, p.id)
        coset = {aw.compose(A2, v, w) for v in levi}
        minimal = [y for y in coset if aw.is_psi_minimal(A2, y, p.id)]
        assert minimal == [fac.minimal]


def test_json_round_trip(A2):
    w = aw.from_json(A2, {"translation": [1, -2], "word": [1, 2, 1, 2]})
    assert aw.from_json(A2, aw.to_json(A2, w)) == w
    with pytest.raises(UsageError):
        aw.from_json(A2, {"translation": [1], "word": []})
    with pytest.raises(UsageError):
        aw.from_json(A2, {"translation": [0, 0], "word": [3]})


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_group_laws(t, data):
    rs = build_root_system(t)
    a, b, c = (element_from_affine_word(rs, data.draw(words(rs))) for _ in range(3))
    assert aw.compose(rs, aw.compose(rs, a, b), c) == aw.compose(rs, a, aw.compose(rs, b, c))
    assert aw.compose(rs, a, aw.inverse(rs, a)) == aw.identity(rs)
    x = tuple(range(1, rs.rank + 1))
    assert aw.act_point(rs, aw.compose(rs, a, b), x) == aw.act_point(rs, a, aw.act_point(rs, b, x))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_length_and_reduced_words(t, data):
    rs = build_root_system(t)
    w = element_from_affine_word(rs, data.draw(words(rs, 9)))
    word = aw.reduced_word(rs, w)
    assert len(word) == aw.length(rs, w) == len(aw.inversions(rs, w))
    assert element_from_affine_word(rs, word) == w
    assert aw.length(rs, aw.inverse(rs, w)) == aw.length(rs, w)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(("A1", "A2", "B2")), st.data())
def test_bruhat_matches_subword_property(t, data):
    rs = build_root_system(t)
    x = element_from_affine_word(rs, data.draw(words(rs, 5)))
    y = element_from_affine_word(rs, data.draw(words(rs, 6)))
    assert aw.bruhat_leq(rs, x, y) == aw.subword_leq(rs, x, y)
