import json
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from semiinf.linalg import dot
from semiinf.rootsystem import SUPPORTED_TYPES, UsageError, build_root_system


def test_a1_roots_and_weyl(A1):
    assert sorted(A1.roots) == [(-1,), (1,)]
    assert len(A1.weyl) == 2


def test_a2_counts_and_pairing(A2):
    assert len(A2.roots) == 6 and len(A2.weyl) == 6
    # <alpha_1, alpha_2^vee> from the Cartan matrix
    assert A2.pairing(0, A2.coroots[1]) == -1


def test_g2_counts(G2):
    assert len(G2.roots) == 12 and len(G2.weyl) == 12


def _orbit_closure(rs):
    """Roots as functionals, closed under the two simple reflections; an independent count."""
    found = {tuple(rs.root_fn[i]) for i in range(rs.rank)}
    frontier = list(found)
    while frontier:
        nxt = []
        for f in frontier:
            for i in range(rs.rank):
                # s_i f = f - <f, alpha_i^vee> alpha_i
                c = dot(f, rs.coroots[i])
                g = tuple(a - c * b for a, b in zip(f, rs.root_fn[i]))
                if g not in found:
                    found.add(g)
                    nxt.append(g)
        frontier = nxt
    return found


@pytest.mark.parametrize("t", SUPPORTED_TYPES)
def test_root_count_matches_orbit_closure(t):
    rs = build_root_system(t)
    assert len(_orbit_closure(rs)) == len(rs.roots)
    assert set(_orbit_closure(rs)) == {tuple(f) for f in rs.root_fn}


def test_chamber_data_a1(A1):
    c_plus, c_minus = A1.chambers
    assert [A1.roots[k] for k in c_plus.positive] == [(1,)]
    assert [A1.roots[k] for k in c_minus.positive] == [(-1,)]
    assert [A1.roots[k] for k in c_minus.simple] == [(-1,)]
    assert A1.psis[c_minus.psis[0]].weight == (-1,)


def test_chamber_of_s1_in_a2(A2):
    c = A2.chamber_by_word("1")
    assert sorted(A2.roots[k] for k in c.positive) == sorted([(-1, 0), (0, 1), (1, 1)])


def test_psi_data(A1, A2):
    p = A1.psis[0]
    assert [A1.roots[k] for k in p.phi] == [(1,)] and not p.perp
    w1 = A2.psi_of_weight((1, 0))
    assert sorted(A2.roots[k] for k in w1.perp) == [(0, -1), (0, 1)]
    assert len(w1.chambers) == 2


@pytest.mark.parametrize("t", SUPPORTED_TYPES)
def test_psi_chamber_incidence(t):
    rs = build_root_system(t)
    assert sum(len(p.chambers) for p in rs.psis) == rs.rank * len(rs.chambers)
    for c in rs.chambers:
        for i, pid in enumerate(c.psis):
            # psi_i pairs to delta_ij with the simple coroots of its chamber
            vals = [dot(rs.psis[pid].weight, rs.coroots[a]) for a in c.simple]
            assert vals == [int(j == i) for j in range(rs.rank)]


@pytest.mark.parametrize("t", SUPPORTED_TYPES)
def test_weyl_table_is_a_group(t):
    rs = build_root_system(t)
    n = len(rs.weyl)
    for a, b in product(range(n), repeat=2):
        x = tuple(range(1, rs.rank + 1))
        assert rs.weyl_act(rs.weyl_mul[a][b], x) == rs.weyl_act(a, rs.weyl_act(b, x))
    assert all(rs.weyl_mul[u][rs.weyl_inv[u]] == 0 for u in range(n))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SUPPORTED_TYPES), st.data())
def test_weyl_action_preserves_pairings(t, data):
    rs = build_root_system(t)
    u = data.draw(st.integers(0, len(rs.weyl) - 1))
    x = tuple(data.draw(st.integers(-5, 5)) for _ in range(rs.rank))
    for k in range(len(rs.roots)):
        # <u(beta), u(x)> = <beta, x>
        assert rs.pairing(rs.root_perm[u][k], rs.weyl_act(u, x)) == rs.pairing(k, x)


def test_describe_is_json(A2):
    d = json.loads(json.dumps(A2.describe()))
    assert len(d["roots"]) == 6 and len(d["chambers"]) == 6


def test_unknown_type():
    with pytest.raises(UsageError):
        build_root_system("E9")
