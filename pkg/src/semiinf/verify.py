"""Sweeps that check the combinatorial statements on finite windows.

A sweep is a named pair of functions: one turns a window (and a seed) into a
list of JSON-friendly cases, the other checks a single case.  A check returns
``None`` when the case does not meet the hypothesis, ``True`` when the
conclusion holds and a dict describing the counterexample otherwise.  Cases
are independent, so :func:`run` can farm them out to worker processes; the
report only depends on the case list, never on scheduling.
"""

import json
import random
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

from semiinf import affine_weyl as aw
from semiinf import orders
from semiinf import schubert as sb
from semiinf import tuples as tp
from semiinf.affine_weyl import AffineRoot, Element
from semiinf.rootsystem import DomainError, UsageError, build_root_system

SCHEMA_VERSION = 1

REGISTRY = {}


def sweep(name, defaults, summary):
    """Register ``cases_<name>`` / ``check_<name>`` under ``name``."""
    def deco(pair):
        cases, check = pair
        REGISTRY[name] = {"cases": cases, "check": check, "defaults": defaults, "summary": summary}
        return pair
    return deco


# -- payload encoding ------------------------------------------------------------

def enc(w):
    return [list(w.translation), w.finite]


def dec(x):
    return Element(tuple(x[0]), x[1])


def enc_t(t):
    return [enc(w) for w in t]


def dec_t(x):
    return tuple(dec(v) for v in x)


def show(rs, w):
    return aw.to_json(rs, w)


def show_t(rs, t):
    return [aw.to_json(rs, w) for w in t]


@lru_cache(maxsize=None)
def _elements(rs, n):
    return tuple(aw.elements_up_to_length(rs, n))


def _rand_elements(rs, rng, n, k):
    pool = _elements(rs, n)
    return [rng.choice(pool) for _ in range(k)]


def _rand_coords(rs, rng, lo, hi):
    return tuple(rng.randint(lo, hi) for _ in rs.psis)


def _regular_coords(rs, rng, low, spread=2):
    """Random coordinates of regularity >= low: a perturbed dominant tuple."""
    while True:
        mu = tp.minimal_dominant(rs, low + 2 * spread + rng.randint(0, 2))
        mu = tuple(v + rng.randint(0, 1) * e for v, e in zip(mu, tp.minimal_dominant(rs, 1)))
        base = tp.to_coords(rs, tp.dominant_tuple(rs, mu))
        x = tuple(v + rng.randint(-spread, spread) for v in base)
        if tp.coords_regularity(rs, x) >= low:
            return x


def _rand_weyl_tuple(rs, rng, lo, hi):
    return tp.weyl_tuple(rs, _rand_coords(rs, rng, lo, hi), rng.choice(tp.finite_patterns(rs)))


def _by_length(rs, n):
    return _elements(rs, n)


def _regular_dominant_points(rs, top):
    """Dominant regular mu with coroot coordinates in [1, top]."""
    from itertools import product
    return [mu for mu in product(range(1, top + 1), repeat=rs.rank)
            if all(rs.pairing(i, mu) > 0 for i in range(rs.rank))]


def _pairs_leq(rs, n):
    els = _elements(rs, n)
    return [(a, b) for b in els for a in aw.lower_interval(rs, b) if a != b]


def _sample(rng, items, k):
    items = list(items)
    if len(items) <= k:
        return items
    return rng.sample(items, k)


# -- Bruhat order properties ----------------------------------------------------------

def _border_a_cases(rs, win, rng):
    pairs = _pairs_leq(rs, win["max_length"])
    return [[enc(a), enc(b)] for a, b in _sample(rng, sorted(pairs, key=lambda p: (aw.sort_key(rs, p[1]), aw.sort_key(rs, p[0]))), win["samples"])]


def _border_a_check(rs, case, win):
    w1, w2 = dec(case[0]), dec(case[1])
    leq = aw.bruhat_leq
    for s in aw.simple_reflections(rs):
        right = (leq(rs, aw.compose(rs, w1, s), aw.compose(rs, w2, s))
                 or (leq(rs, aw.compose(rs, w1, s), w2) and leq(rs, w1, aw.compose(rs, w2, s))))
        left = (leq(rs, aw.compose(rs, s, w1), aw.compose(rs, s, w2))
                or (leq(rs, aw.compose(rs, s, w1), w2) and leq(rs, w1, aw.compose(rs, s, w2))))
        if not (right and left):
            return {"w1": show(rs, w1), "w2": show(rs, w2), "s": show(rs, s)}
    return True


sweep("border-a", {"max_length": 5, "samples": 500},
      "w' <= w'' implies w's <= w''s or (w's <= w'' and w' <= w''s), both sides")(
    (_border_a_cases, _border_a_check))


def _all_pairs_cases(rs, win, rng):
    els = _elements(rs, win["max_length"])
    pairs = [(a, b) for a in els for b in els]
    return [[enc(a), enc(b)] for a, b in _sample(rng, pairs, win["samples"])]


def _border_b_check(rs, case, win):
    w1, w2 = dec(case[0]), dec(case[1])
    applied = False
    for i, s in enumerate(aw.simple_reflections(rs)):
        if aw.is_left_descent(rs, w1, i) and aw.is_left_descent(rs, w2, i):
            applied = True
            a = aw.bruhat_leq(rs, w1, w2)
            b = aw.bruhat_leq(rs, aw.compose(rs, s, w1), aw.compose(rs, s, w2))
            if a != b:
                return {"w1": show(rs, w1), "w2": show(rs, w2), "s": i}
    return True if applied else None


sweep("border-b", {"max_length": 5, "samples": 500},
      "a common left descent s: w' <= w'' iff sw' <= sw''")((_all_pairs_cases, _border_b_check))


def _border_c_cases(rs, win, rng):
    n = win["max_length"]
    out = []
    for _ in range(win["samples"]):
        w, a, b = _rand_elements(rs, rng, n, 3)
        out.append([enc(w), enc(a), enc(b)])
    return out


def _border_c_check(rs, case, win):
    w, a, b = (dec(x) for x in case)
    L = aw.length
    wa, wb = aw.compose(rs, w, a), aw.compose(rs, w, b)
    applied = False
    if L(rs, wa) == L(rs, w) + L(rs, a) and aw.bruhat_leq(rs, wa, wb):
        applied = True
        if not aw.bruhat_leq(rs, a, b):
            return {"part": "cancel", "w": show(rs, w), "w1": show(rs, a), "w2": show(rs, b)}
    if L(rs, wb) == L(rs, w) + L(rs, b) and aw.bruhat_leq(rs, a, b):
        applied = True
        if not aw.bruhat_leq(rs, wa, wb):
            return {"part": "multiply", "w": show(rs, w), "w1": show(rs, a), "w2": show(rs, b)}
    return True if applied else None


sweep("border-c", {"max_length": 4, "samples": 500},
      "length-additive left factors can be cancelled and introduced in the Bruhat order")(
    (_border_c_cases, _border_c_check))


def _translations(rs, max_len, box):
    from itertools import product
    out = []
    for mu in product(range(-box, box + 1), repeat=rs.rank):
        if aw.length(rs, aw.translation(rs, mu)) <= max_len:
            out.append(list(mu))
    return out


def _border_d_cases(rs, win, rng):
    return [[mu] for mu in _translations(rs, win["max_length"], win["coord_hi"])]


def _border_d_check(rs, case, win):
    mu = tuple(case[0])
    base = aw.length(rs, aw.translation(rs, mu))
    for u in range(len(rs.weyl)):
        conj = aw.product(rs, aw.finite(rs, u), aw.translation(rs, mu), aw.finite(rs, rs.weyl_inv[u]))
        if aw.length(rs, conj) != base:
            return {"mu": list(mu), "u": list(rs.weyl_words[u])}
    return True


sweep("border-d", {"max_length": 8, "coord_hi": 6},
      "l(u mu u^-1) = l(mu)")((_border_d_cases, _border_d_check))


def _each_element_cases(rs, win, rng):
    return [[enc(w)] for w in _sample(rng, _elements(rs, win["max_length"]), win["samples"])]


def _border_e_check(rs, case, win):
    w = dec(case[0])
    c0 = rs.chambers[0]
    gens = aw.simple_reflections(rs)
    up = all(aw.length(rs, aw.compose(rs, gens[i], w)) > aw.length(rs, w)
             for i in range(1, rs.rank + 1))
    inside = aw.in_chamber(rs, w, c0)
    if up != inside:
        return {"w": show(rs, w), "in_chamber": inside, "finite_ascents": up}
    if inside:
        for u in range(len(rs.weyl)):
            uw = aw.compose(rs, aw.finite(rs, u), w)
            if aw.length(rs, uw) != rs.weyl_len[u] + aw.length(rs, w):
                return {"w": show(rs, w), "u": list(rs.weyl_words[u]), "part": "length"}
            for u2 in range(len(rs.weyl)):
                if aw.bruhat_leq(rs, aw.finite(rs, u), aw.finite(rs, u2)):
                    if not aw.bruhat_leq(rs, uw, aw.compose(rs, aw.finite(rs, u2), w)):
                        return {"w": show(rs, w), "u": list(rs.weyl_words[u]),
                                "u2": list(rs.weyl_words[u2]), "part": "monotone"}
    return True


sweep("border-e", {"max_length": 6, "samples": 500},
      "w in C0 iff every finite simple reflection lengthens it; then l(uw) = l(u) + l(w) and u <= u' gives uw <= u'w")(
    (_each_element_cases, _border_e_check))


def _border_f_check(rs, case, win):
    w = dec(case[0])
    c0 = rs.chambers[0]
    if not aw.in_chamber(rs, w, c0):
        return None
    for i, s in enumerate(aw.simple_reflections(rs)):
        ws = aw.compose(rs, w, s)
        if aw.length(rs, ws) < aw.length(rs, w) and not aw.in_chamber(rs, ws, c0):
            return {"w": show(rs, w), "s": i}
    return True


sweep("border-f", {"max_length": 7, "samples": 500},
      "w in C0 and ws < w give ws in C0")((_each_element_cases, _border_f_check))


def _border_g_cases(rs, win, rng):
    return [[list(mu), u] for mu in _regular_dominant_points(rs, win["coord_hi"])
            for u in range(len(rs.weyl))]


def _border_g_check(rs, case, win):
    mu, u = tuple(case[0]), case[1]
    if aw.bruhat_leq(rs, aw.finite(rs, u), aw.translation(rs, mu)):
        return True
    return {"mu": list(mu), "u": list(rs.weyl_words[u])}


sweep("border-g", {"coord_hi": 4},
      "u <= mu for u in W and mu regular dominant")((_border_g_cases, _border_g_check))


def _same_chamber_pairs(rs, win, rng):
    pairs = [(a, b) for a, b in _pairs_leq(rs, win["max_length"])
             if aw.chamber_of(rs, a).index == aw.chamber_of(rs, b).index]
    pairs.sort(key=lambda p: (aw.sort_key(rs, p[1]), aw.sort_key(rs, p[0])))
    return [[enc(a), enc(b)] for a, b in _sample(rng, pairs, win["samples"])]


def _lborder_a_check(rs, case, win):
    a, b = dec(case[0]), dec(case[1])
    for u in range(len(rs.weyl)):
        ua, ub = (aw.compose(rs, aw.finite(rs, u), x) for x in (a, b))
        if ua == ub or not aw.bruhat_leq(rs, ua, ub):
            return {"w1": show(rs, a), "w2": show(rs, b), "u": list(rs.weyl_words[u])}
    return True


sweep("lborder-a", {"max_length": 6, "samples": 500},
      "w' < w'' in one chamber gives uw' < uw'' for u in W")((_same_chamber_pairs, _lborder_a_check))


def _lborder_b_check(rs, case, win):
    a, b = dec(case[0]), dec(case[1])
    ch = aw.chamber_of(rs, b)
    chain = orders.bruhat_chain_in_chamber(rs, a, b, ch)
    if chain is None:
        return {"w1": show(rs, a), "w2": show(rs, b), "reason": "no chain"}
    lens = [aw.length(rs, x) for x in chain]
    ok = (chain[0] == a and chain[-1] == b and all(aw.in_chamber(rs, x, ch) for x in chain)
          and all(y == x + 1 for x, y in zip(lens, lens[1:]))
          and all(aw.bruhat_leq(rs, x, y) for x, y in zip(chain, chain[1:])))
    return True if ok else {"w1": show(rs, a), "w2": show(rs, b), "chain": [show(rs, x) for x in chain]}


sweep("lborder-b", {"max_length": 6, "samples": 500},
      "saturated chains between comparable elements of one chamber stay in the chamber")(
    (_same_chamber_pairs, _lborder_b_check))


def _lborder_c_cases(rs, win, rng):
    out = []
    mus = _regular_dominant_points(rs, win["coord_hi"])
    els = _elements(rs, win["max_length"])
    for _ in range(win["samples"]):
        u = rng.randrange(len(rs.weyl))
        mu = rs.weyl_act(u, rng.choice(mus))
        ch = rs.chambers[u]
        inside = [w for w in els if aw.in_chamber(rs, w, ch)]
        out.append([list(mu), enc(rng.choice(inside))])
    return out


def _lborder_c_check(rs, case, win):
    mu, w = tuple(case[0]), dec(case[1])
    t = aw.translation(rs, mu)
    if aw.length(rs, aw.compose(rs, t, w)) == aw.length(rs, t) + aw.length(rs, w):
        return True
    return {"mu": list(mu), "w": show(rs, w)}


sweep("lborder-c", {"max_length": 6, "coord_hi": 3, "samples": 500},
      "l(mu w) = l(mu) + l(w) for regular mu and w in the same chamber")(
    (_lborder_c_cases, _lborder_c_check))


# -- semi-infinite orders -------------------------------------------------------------------

def _ord_cases(rs, win, rng):
    out = []
    for w in _rand_elements(rs, rng, win["max_length"], win["samples"]):
        out.append([enc(w), rng.randrange(len(rs.roots)), rng.randint(-3, 3)])
    return out


def _ord_check(rs, case, win):
    w, k, n = dec(case[0]), case[1], case[2]
    a = AffineRoot(k, n)
    z = aw.compose(rs, aw.reflection_of(rs, a), w)
    diff = tuple(p - q for p, q in zip(aw.point(rs, w), aw.point(rs, z)))
    geometric = any(diff) and orders._nonneg_multiple(diff, rs.coroots[k])
    if orders.step_allowed(rs, a, w) != geometric:
        return {"part": "a", "w": show(rs, w), "root": k, "level": n}
    up = orders.translate(rs, rs.coroots[k], w)
    if not orders.leq_subset(rs, w, up, {k}) or not orders.leq_alpha(rs, w, up, k):
        return {"part": "b", "w": show(rs, w), "root": k}
    return True


sweep("ord", {"max_length": 6, "samples": 500},
      "a reflection step is downward iff it moves the alcove down along the coroot; w <_a a^vee w")(
    (_ord_cases, _ord_check))


def _cord_cases(rs, win, rng):
    out = []
    pool = _elements(rs, win["max_length"])
    for _ in range(win["samples"]):
        w2 = rng.choice(pool)
        k = rng.randrange(len(rs.roots))
        mode = rng.randrange(3)
        if mode == 0:
            w1 = aw.compose(rs, aw.reflection_of(rs, AffineRoot(k, rng.randint(-3, 3))), w2)
        elif mode == 1:
            w1 = orders.translate(rs, tuple(rng.randint(-2, 2) * c for c in rs.coroots[k]), w2)
        else:
            w1 = rng.choice(pool)
        out.append([enc(w1), enc(w2), k, rng.randrange(len(rs.chambers))])
    return out


def _cord_check(rs, case, win):
    w1, w2, k, c = dec(case[0]), dec(case[1]), case[2], case[3]
    if orders.leq_alpha(rs, w1, w2, k) != orders.leq_subset(rs, w1, w2, {k}):
        return {"part": "a", "w1": show(rs, w1), "w2": show(rs, w2), "root": k}
    ch = rs.chambers[c]
    if orders.leq_chamber(rs, w1, w2, ch):
        if not orders.leq_cone(rs, aw.point(rs, w1), aw.point(rs, w2), ch.positive):
            return {"part": "b-point", "w1": show(rs, w1), "w2": show(rs, w2), "chamber": c}
        if not orders.leq_cone(rs, w1.translation, w2.translation, ch.positive):
            return {"part": "b-projection", "w1": show(rs, w1), "w2": show(rs, w2), "chamber": c}
    mu1, mu2 = aw.translation(rs, w1.translation), aw.translation(rs, w2.translation)
    diff = tuple(b - a for a, b in zip(w1.translation, w2.translation))
    lattice = orders._nonneg_multiple(diff, rs.coroots[k]) if any(diff) else True
    if lattice != orders.leq_subset(rs, mu1, mu2, {k}):
        return {"part": "c", "mu1": list(w1.translation), "mu2": list(w2.translation), "root": k}
    return True


sweep("cord", {"max_length": 5, "samples": 500},
      "single-root order via cosets and points; orders project to the cone order; lattice order for one root")(
    (_cord_cases, _cord_check))


def _order_cases(rs, win, rng):
    out = []
    pool = _elements(rs, win["max_length"])
    for _ in range(win["samples"]):
        a, b = rng.choice(pool), rng.choice(pool)
        if rng.random() < 0.5:
            low = sorted(aw.lower_interval(rs, b), key=lambda v: aw.sort_key(rs, v))
            a = rng.choice(low)
        out.append([enc(a), enc(b), rng.randrange(len(rs.chambers))])
    return out


def _order_check(rs, case, win):
    a, b, c = dec(case[0]), dec(case[1]), case[2]
    ch = rs.chambers[c]
    sc = orders.leq_chamber(rs, a, b, ch)
    br = aw.bruhat_leq(rs, a, b)
    if sc and aw.in_chamber(rs, a, ch) and not br:
        return {"part": "a", "w1": show(rs, a), "w2": show(rs, b), "chamber": c}
    if br and aw.in_chamber(rs, b, ch) and not sc:
        return {"part": "b", "w1": show(rs, a), "w2": show(rs, b), "chamber": c}
    n, nu = orders._chamber_shift(rs, ch, (a, b))
    for j in range(3):
        mu = tuple((n + j) * x for x in nu)
        if aw.bruhat_leq(rs, orders.translate(rs, mu, a), orders.translate(rs, mu, b)) != sc:
            return {"part": "stability", "w1": show(rs, a), "w2": show(rs, b), "chamber": c, "shift": n + j}
    return True


sweep("order", {"max_length": 6, "samples": 500},
      "chamber order vs Bruhat order inside the chamber, stable under three successive regular shifts")(
    (_order_cases, _order_check))


def _engines_cases(rs, win, rng):
    return _order_cases(rs, win, rng)


def _engines_check(rs, case, win):
    a, b, c = dec(case[0]), dec(case[1]), case[2]
    ch = rs.chambers[c]
    fast = orders.leq_chamber(rs, a, b, ch)
    res = orders.leq_chamber_bfs(rs, a, b, ch, witness=True)
    if fast != res.leq:
        return {"w1": show(rs, a), "w2": show(rs, b), "chamber": c, "translation": fast, "search": res.leq}
    if res.leq and orders.replay(rs, b, res.chain, ch.positive) != a:
        return {"w1": show(rs, a), "w2": show(rs, b), "chamber": c, "reason": "witness does not replay"}
    return True


sweep("engines", {"max_length": 6, "samples": 500},
      "translation method and reflection search agree on the chamber order; witnesses replay")(
    (_engines_cases, _engines_check))


def _eorder_check(rs, case, win):
    a, b, c = dec(case[0]), dec(case[1]), case[2]
    ch = rs.chambers[c]
    base = orders.leq_subset(rs, a, b, ch.positive)
    rng = random.Random(json.dumps(case))
    mu = tuple(rng.randint(-2, 2) for _ in range(rs.rank))
    if orders.leq_subset(rs, orders.translate(rs, mu, a), orders.translate(rs, mu, b), ch.positive) != base:
        return {"part": "translation", "w1": show(rs, a), "w2": show(rs, b), "chamber": c, "mu": list(mu)}
    u = rng.randrange(len(rs.weyl))
    ua, ub = aw.compose(rs, aw.finite(rs, u), a), aw.compose(rs, aw.finite(rs, u), b)
    moved = rs.chambers[rs.weyl_mul[u][c]].positive
    if orders.leq_subset(rs, ua, ub, moved) != base:
        return {"part": "conjugation", "w1": show(rs, a), "w2": show(rs, b), "chamber": c,
                "u": list(rs.weyl_words[u])}
    return True


sweep("eorder", {"max_length": 5, "samples": 500},
      "orders are invariant under lattice translation and move with finite left multiplication")(
    (_order_cases, _eorder_check))


def _order1_cases(rs, win, rng):
    out = []
    pool = _elements(rs, win["max_length"])
    for _ in range(win["samples"]):
        levi = [q for q in rs.psis if q.perp]
        if not levi:
            return []
        p = rng.choice(levi)
        gens = [aw.reflection_of(rs, a) for a in aw.levi_simple_affine_roots(rs, p.id)]

        def levi_elem():
            x = aw.identity(rs)
            for _ in range(rng.randint(0, 4)):
                x = aw.compose(rs, x, rng.choice(gens))
            return x

        out.append([p.id, rng.choice(sorted(p.chambers)), enc(levi_elem()), enc(levi_elem()),
                    enc(rng.choice(pool))])
    return out


def _order1_check(rs, case, win):
    pid, c, w1, w2, w = case[0], case[1], dec(case[2]), dec(case[3]), dec(case[4])
    p, ch = rs.psis[pid], rs.chambers[case[1]]
    a, b = aw.compose(rs, w2, w), aw.compose(rs, w1, w)
    if orders.leq_chamber(rs, a, b, ch) != orders.leq_levi_chamber(rs, a, b, p, ch):
        return {"part": "a", "psi": pid, "chamber": c, "w1": show(rs, w1), "w2": show(rs, w2), "w": show(rs, w)}
    m = aw.psi_factorize(rs, w, pid).minimal
    a, b = aw.compose(rs, w2, m), aw.compose(rs, w1, m)
    if orders.leq_chamber(rs, a, b, ch) != orders.leq_levi_chamber(rs, w2, w1, p, ch):
        return {"part": "b", "psi": pid, "chamber": c, "w1": show(rs, w1), "w2": show(rs, w2), "w": show(rs, m)}
    return True


sweep("order1", {"max_length": 4, "samples": 300},
      "for Levi elements the chamber order reduces to the Levi chamber order")(
    (_order1_cases, _order1_check))


# -- tuples -----------------------------------------------------------------------------

def _adm_cases(rs, win, rng):
    if rs.rank == 1:
        from itertools import product
        box = range(-win["coord_hi"], win["coord_hi"] + 1)
        els = [Element((t,), u) for t in box for u in range(2)]
        return [enc_t(t) for t in product(els, repeat=2)]
    out = []
    for i in range(win["samples"]):
        if i % 5 == 4:
            t = tuple(aw.compose(rs, w, aw.finite(rs, rng.randrange(len(rs.weyl))))
                      for w in _rand_weyl_tuple(rs, rng, win["coord_lo"], win["coord_hi"]))
        else:
            t = _rand_weyl_tuple(rs, rng, win["coord_lo"], win["coord_hi"])
        out.append(enc_t(t))
    return out


def _adm_check(rs, case, win):
    t = dec_t(case)
    a, b = tp.is_admissible(rs, t), tp.is_admissible_all_pairs(rs, t)
    return True if a == b else {"tuple": show_t(rs, t), "walls": a, "all_pairs": b}


sweep("adm", {"coord_lo": -2, "coord_hi": 2, "samples": 500},
      "wall-by-wall admissibility equals comparability across all pairs of chambers")(
    (_adm_cases, _adm_check))


def _qa_cases(rs, win, rng):
    pats = tp.finite_patterns(rs)
    out = []
    for i in range(win["samples"]):
        if i % 2:
            t = tp.weyl_tuple(rs, _regular_coords(rs, rng, rng.randint(1, 3)), rng.choice(pats))
        else:
            t = _rand_weyl_tuple(rs, rng, win["coord_lo"], win["coord_hi"])
        out.append(enc_t(t))
    return out


def _ord1_check(rs, case, win):
    t = dec_t(case)
    reg = tp.regularity(rs, t)
    adm = tp.is_admissible(rs, t)
    if reg >= 1 and not adm:
        return {"part": "a", "tuple": show_t(rs, t)}
    for p in rs.psis:
        trunc = tp.psi_truncate(rs, t, p)
        if adm and not tp.is_levi_admissible(rs, trunc, p):
            return {"part": "b", "tuple": show_t(rs, t), "psi": p.id}
        lr = tp.levi_regularity(rs, trunc, p)
        if lr is not None and lr < reg - 1:
            return {"part": "c", "tuple": show_t(rs, t), "psi": p.id, "regularity": reg, "levi": lr}
    return True


sweep("ord1", {"coord_lo": -1, "coord_hi": 4, "samples": 500},
      "quasi-admissible and regular gives admissible; Levi truncation keeps admissibility and loses at most 1 of regularity")(
    (_qa_cases, _ord1_check))


def _qadm_cases(rs, win, rng):
    out = _qa_cases(rs, win, rng)
    for w in _rand_elements(rs, rng, win["max_length"], win["samples"] // 5):
        out.append(enc_t(sb.schubert_tuple(rs, w)))
    return out


def _v_admissible(rs, lt):
    return all(orders._nonneg_multiple(tuple(a - b for a, b in zip(lt[c], lt[c2])), rs.coroots[k])
               for c, k, c2 in tp.walls(rs))


def _qadm_check(rs, case, win):
    t = dec_t(case)
    lt = tp.projection(t)
    as_el = tp.as_elements(rs, lt)
    if tp.is_quasi_admissible(rs, t) and not tp.is_quasi_admissible(rs, as_el):
        return {"part": "quasi", "tuple": show_t(rs, t)}
    if tp.is_admissible(rs, t) and not tp.is_admissible(rs, as_el):
        return {"part": "admissible", "tuple": show_t(rs, t)}
    if tp.is_admissible(rs, as_el) != _v_admissible(rs, lt):
        return {"part": "lattice", "tuple": show_t(rs, t)}
    return True


sweep("qadm", {"coord_lo": -2, "coord_hi": 3, "max_length": 5, "samples": 500},
      "projection keeps (quasi-)admissibility; lattice tuples are admissible as elements iff as vectors")(
    (_qadm_cases, _qadm_check))


def _coord_pair_cases(rs, win, rng):
    out = []
    for i in range(win["samples"]):
        if i % 2:
            m = rng.randint(0, 4)
            a, b = _regular_coords(rs, rng, m), _regular_coords(rs, rng, m)
        else:
            a, b = (_rand_coords(rs, rng, win["coord_lo"], win["coord_hi"]) for _ in range(2))
        out.append([list(a), list(b), rng.randrange(len(rs.psis)), rng.randint(0, 2)])
    return out


def _cint_check(rs, case, win):
    a, b, pid, d = tuple(case[0]), tuple(case[1]), case[2], case[3]
    m = min(tp.coords_regularity(rs, a), tp.coords_regularity(rs, b))
    meet = tuple(min(x, y) for x, y in zip(a, b))
    if m >= 0 and tp.coords_regularity(rs, meet) < m:
        return {"part": "a", "x": list(a), "y": list(b)}
    reg = tp.coords_regularity(rs, a)
    if reg - 2 * d >= 0:
        low = tuple(x - (d if i == pid else 0) for i, x in enumerate(a))
        if tp.coords_regularity(rs, low) < reg - 2 * d:
            return {"part": "b", "x": list(a), "psi": pid, "d": d}
    return True


sweep("cint", {"coord_lo": -1, "coord_hi": 5, "samples": 500},
      "the coordinatewise minimum keeps regularity; lowering one coordinate by d costs at most 2d")(
    (_coord_pair_cases, _cint_check))


def _kreg_cases(rs, win, rng):
    out = []
    while len(out) < win["samples"]:
        x = _regular_coords(rs, rng, rng.randint(1, win["coord_hi"]))
        out.append([list(x), rng.randrange(len(rs.psis)), rng.randrange(10**6)])
    return out


def _kreg_check(rs, case, win):
    x, pid, seed = tuple(case[0]), case[1], case[2]
    if tp.kreg_face_check(rs, x, rs.psis[pid], samples=10, rng=random.Random(seed)):
        return True
    return {"coords": list(x), "psi": pid}


sweep("k-reg", {"coord_hi": 5, "samples": 200},
      "the top psi-face of a regular polytope is the hull of its corners, where psi-positive roots are positive")(
    (_kreg_cases, _kreg_check))


def _order2_cases(rs, win, rng):
    out = []
    tops = [tp.standard_tuple(rs)] + [sb.schubert_tuple(rs, w)
                                      for w in _rand_elements(rs, rng, win["max_length"], 3)]
    for _ in range(win["samples"]):
        ut = rng.choice(tops)
        _, _, m = tp.order2_constant(rs, ut)
        x = _regular_coords(rs, rng, m)
        wt = tp.weyl_tuple(rs, x, rng.choice(tp.finite_patterns(rs)))
        p = rng.choice(rs.psis)
        c = rng.choice(sorted(p.chambers))
        # aim mu at the region where the premise can hold
        mu = tuple(a - b - rng.randint(0, 2) * e for a, b, e in
                   zip(wt[c].translation, ut[c].translation, rs.coroots[rng.choice(sorted(rs.chambers[c].positive))]))
        out.append([enc_t(ut), enc_t(wt), list(mu), p.id])
    return out


def _order2_check(rs, case, win):
    ut, wt, mu, pid = dec_t(case[0]), dec_t(case[1]), tuple(case[2]), case[3]
    if not tp.is_admissible(rs, wt):
        return None
    _, _, m = tp.order2_constant(rs, ut)
    if tp.regularity(rs, wt) < m:
        return None
    holds, premise = tp.order2_holds(rs, ut, wt, mu, rs.psis[pid])
    if not premise:
        return None
    return True if holds else {"u": show_t(rs, ut), "w": show_t(rs, wt), "mu": list(mu), "psi": pid}


sweep("order2", {"max_length": 3, "samples": 200},
      "for the recipe m: Levi-chamber comparisons of mu u_C with an m-regular w lift to chamber comparisons")(
    (_order2_cases, _order2_check))


# -- fixed-point models -------------------------------------------------------------------

def _thm_sch_cases(rs, win, rng):
    return [[enc(w)] for w in _elements(rs, win["max_length"])]


def _thm_sch_check(rs, case, win):
    w = dec(case[0])
    try:
        if sb.verify_thm_sch(rs, w):
            return True
        return {"w": show(rs, w), "reason": "interval differs from the tuple's lower set"}
    except sb.TheoremViolation as e:
        return {"w": show(rs, w), "reason": str(e)}


sweep("thm-sch", {"max_length": 6},
      "Bruhat interval below w equals the lower set of its tuple of chamber maxima")(
    (_thm_sch_cases, _thm_sch_check))


def _sch_b_check(rs, case, win):
    w = dec(case[0])
    ok, applicable = sb.sch_regularity_holds(rs, w, win["m"])
    if not applicable:
        return None
    return True if ok else {"w": show(rs, w), "tuple_regularity": tp.regularity(rs, sb.schubert_tuple(rs, w))}


sweep("sch-b", {"max_length": 8, "m": 1},
      "(m + r)-regular elements have m-regular Schubert tuples")((_thm_sch_cases, _sch_b_check))


def _ineq_cases(rs, win, rng):
    c0 = rs.chambers[0]
    return [[enc(w)] for w in _elements(rs, win["max_length"]) if aw.in_chamber(rs, w, c0)]


def _ineq_check(rs, case, win):
    w = dec(case[0])
    try:
        sb.claim_ineq_tuple(rs, w)
    except sb.TheoremViolation as e:
        return {"w_plus": show(rs, w), "reason": str(e)}
    for u in range(len(rs.weyl)):
        if not sb.sandwich_holds(rs, w, u):
            return {"w_plus": show(rs, w), "u": list(rs.weyl_words[u]), "reason": "sandwich"}
    return True


sweep("ineq", {"max_length": 6},
      "the Schubert tuple of w0 w+ is (u w+)_u and u^-1 w_{uC0} is squeezed below w+")(
    (_ineq_cases, _ineq_check))


def _cadm_cases(rs, win, rng):
    out = []
    for i in range(win["samples"]):
        if i % 2:
            a, b = (sb.schubert_tuple(rs, w) for w in _rand_elements(rs, rng, win["max_length"], 2))
        else:
            a = _rand_weyl_tuple(rs, rng, win["coord_lo"], win["coord_hi"])
            b = sb.schubert_tuple(rs, _rand_elements(rs, rng, win["max_length"], 1)[0])
        out.append([enc_t(a), enc_t(b)])
    return out


def _cadm_check(rs, case, win):
    a, b = dec_t(case[0]), dec_t(case[1])
    fa = sb.tuple_fixed_points(rs, a)
    adm = tp.is_admissible(rs, a)
    if adm != all(w in fa for w in a):
        return {"part": "a", "tuple": show_t(rs, a)}
    union = set()
    for w in a:
        union |= aw.lower_interval(rs, w)
    if not fa <= union:
        return {"part": "c", "tuple": show_t(rs, a)}
    if adm and tp.is_admissible(rs, b):
        fb = sb.tuple_fixed_points(rs, b)
        if (fa <= fb) != sb.tuple_leq(rs, a, b):
            return {"part": "b", "w": show_t(rs, a), "u": show_t(rs, b)}
    return True


sweep("cadm", {"coord_lo": -1, "coord_hi": 2, "max_length": 5, "samples": 60},
      "admissible iff entries lie in the lower set; lower set within the union of intervals; inclusion iff tuple order")(
    (_cadm_cases, _cadm_check))


def _semiinf_cases(rs, win, rng):
    out = []
    for _ in range(win["samples"]):
        w, u = _rand_elements(rs, rng, win["max_length"], 2)
        out.append([enc_t(sb.schubert_tuple(rs, w)), enc(u), rng.randrange(len(rs.psis))])
    return out


def _semiinf_check(rs, case, win):
    wt, u, pid = dec_t(case[0]), dec(case[1]), case[2]
    p = rs.psis[pid]
    a, b = sb.psi_closure_leq(rs, wt, u, p), sb.psi_closure_direct(rs, wt, u, p)
    return True if a == b else {"tuple": show_t(rs, wt), "u": show(rs, u), "psi": pid,
                                "criterion": a, "containment": b}


sweep("semiinf", {"max_length": 5, "samples": 40},
      "lower set inside {<=_psi u} iff the tuple's psi-representative is <=_psi u")(
    (_semiinf_cases, _semiinf_check))


def _decomp_cases(rs, win, rng):
    out = []
    for _ in range(win["samples"]):
        a, b = _rand_elements(rs, rng, win["max_length"], 2)
        out.append([enc_t(sb.schubert_tuple(rs, a)), enc_t(sb.schubert_tuple(rs, b))])
    return out


def _decomp_check(rs, case, win):
    a, b = dec_t(case[0]), dec_t(case[1])
    try:
        gens, common = sb.intersect_tuple_models(rs, a, b)
    except sb.TheoremViolation as e:
        return {"w1": show_t(rs, a), "w2": show_t(rs, b), "reason": str(e)}
    if not all(tp.is_admissible(rs, g) for g in gens):
        return {"w1": show_t(rs, a), "w2": show_t(rs, b), "reason": "inadmissible generator"}
    return True


sweep("decomp", {"max_length": 5, "samples": 20},
      "the intersection of two lower sets is a union of lower sets of admissible tuples")(
    (_decomp_cases, _decomp_check))


def _regular_adm_tuple(rs, rng, low, width=2):
    pats = tp.finite_patterns(rs)
    while True:
        x = _regular_coords(rs, rng, low, width)
        t = tp.weyl_tuple(rs, x, rng.choice(pats))
        if tp.is_admissible(rs, t):
            return t


def _int_cases(rs, win, rng):
    m, r2 = win["m"], sb.effective_intersection_r(rs)
    out = []
    for i in range(win["samples"]):
        a = _regular_adm_tuple(rs, rng, m + r2)
        b = _regular_adm_tuple(rs, rng, m + r2)
        out.append(["a", enc_t(a), enc_t(b)])
    for i in range(win["samples"]):
        d = i % 3
        wt = _regular_adm_tuple(rs, rng, m + 2 * d + r2)
        p = rng.choice(rs.psis)
        c = rng.choice(sorted(p.chambers))
        ch = rs.chambers[c]
        k = ch.psis.index(p.id)
        x = tp.to_coords(rs, tp.projection(wt))
        lam = [v - d * e for v, e in zip(wt[c].translation, rs.coroots[ch.simple[k]])]
        for j, a in enumerate(ch.simple):
            if j != k:
                step = rng.randint(-1, 1)
                lam = [v + step * e for v, e in zip(lam, rs.coroots[a])]
        assert sum(pw * v for pw, v in zip(p.weight, lam)) == x[p.id] - d
        u = Element(tuple(lam), rng.randrange(len(rs.weyl)))
        out.append(["b", enc_t(wt), enc(u), p.id, d])
    return out


def _int_check(rs, case, win):
    m = win["m"]
    try:
        if case[0] == "a":
            a, b = dec_t(case[1]), dec_t(case[2])
            gens, _ = sb.intersect_tuple_models(rs, a, b)
            detail = {"part": "a", "w1": show_t(rs, a), "w2": show_t(rs, b)}
        else:
            wt, u, pid, d = dec_t(case[1]), dec(case[2]), case[3], case[4]
            gens, _ = sb.intersect_with_psi(rs, wt, u, rs.psis[pid])
            detail = {"part": "b", "w": show_t(rs, wt), "u": show(rs, u), "psi": pid, "d": d}
    except sb.TheoremViolation as e:
        return {"reason": str(e), "case": case}
    regs = [tp.regularity(rs, g) for g in gens]
    if all(r >= m for r in regs):
        return True
    detail["regularities"] = regs
    return detail


sweep("int", {"m": 1, "samples": 4},
      "intersections of (m + r')-regular lower sets (and with psi lower sets) are covered by m-regular admissible tuples")(
    (_int_cases, _int_check))


def _bound_cases(rs, win, rng):
    out = []
    pool = _elements(rs, win["max_length"])
    for _ in range(win["samples"]):
        w2 = rng.choice(pool)
        c = rng.randrange(len(rs.chambers))
        ch = rs.chambers[c]
        lam = list(w2.translation)
        for a in ch.simple:
            step = rng.randint(0, 4)
            lam = [v - step * e for v, e in zip(lam, rs.coroots[a])]
        w1 = Element(tuple(lam), rng.randrange(len(rs.weyl)))
        out.append(["chamber", enc(w1), enc(w2), c, rng.randrange(rs.rank)])
    for _ in range(win["samples"]):
        w2 = rng.choice(pool)
        p = rng.choice(rs.psis)
        cands = [k for k in range(len(rs.roots)) if sum(x * y for x, y in zip(p.weight, rs.coroots[k])) == 1]
        if not cands:
            continue
        k = rng.choice(cands)
        depth = rng.randint(0, 4)
        lam = [v - depth * e for v, e in zip(w2.translation, rs.coroots[k])]
        w1 = Element(tuple(lam), rng.randrange(len(rs.weyl)))
        out.append(["psi", enc(w1), enc(w2), p.id, k])
    return out


def _bound_check(rs, case, win):
    kind, w1, w2 = case[0], dec(case[1]), dec(case[2])
    if kind == "chamber":
        c, i = case[3], case[4]
        ch = rs.chambers[c]
        if not orders.leq_chamber(rs, w1, w2, ch):
            return None
        r = sb.claim_bound_r_chamber(rs)
        ok = sb.bound_dichotomy_holds(rs, w1, w2, ch, i, r)
        return True if ok else {"kind": kind, "w1": show(rs, w1), "w2": show(rs, w2), "chamber": c, "i": i}
    pid, k = case[3], case[4]
    p = rs.psis[pid]
    if not orders.leq_psi(rs, w1, w2, p):
        return None
    r = sb.claim_bound_r_psi(rs)
    ok = sb.bound_psi_dichotomy_holds(rs, w1, w2, p, k, r)
    return True if ok else {"kind": kind, "w1": show(rs, w1), "w2": show(rs, w2), "psi": pid, "root": k}


sweep("bound", {"max_length": 5, "samples": 500},
      "far below in the chamber (psi) order, one more coroot step up is still below")(
    (_bound_cases, _bound_check))


def _finite_cases(rs, win, rng):
    m, r = win["m"], sb.lemma_finite_r(rs)
    out = [enc_t(_regular_adm_tuple(rs, rng, m + r, win["width"])) for _ in range(win["samples"])]
    for w in _elements(rs, win["max_length"]):
        if tp.element_abs_regularity(rs, w) >= m + r + sb.sch_regularity_r(rs):
            out.append(enc_t(sb.schubert_tuple(rs, w)))
    return out


def _finite_check(rs, case, win):
    wt = dec_t(case)
    try:
        sb.lemma_finite_witness(rs, wt, win["m"])
    except DomainError:
        return None
    except sb.TheoremViolation as e:
        return {"tuple": show_t(rs, wt), "reason": str(e)}
    return True


sweep("finite", {"m": 1, "width": 3, "max_length": 10, "samples": 300},
      "an (m + r)-regular admissible tuple dominates x * w_st for an m-regular x")(
    (_finite_cases, _finite_check))


def _seq_cases(rs, win, rng):
    m, r = win["m"], sb.lemma_seq_r(rs)
    out = []
    while len(out) < win["samples"]:
        out.append(list(_regular_coords(rs, rng, m + r)))
    return out


def _seq_check(rs, case, win):
    x, m = tuple(case), win["m"]
    n = win["steps_per_psi"] * len(rs.psis)
    gen = sb.lemma_seq_sequence(rs, x)
    prev = next(gen)
    if prev != x:
        return {"x": list(x), "reason": "first element differs"}
    for i in range(n):
        cur = next(gen)
        d = [b - a for a, b in zip(prev, cur)]
        if sorted(d) != [0] * (len(d) - 1) + [1]:
            return {"x": list(x), "step": i, "reason": "not a single e_psi step"}
        if tp.coords_regularity(rs, cur) < m:
            return {"x": list(x), "step": i, "reason": "lost regularity"}
        prev = cur
    if min(b - a for a, b in zip(x, prev)) < 1:
        return {"x": list(x), "reason": "some coordinate never grew"}
    return True


sweep("seq", {"m": 1, "steps_per_psi": 3, "samples": 200},
      "from an (m + r)-regular start, the periodic single-step path stays m-regular and grows every coordinate")(
    (_seq_cases, _seq_check))


# -- runner -------------------------------------------------------------------------

SECTION_ONE = ("border-a", "border-b", "border-c", "border-d", "border-e", "border-f", "border-g",
               "lborder-a", "lborder-b", "lborder-c", "ord", "cord", "order", "eorder", "order1",
               "adm", "ord1", "qadm", "cint", "k-reg")


def window_for(name, overrides=None):
    if name not in REGISTRY:
        raise UsageError(f"unknown lemma {name!r}; choose from {', '.join(sorted(REGISTRY))}")
    win = dict(REGISTRY[name]["defaults"])
    for k, v in (overrides or {}).items():
        if v is None:
            continue
        if k not in win:
            raise UsageError(f"lemma {name!r} has no window parameter {k!r}")
        if not isinstance(v, int) or (v <= 0 and k not in ("coord_lo", "m")):
            raise UsageError(f"window parameter {k} must be a positive integer")
        win[k] = v
    return win


def _run_chunk(cartan_type, name, win, chunk):
    rs = build_root_system(cartan_type)
    check = REGISTRY[name]["check"]
    return [(i, check(rs, case, win)) for i, case in chunk]


def canonical(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def run(cartan_type, name, overrides=None, seed=0, jobs=1):
    """Generate and check every case; the report is independent of ``jobs``."""
    rs = build_root_system(cartan_type)
    win = window_for(name, overrides)
    cases = REGISTRY[name]["cases"](rs, win, random.Random(seed))
    indexed = list(enumerate(cases))
    if jobs > 1 and len(indexed) > 1:
        size = max(1, -(-len(indexed) // (4 * jobs)))
        chunks = [indexed[i:i + size] for i in range(0, len(indexed), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_run_chunk, [cartan_type] * len(chunks), [name] * len(chunks),
                             [win] * len(chunks), chunks)
            results = [r for part in parts for r in part]
    else:
        results = _run_chunk(cartan_type, name, win, indexed)
    results.sort(key=lambda r: r[0])
    applicable = sum(1 for _, r in results if r is not None)
    failures = sorted((r for _, r in results if isinstance(r, dict)), key=canonical)
    return {
        "schema": SCHEMA_VERSION,
        "lemma": name,
        "type": cartan_type,
        "summary": REGISTRY[name]["summary"],
        "window": win,
        "seed": seed,
        "cases": len(cases),
        "applicable": applicable,
        "failures": failures,
    }
