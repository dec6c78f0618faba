"""The affine Weyl group ``W ⋉ Lambda`` acting on ``V`` and on affine roots.

An element is a pair ``(translation, finite)`` standing for ``t_mu * u`` with
``x -> u(x) + mu``.  Simple affine reflections are numbered ``0..rank``;
``0`` is the affine one ``s_0 = t_{theta^vee} s_theta``.
"""

from functools import lru_cache
from typing import NamedTuple

from semiinf.linalg import dot
from semiinf.rootsystem import DomainError, UsageError


class Element(NamedTuple):
    translation: tuple
    finite: int

    def __repr__(self):
        return f"Element({list(self.translation)}, u{self.finite})"


class AffineRoot(NamedTuple):
    """The affine function ``x -> <root, x> + level`` (root given by index)."""
    root: int
    level: int


class PsiFactorization(NamedTuple):
    levi: Element  # w^psi, in the affine Weyl group of the Levi system
    minimal: Element  # w_psi, the distinguished coset representative


def identity(rs):
    return Element((0,) * rs.rank, 0)


def translation(rs, mu):
    return Element(tuple(int(x) for x in mu), 0)


def finite(rs, u):
    return Element((0,) * rs.rank, u)


def compose(rs, a, b):
    mu = rs.weyl_act(a.finite, b.translation)
    return Element(tuple(x + y for x, y in zip(a.translation, mu)), rs.weyl_mul[a.finite][b.finite])


def product(rs, *elements):
    out = identity(rs)
    for e in elements:
        out = compose(rs, out, e)
    return out


def inverse(rs, w):
    ui = rs.weyl_inv[w.finite]
    return Element(tuple(-x for x in rs.weyl_act(ui, w.translation)), ui)


def act_point(rs, w, x):
    return tuple(a + b for a, b in zip(rs.weyl_act(w.finite, x), w.translation))


def projection(w):
    """pi(w): the translation part, i.e. the image of w in W~/W."""
    return w.translation


# -- affine roots ------------------------------------------------------------

def act_on_affine_root(rs, w, a):
    beta = rs.root_perm[w.finite][a.root]
    return AffineRoot(beta, a.level - rs.pairing(beta, w.translation))


def inverse_act(rs, w, a):
    """w^{-1}(a) without forming the inverse element."""
    return AffineRoot(rs.root_perm[rs.weyl_inv[w.finite]][a.root],
                      a.level + rs.pairing(a.root, w.translation))


def is_positive(rs, a):
    return a.level > 0 or (a.level == 0 and rs.is_positive[a.root])


def negate(rs, a):
    return AffineRoot(rs.neg[a.root], -a.level)


def reflection_of(rs, a):
    cv = rs.coroots[a.root]
    return Element(tuple(-a.level * x for x in cv), rs.reflection_of_root[a.root])


@lru_cache(maxsize=None)
def simple_affine_roots(rs):
    """Simple affine roots in the order s_0, s_1, ..., s_rank."""
    return (AffineRoot(rs.neg[rs.highest_root], 1),) + tuple(AffineRoot(i, 0) for i in range(rs.rank))


@lru_cache(maxsize=None)
def simple_reflections(rs):
    return tuple(reflection_of(rs, a) for a in simple_affine_roots(rs))


def from_word(rs, word, mu=None):
    """t_mu * s_{i1} ... s_{ik}; letters 0..rank, 0 being the affine reflection."""
    gens = simple_reflections(rs)
    w = identity(rs) if mu is None else translation(rs, mu)
    for i in word:
        if not 0 <= i <= rs.rank:
            raise UsageError(f"reflection index {i} out of range 0..{rs.rank}")
        w = compose(rs, w, gens[i])
    return w


# -- length, descents, reduced words -----------------------------------------

@lru_cache(maxsize=None)
def _length_data(rs):
    # (alpha index, epsilon_alpha) for every root
    return tuple((k, 0 if rs.is_positive[k] else 1) for k in range(len(rs.roots)))


def length(rs, w):
    """Number of positive affine roots sent to negative ones by w."""
    perm = rs.root_perm[w.finite]
    mu = w.translation
    total = 0
    for k, eps in _length_data(rs):
        beta = perm[k]
        c = rs.pairing(beta, mu) - (1 if rs.is_positive[beta] else 0) - eps + 1
        if c > 0:
            total += c
    return total


def inversions(rs, w, bound=None):
    """Brute-force list of positive affine roots a with w(a) < 0."""
    if bound is None:
        # w(a, n) has level n - <beta, mu>, so larger n can never become negative
        bound = 2 + max(abs(rs.pairing(k, w.translation)) for k in range(len(rs.roots)))
    out = []
    for k in range(len(rs.roots)):
        for n in range(0, bound + 1):
            a = AffineRoot(k, n)
            if is_positive(rs, a) and not is_positive(rs, act_on_affine_root(rs, w, a)):
                out.append(a)
    return out


def is_left_descent(rs, w, i):
    """s_i w < w."""
    return not is_positive(rs, inverse_act(rs, w, simple_affine_roots(rs)[i]))


def is_right_descent(rs, w, i):
    """w s_i < w."""
    return not is_positive(rs, act_on_affine_root(rs, w, simple_affine_roots(rs)[i]))


def left_descents(rs, w):
    return [i for i in range(rs.rank + 1) if is_left_descent(rs, w, i)]


def left_mul(rs, i, w):
    return compose(rs, simple_reflections(rs)[i], w)


def right_mul(rs, w, i):
    return compose(rs, w, simple_reflections(rs)[i])


def reduced_word(rs, w):
    """A reduced word (letters 0..rank) for w, taking the smallest left descent each time."""
    word = []
    while True:
        for i in range(rs.rank + 1):
            if is_left_descent(rs, w, i):
                word.append(i)
                w = left_mul(rs, i, w)
                break
        else:
            return tuple(word)


# -- Bruhat order --------------------------------------------------------------

def bruhat_leq(rs, x, y):
    """Bruhat order x <= y, by descending along left descents of y."""
    simple = simple_affine_roots(rs)
    gens = simple_reflections(rs)
    perm, winv, fn, pos = rs.root_perm, rs.weyl_inv, rs.root_fn, rs.is_positive

    def descent(w, a):
        lvl = a.level + sum(c * t for c, t in zip(fn[a.root], w.translation))
        return lvl < 0 or (lvl == 0 and not pos[perm[winv[w.finite]][a.root]])

    lx, ly = length(rs, x), length(rs, y)
    while True:
        if lx > ly:
            return False
        if lx == ly:
            return x == y
        if lx == 0:
            return True
        for i, a in enumerate(simple):
            if descent(y, a):
                break
        y = compose(rs, gens[i], y)
        ly -= 1
        if descent(x, a):
            x = compose(rs, gens[i], x)
            lx -= 1


def subword_leq(rs, x, y):
    """Bruhat order via the subword property (slow; used as a reference)."""
    word = reduced_word(rs, y)
    return x in _subword_products(rs, word)


def _subword_products(rs, word):
    gens = simple_reflections(rs)
    found = {identity(rs)}
    for i in reversed(word):
        found |= {compose(rs, gens[i], v) for v in found}
    return found


def lower_interval(rs, w):
    """All w' <= w in the Bruhat order."""
    return frozenset(_subword_products(rs, reduced_word(rs, w)))


def elements_up_to_length(rs, max_length):
    """Every element of length <= max_length, sorted by (length, canonical form)."""
    seen = {identity(rs)}
    frontier = [identity(rs)]
    for _ in range(max_length):
        nxt = []
        for w in frontier:
            for i in range(rs.rank + 1):
                v = left_mul(rs, i, w)
                if v not in seen and is_left_descent(rs, v, i):
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return sorted(seen, key=lambda v: sort_key(rs, v))


def sort_key(rs, w):
    return (length(rs, w), w.translation, rs.weyl_words[w.finite])


# -- chambers --------------------------------------------------------------------

def in_chamber(rs, w, chamber):
    """w(A_0) lies in the chamber: w^{-1}(alpha, 0) > 0 for all alpha positive on it."""
    for k in chamber.positive:
        if not is_positive(rs, inverse_act(rs, w, AffineRoot(k, 0))):
            return False
    return True


def chamber_of(rs, w):
    for c in rs.chambers:
        if in_chamber(rs, w, c):
            return c
    raise AssertionError("alcove in no chamber")


# -- sample point ------------------------------------------------------------------

def point(rs, w):
    """scale * w(x0) as an integer vector (x0 is the alcove's equal-wall point)."""
    p = rs.weyl_act(w.finite, rs.x0_scaled)
    return tuple(a + rs.scale * b for a, b in zip(p, w.translation))


def affine_value(rs, a, p):
    """scale * a(x) for a point given as scale * x."""
    return rs.pairing(a.root, p) + a.level * rs.scale


# -- Levi subsystems ------------------------------------------------------------------

@lru_cache(maxsize=None)
def levi_simple_affine_roots(rs, psi_id):
    """Simple affine roots of the affine Weyl group of Phi^psi, positive for its base chamber."""
    p = rs.psis[psi_id]
    pos = sorted(p.base_positive)
    posset = set(pos)
    simple = []
    for b in pos:
        vb = rs.roots[b]
        decomposable = False
        for c in pos:
            diff = tuple(x - y for x, y in zip(vb, rs.roots[c]))
            if diff in rs.root_index and rs.root_index[diff] in posset:
                decomposable = True
                break
        if not decomposable:
            simple.append(b)
    # irreducible components of the simple system
    comps = []
    left = list(simple)
    while left:
        comp = [left.pop(0)]
        grow = True
        while grow:
            grow = False
            for s in list(left):
                if any(rs.pairing(s, rs.coroots[t]) for t in comp):
                    comp.append(s)
                    left.remove(s)
                    grow = True
        comps.append(comp)
    out = [AffineRoot(s, 0) for s in simple]
    for comp in comps:
        members = _closure(rs, comp) & posset
        top = None
        for b in members:
            if all(_add(rs, b, s) not in members for s in comp):
                top = b
        out.append(AffineRoot(rs.neg[top], 1))
    return tuple(out)


def _add(rs, a, b):
    v = tuple(x + y for x, y in zip(rs.roots[a], rs.roots[b]))
    return rs.root_index.get(v)


def _closure(rs, simple):
    found = set(simple) | {rs.neg[s] for s in simple}
    frontier = list(found)
    while frontier:
        nxt = []
        for b in frontier:
            for s in simple:
                c = rs.root_perm[rs.reflection_of_root[s]][b]
                if c not in found:
                    found.add(c)
                    nxt.append(c)
        frontier = nxt
    return found


def is_levi_positive(rs, psi_id, a):
    p = rs.psis[psi_id]
    assert a.root in p.perp
    return a.level > 0 or (a.level == 0 and a.root in p.base_positive)


def is_psi_minimal(rs, w, psi_id):
    """w^{-1} maps the positive affine roots of the Levi system to positive roots."""
    return all(is_positive(rs, inverse_act(rs, w, a)) for a in levi_simple_affine_roots(rs, psi_id))


def psi_factorize(rs, w, psi, with_steps=False):
    """Split w = w^psi * w_psi with w^psi in the Levi affine group, w_psi minimal.

    With ``with_steps`` also return the affine roots b_1, ..., b_k with
    w = s_{b_1} ... s_{b_k} w_psi (the reflections peeled off, in order).
    """
    pid = psi if isinstance(psi, int) else psi.id
    simple = levi_simple_affine_roots(rs, pid)
    levi = identity(rs)
    v = w
    steps = []
    while True:
        for a in simple:
            if not is_positive(rs, inverse_act(rs, v, a)):
                r = reflection_of(rs, a)
                v = compose(rs, r, v)
                levi = compose(rs, levi, r)
                steps.append(a)
                break
        else:
            break
    fac = PsiFactorization(levi, v)
    return (fac, steps) if with_steps else fac


def in_levi_group(rs, w, psi_id):
    """w lies in the affine Weyl group generated by reflections in Phi^psi."""
    p = rs.psis[psi_id]
    fac = psi_factorize(rs, w, psi_id)
    return fac.minimal == identity(rs) if p.perp else w == identity(rs)


# -- JSON ---------------------------------------------------------------------------

def to_json(rs, w):
    return {"translation": list(w.translation), "word": list(rs.weyl_words[w.finite])}


def from_json(rs, obj):
    if not isinstance(obj, dict) or "translation" not in obj:
        raise UsageError(f"element must be an object with 'translation' and 'word': {obj!r}")
    mu = obj["translation"]
    word = obj.get("word", [])
    if (not isinstance(mu, list) or len(mu) != rs.rank
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in mu)):
        raise UsageError(f"translation must be a list of {rs.rank} integers")
    if not isinstance(word, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in word):
        raise UsageError("word must be a list of integers")
    return from_word(rs, word, mu)


def require_in_chamber(rs, w, chamber):
    if not in_chamber(rs, w, chamber):
        raise DomainError(f"{w} does not lie in chamber {rs.chamber_label(chamber.index)}")
