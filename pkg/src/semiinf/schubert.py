"""Fixed-point models of Schubert varieties and tuple intersections.

Every set here is a finite set of affine Weyl group elements: the Bruhat
interval below ``w``, the common lower set ``{y : y <=_C w_C for all C}`` of a
chamber tuple, and intersections of such sets.  The effective constants
(regularity shifts) come with predicates that check their defining
implications on windows.
"""

from functools import lru_cache
from itertools import product

from semiinf import affine_weyl as aw
from semiinf import orders
from semiinf import tuples as tp
from semiinf.linalg import dot
from semiinf.rootsystem import DomainError


class TheoremViolation(AssertionError):
    """A statement that must hold was found false: always a bug or a counterexample."""


# -- Schubert tuples ---------------------------------------------------------

def chamber_maximum(rs, elements, chamber):
    """The unique <=_C-greatest element of ``elements``; raise if there is none."""
    elements = sorted(elements, key=lambda v: aw.sort_key(rs, v))
    best = elements[0]
    for y in elements[1:]:
        if orders.leq_chamber(rs, best, y, chamber):
            best = y
    for y in elements:
        if not orders.leq_chamber(rs, y, best, chamber):
            raise TheoremViolation(
                f"no greatest element for chamber {rs.chamber_label(chamber.index)}")
    return best


def schubert_tuple(rs, w, interval=None):
    """For each chamber, the <=_C-maximum of the Bruhat interval below w."""
    if interval is None:
        interval = aw.lower_interval(rs, w)
    wt = tuple(chamber_maximum(rs, interval, ch) for ch in rs.chambers)
    if not tp.is_admissible(rs, wt):
        raise TheoremViolation(f"tuple of maxima below {w} is not admissible")
    return wt


def tuple_bounds(rs, wt):
    """b_psi = min over chambers C containing psi of <psi, pi(w_C)>."""
    return tuple(min(dot(p.weight, wt[c].translation) for c in p.chambers) for p in rs.psis)


def in_tuple_lower_set(rs, y, wt, points=None):
    """y <=_C w_C for every chamber C (quick cone test first)."""
    py = aw.point(rs, y)
    for ch in rs.chambers:
        top = wt[ch.index]
        pt = points[ch.index] if points else aw.point(rs, top)
        if tuple(b - a for a, b in zip(py, pt)) not in orders.coroot_cone(rs, ch.positive):
            return False
    # translation stability is verified by the order sweeps; skipping the re-check halves the cost
    return all(orders.leq_chamber(rs, y, wt[ch.index], ch, check_stability=False) for ch in rs.chambers)


def tuple_fixed_points(rs, wt, check_margin=True):
    """The set {y : y <=_C w_C for all C} as a frozenset of elements.

    Candidates are the lattice points of the polytope cut out by the psi
    bounds, times every finite part.  With ``check_margin`` a shell one unit
    wider is scanned too and must contribute nothing.
    """
    return _fixed_points(rs, tp._weyl(rs, wt), check_margin)


@lru_cache(maxsize=4096)
def _fixed_points(rs, wt, check_margin):
    bounds = tuple_bounds(rs, wt)
    points = [aw.point(rs, w) for w in wt]
    inside = set(tp.polytope_points(rs, bounds))
    scan = tp.polytope_points(rs, bounds, 1) if check_margin else sorted(inside)
    found = set()
    for x in scan:
        for u in range(len(rs.weyl)):
            y = aw.Element(x, u)
            if in_tuple_lower_set(rs, y, wt, points):
                if x not in inside:
                    raise TheoremViolation(f"{y} lies below the tuple but outside the window")
                found.add(y)
    return frozenset(found)


def verify_thm_sch(rs, w):
    """Bruhat interval below w equals the lower set of its Schubert tuple."""
    interval = aw.lower_interval(rs, w)
    wt = schubert_tuple(rs, w, interval)
    return interval == tuple_fixed_points(rs, wt)


# -- regularity constant for Schubert tuples ------------------------------------

def regular_dominant(rs):
    """Least (coordinate sum, then lex) mu in Lambda with <a_i, mu> >= 1."""
    return tp.minimal_dominant(rs, 1)


def sch_regularity_r(rs):
    """r = max over fundamental weights of 2 <varpi_i, mu> for the least regular dominant mu."""
    mu = regular_dominant(rs)
    return 2 * max(mu)


def sch_regularity_holds(rs, w, m, r=None):
    """If w is (m + r)-regular then its Schubert tuple is m-regular.  Returns (ok, applicable)."""
    r = sch_regularity_r(rs) if r is None else r
    if tp.element_abs_regularity(rs, w) < m + r:
        return True, False
    return tp.regularity(rs, schubert_tuple(rs, w)) >= m, True


def claim_ineq_tuple(rs, w_plus):
    """{u w_+}_u for w_+ in the fundamental chamber, checked against the Schubert tuple of w_0 w_+."""
    if not aw.in_chamber(rs, w_plus, rs.chambers[0]):
        raise DomainError(f"{w_plus} does not lie in the fundamental chamber")
    out = tuple(aw.compose(rs, aw.finite(rs, ch.index), w_plus) for ch in rs.chambers)
    w = aw.compose(rs, aw.finite(rs, rs.longest), w_plus)
    if schubert_tuple(rs, w) != out:
        raise TheoremViolation(f"Schubert tuple of w_0 {w_plus} is not (u w_+)_u")
    return out


def sandwich_holds(rs, w_plus, u_w):
    """For w = u_w w_+: mu^{-1} w_+ <=_C0 u^{-1} w_{u C0} <=_C0 w_+ for every u.

    The left inequality is only asserted when mu^{-1} w_+ stays in C0 (the
    regular case the statement is used in).
    """
    c0 = rs.chambers[0]
    w = aw.compose(rs, aw.finite(rs, u_w), w_plus)
    wt = schubert_tuple(rs, w)
    mu = regular_dominant(rs)
    low = orders.translate(rs, tuple(-x for x in mu), w_plus)
    use_low = aw.in_chamber(rs, low, c0)
    for ch in rs.chambers:
        v = aw.compose(rs, aw.finite(rs, rs.weyl_inv[ch.index]), wt[ch.index])
        if not orders.leq_chamber(rs, v, w_plus, c0):
            return False
        if use_low and not orders.leq_chamber(rs, low, v, c0):
            return False
    return True


# -- intersections ------------------------------------------------------------------

def tuple_leq(rs, a, b):
    """a <= b as tuples: a_C <=_C b_C for all C."""
    return all(orders.leq_chamber(rs, a[c.index], b[c.index], c) for c in rs.chambers)


def _canon(rs, wt):
    return tuple((w.translation, rs.weyl_words[w.finite]) for w in wt)


def maximal_tuples_below(rs, ub, pred, depth=3):
    """Maximal quasi-admissible tuples whose entries satisfy ``pred(chamber, y)``.

    ``pred`` must be a down-set condition in the psi coordinates, bounded by
    ``ub``.  The search runs per finite pattern over the box of coordinates
    within ``depth`` of ``ub``; callers verify that the result covers what it
    should.
    """
    table = {}
    for ch in rs.chambers:
        ranges = [range(ub[p] - depth, ub[p] + 1) for p in ch.psis]
        for u in range(len(rs.weyl)):
            ok = set()
            for loc in product(*ranges):
                mu = [0] * rs.rank
                for a, x in zip(ch.simple, loc):
                    for j, v in enumerate(rs.coroots[a]):
                        mu[j] += x * v
                if pred(ch, aw.Element(tuple(mu), u)):
                    ok.add(loc)
            table[ch.index, u] = ok
    found = []
    n_psi = len(rs.psis)
    for pattern in tp.finite_patterns(rs):
        if any(not table[c, pattern[c]] for c in range(len(rs.chambers))):
            continue

        def member(x):
            return all(tuple(x[p] for p in ch.psis) in table[ch.index, pattern[ch.index]]
                       for ch in rs.chambers)

        for x in product(*(range(ub[p] - depth, ub[p] + 1) for p in range(n_psi))):
            if not member(x):
                continue
            if any(x[p] < ub[p] and member(x[:p] + (x[p] + 1,) + x[p + 1:]) for p in range(n_psi)):
                continue
            found.append(tp.weyl_tuple(rs, x, pattern))
    return found


def maximal_elements(rs, candidates):
    cands = sorted(set(candidates), key=lambda t: _canon(rs, t))
    out = []
    for a in cands:
        if not any(b != a and tuple_leq(rs, a, b) for b in cands):
            out.append(a)
    return out


def _decompose(rs, common, ub, pred, depth, max_depth):
    while True:
        cands = [t for t in maximal_tuples_below(rs, ub, pred, depth) if tp.is_admissible(rs, t)]
        gens = maximal_elements(rs, cands)
        covered = set()
        for g in gens:
            covered |= tuple_fixed_points(rs, g)
        if covered == common:
            break
        if not covered <= common:
            raise TheoremViolation("a generator's lower set leaves the intersection")
        if depth >= max_depth:
            raise TheoremViolation("could not cover the intersection by admissible tuples")
        depth *= 2
    gens.sort(key=lambda t: (sum(aw.length(rs, w) for w in t), _canon(rs, t)))
    return gens


def intersect_tuple_models(rs, wt1, wt2, depth=3, max_depth=12):
    """Admissible tuples whose lower sets cover the intersection of two lower sets.

    Returns (generators, common) where ``common`` is the intersection.  The
    generators are the maximal admissible tuples below both inputs (these are
    exactly the admissible tuples with entries in ``common``), sorted by
    (total length, canonical form).  Covering is asserted.
    """
    wt1, wt2 = tp._weyl(rs, wt1), tp._weyl(rs, wt2)
    common = tuple_fixed_points(rs, wt1) & tuple_fixed_points(rs, wt2)
    ub = [min(b1, b2) for b1, b2 in zip(tuple_bounds(rs, wt1), tuple_bounds(rs, wt2))]

    def pred(ch, y):
        return (orders.leq_chamber(rs, y, wt1[ch.index], ch)
                and orders.leq_chamber(rs, y, wt2[ch.index], ch))

    return _decompose(rs, common, ub, pred, depth, max_depth), common


def intersect_with_psi(rs, wt, u, psi, depth=3, max_depth=12):
    """Like :func:`intersect_tuple_models` for the lower set of wt and {y <=_psi u}."""
    wt = tp._weyl(rs, wt)
    common = frozenset(y for y in tuple_fixed_points(rs, wt) if orders.leq_psi(rs, y, u, psi))
    ub = list(tuple_bounds(rs, wt))
    ub[psi.id] = min(ub[psi.id], dot(psi.weight, u.translation))

    def pred(ch, y):
        return (orders.leq_chamber(rs, y, wt[ch.index], ch)
                and (psi.id not in ch.psis or orders.leq_psi(rs, y, u, psi)))

    return _decompose(rs, common, ub, pred, depth, max_depth), common


# -- the bound constant -------------------------------------------------------------------

def _chamber_max_set(rs, u, u2, chamber, box):
    """Minimal k in [0, box]^r with (-sum k_i a_i^vee) u <=_C u2 (simple coroots of C)."""
    hits = []
    for k in product(range(box + 1), repeat=rs.rank):
        mu = [0] * rs.rank
        for a, x in zip(chamber.simple, k):
            for j, v in enumerate(rs.coroots[a]):
                mu[j] -= x * v
        if orders.leq_chamber(rs, aw.Element(tuple(mu), u), aw.finite(rs, u2), chamber):
            hits.append(k)
    hitset = set(hits)
    return sorted(k for k in hits
                  if not any(k[i] > 0 and k[:i] + (k[i] - 1,) + k[i + 1:] in hitset
                             for i in range(rs.rank)))


@lru_cache(maxsize=None)
def claim_bound_r_chamber(rs, box=4):
    """The constant of the chamber dichotomy, computed on the fundamental chamber.

    Conjugation by W moves every (C, u, u') case to C = C0, so this is the max
    over all simple roots of C0 and u, u' of the alpha-coordinate of the
    maxima of {mu : mu u <=_C0 u'}.  The box is doubled until the maxima stop
    changing.
    """
    c0 = rs.chambers[0]
    best = 0
    for u in range(len(rs.weyl)):
        for u2 in range(len(rs.weyl)):
            b = box
            mins = _chamber_max_set(rs, u, u2, c0, b)
            while True:
                more = _chamber_max_set(rs, u, u2, c0, 2 * b)
                if more == mins:
                    break
                b, mins = 2 * b, more
            if not mins:
                raise TheoremViolation("empty set of translates below a finite element")
            best = max(best, max(max(k) for k in mins))
    return best


@lru_cache(maxsize=None)
def claim_bound_r_psi(rs, depth=12):
    """The constant of the psi dichotomy: deepest top level of {mu : mu u <=_psi u'}.

    On each level the condition is constant along the Levi lattice, so one
    representative per level decides it; levels are scanned downward from 0.
    """
    best = 0
    for i in range(rs.rank):
        e = tuple(int(j == i) for j in range(rs.rank))
        psi = rs.psis[rs.psi_index[e]]
        if not any(dot(psi.weight, rs.coroots[a]) == 1 for a in range(len(rs.roots))):
            continue
        # mu = -k * varpi_i^vee is not in Lambda in general; walk along a lattice vector of level -1
        step = _level_step(rs, psi)
        for u in range(len(rs.weyl)):
            for u2 in range(len(rs.weyl)):
                for k in range(depth + 1):
                    mu = tuple(k * x for x in step)
                    if orders.leq_psi(rs, aw.Element(mu, u), aw.finite(rs, u2), psi):
                        best = max(best, k)
                        break
                else:
                    raise TheoremViolation("no translate below a finite element in the psi order")
    return best


def _level_step(rs, psi):
    """A vector of Lambda with <psi, .> = -1 (a negative simple coroot)."""
    for a in range(len(rs.roots)):
        cv = rs.coroots[a]
        if dot(psi.weight, cv) == -1:
            return cv
    raise AssertionError("no coroot of level -1")


def claim_bound_r(rs):
    return max(claim_bound_r_chamber(rs), claim_bound_r_psi(rs))


def bound_dichotomy_holds(rs, w, w2, chamber, i, r):
    """If w <=_C w2 then alpha^vee w <=_C w2 or <psi, pi(w2) - pi(w)> <= r (alpha = i-th simple of C)."""
    if not orders.leq_chamber(rs, w, w2, chamber):
        return True
    a, p = chamber.simple[i], rs.psis[chamber.psis[i]]
    if dot(p.weight, w2.translation) - dot(p.weight, w.translation) <= r:
        return True
    return orders.leq_chamber(rs, orders.translate(rs, rs.coroots[a], w), w2, chamber)


def bound_psi_dichotomy_holds(rs, w, w2, psi, root, r):
    """If w <=_psi w2 then a^vee w <=_psi w2 or the psi-level gap is <= r (needs <psi, a^vee> = 1)."""
    if dot(psi.weight, rs.coroots[root]) != 1:
        raise DomainError("the coroot must have psi-level 1")
    if not orders.leq_psi(rs, w, w2, psi):
        return True
    if dot(psi.weight, w2.translation) - dot(psi.weight, w.translation) <= r:
        return True
    return orders.leq_psi(rs, orders.translate(rs, rs.coroots[root], w), w2, psi)


def effective_intersection_r(rs):
    return 2 * claim_bound_r(rs)


# -- finite witness and the increasing sequence -------------------------------------------

def lemma_finite_r(rs):
    mu = regular_dominant(rs)
    return max(rs.pairing(i, mu) for i in range(rs.rank))


def lemma_finite_witness(rs, wt, m=1):
    """x = pi(w) - mu_bar in coordinates; checks x is m-regular and x * w_st <= w."""
    wt = tp._weyl(rs, wt)
    r = lemma_finite_r(rs)
    if tp.regularity(rs, wt) < m + r:
        raise DomainError(f"tuple needs to be {m + r}-regular")
    mu = regular_dominant(rs)
    x = tuple(a - b for a, b in zip(tp.to_coords(rs, tp.projection(wt)),
                                    tp.to_coords(rs, tp.dominant_tuple(rs, mu))))
    if tp.coords_regularity(rs, x) < m:
        raise TheoremViolation("finite witness is not m-regular")
    xw = tp.translate_tuple(rs, tp.from_coords(rs, x), tp.standard_tuple(rs))
    if not tuple_leq(rs, xw, wt):
        raise TheoremViolation("x * w_st is not below w")
    return x


def seq_path(rs):
    """Round-robin path 0 = y_0, ..., y_n = y (coordinates of the dominant tuple of mu)."""
    mu = regular_dominant(rs)
    target = tp.to_coords(rs, tp.dominant_tuple(rs, mu))
    cur = [0] * len(target)
    path = [tuple(cur)]
    while tuple(cur) != target:
        for p in range(len(target)):
            if cur[p] < target[p]:
                cur[p] += 1
                path.append(tuple(cur))
    return path


def lemma_seq_r(rs):
    path = seq_path(rs)
    worst = 0
    for y in path[1:]:
        lt = tp.from_coords(rs, y)
        for c, a, _ in tp.walls(rs):
            worst = max(worst, -rs.pairing(a, lt[c]))
    return worst


def lemma_seq_sequence(rs, x):
    """x + y_i for the periodic path y; an infinite generator of coordinate vectors."""
    path = seq_path(rs)
    n = len(path) - 1
    period = path[-1]
    i = 0
    while True:
        q, k = divmod(i, n)
        yield tuple(a + q * b + c for a, b, c in zip(x, period, path[k]))
        i += 1


# -- psi closure criterion -------------------------------------------------------------------

def psi_closure_leq(rs, wt, u, psi):
    return orders.leq_psi(rs, tp.tuple_psi(rs, wt, psi), u, psi)


def psi_closure_direct(rs, wt, u, psi, fixed=None):
    """Every element of the tuple's lower set is <=_psi u."""
    fixed = tuple_fixed_points(rs, wt) if fixed is None else fixed
    return all(orders.leq_psi(rs, y, u, psi) for y in fixed)
