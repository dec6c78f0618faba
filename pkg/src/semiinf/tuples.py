"""Chamber-indexed tuples: (quasi-)admissibility, coordinates, regularity.

A Weyl tuple is a tuple of :class:`~semiinf.affine_weyl.Element` indexed by
chamber index; a lattice tuple is a tuple of ``Lambda`` vectors indexed the
same way.  Quasi-admissible lattice tuples are usually carried around as
coordinate vectors indexed by psi id (``coords[p] = <psi_p, mu_C>`` for any
chamber ``C`` containing ``psi_p``).
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from semiinf import affine_weyl as aw
from semiinf import orders
from semiinf.linalg import dot, inverse, rank
from semiinf.rootsystem import DomainError, UsageError


class InvariantViolation(AssertionError):
    pass


# -- chamber adjacency -------------------------------------------------------

def neighbor(rs, c, i):
    """Index of s_a(C) for a the i-th simple root of C."""
    a = rs.chambers[c].simple[i]
    return rs.weyl_mul[rs.reflection_of_root[a]][c]


@lru_cache(maxsize=None)
def walls(rs):
    """All (C, a, C') with a simple for C and C' = s_a(C)."""
    out = []
    for ch in rs.chambers:
        for i, a in enumerate(ch.simple):
            out.append((ch.index, a, neighbor(rs, ch.index, i)))
    return tuple(out)


def simple_of_positive(rs, pos):
    """Simple roots of a positive system given as a set of root indices."""
    pos = set(pos)
    out = []
    for b in sorted(pos):
        vb = rs.roots[b]
        if not any(rs.root_index.get(tuple(x - y for x, y in zip(vb, rs.roots[c]))) in pos
                   for c in pos):
            out.append(b)
    return out


# -- coordinates ---------------------------------------------------------------

def from_coords(rs, coords):
    """Quasi-admissible lattice tuple with the given psi coordinates."""
    if len(coords) != len(rs.psis):
        raise UsageError(f"expected {len(rs.psis)} coordinates, got {len(coords)}")
    out = []
    for ch in rs.chambers:
        mu = [0] * rs.rank
        for a, p in zip(ch.simple, ch.psis):
            for j, x in enumerate(rs.coroots[a]):
                mu[j] += coords[p] * x
        out.append(tuple(mu))
    return tuple(out)


def to_coords(rs, lattice_tuple):
    """Psi coordinates of a quasi-admissible lattice tuple."""
    coords = [None] * len(rs.psis)
    for ch in rs.chambers:
        for p in ch.psis:
            v = dot(rs.psis[p].weight, lattice_tuple[ch.index])
            if coords[p] is None:
                coords[p] = v
            elif coords[p] != v:
                raise DomainError("lattice tuple is not quasi-admissible")
    out = tuple(coords)
    if from_coords(rs, out) != tuple(tuple(x) for x in lattice_tuple):
        raise DomainError("lattice tuple is not quasi-admissible")
    return out


def projection(wt):
    """pi of a Weyl tuple, as a lattice tuple."""
    return tuple(w.translation for w in wt)


def as_elements(rs, lattice_tuple):
    return tuple(aw.translation(rs, mu) for mu in lattice_tuple)


# -- (quasi-)admissibility ---------------------------------------------------------

def _same_alpha_coset(rs, x, y, a):
    d = aw.compose(rs, x, aw.inverse(rs, y))
    if d.finite not in (0, rs.reflection_of_root[a]):
        return False
    return orders._is_multiple(d.translation, rs.coroots[a])


def is_quasi_admissible(rs, wt):
    wt = _weyl(rs, wt)
    return all(_same_alpha_coset(rs, wt[c2], wt[c], a) for c, a, c2 in walls(rs))


def is_admissible(rs, wt):
    wt = _weyl(rs, wt)
    return all(orders.leq_alpha(rs, wt[c2], wt[c], a) for c, a, c2 in walls(rs))


def is_admissible_all_pairs(rs, wt, method="chamber"):
    """w_C <=_{C'} w_{C'} for all chambers C, C'."""
    wt = _weyl(rs, wt)
    for c in rs.chambers:
        for c2 in rs.chambers:
            if method == "chamber":
                ok = orders.leq_chamber(rs, wt[c.index], wt[c2.index], c2)
            else:
                ok = orders.leq_chamber_bfs(rs, wt[c.index], wt[c2.index], c2)
            if not ok:
                return False
    return True


def _weyl(rs, t):
    if t and not isinstance(t[0], aw.Element):
        return as_elements(rs, t)
    return tuple(t)


# -- regularity --------------------------------------------------------------------

def regularity(rs, t):
    """Largest m with <a, mu_C> >= m for all C and a in Phi_C (mu = pi for Weyl tuples)."""
    if t and isinstance(t[0], aw.Element):
        t = projection(t)
    return min(rs.pairing(a, t[ch.index]) for ch in rs.chambers for a in ch.positive)


def coords_regularity(rs, coords):
    return regularity(rs, from_coords(rs, coords))


def element_regularity(rs, w, chamber):
    """Largest m with w (C, m)-regular."""
    return min(rs.pairing(a, w.translation) for a in chamber.positive)


def element_abs_regularity(rs, w):
    """min |<a, pi(w)>| over all roots: w is (C, m)-regular for its chamber C iff this is >= m."""
    return min(abs(rs.pairing(a, w.translation)) for a in range(rs.n_pos))


# -- operations on coordinates --------------------------------------------------------

def meet(rs, a, b):
    out = tuple(min(x, y) for x, y in zip(a, b))
    m = min(coords_regularity(rs, a), coords_regularity(rs, b))
    if m > 0 and coords_regularity(rs, out) < m:
        raise InvariantViolation(f"meet of {m}-regular tuples lost regularity")
    return out


def e_psi(rs, p):
    return tuple(int(i == p) for i in range(len(rs.psis)))


def subtract_e_psi(rs, coords, p, d):
    out = tuple(x - (d if i == p else 0) for i, x in enumerate(coords))
    if d >= 0 and coords_regularity(rs, out) < coords_regularity(rs, coords) - 2 * d:
        raise InvariantViolation("subtracting d e_psi dropped regularity by more than 2d")
    return out


def translate_tuple(rs, mus, wt):
    """The entrywise product mu_C w_C (mus a lattice tuple or a single vector)."""
    wt = _weyl(rs, wt)
    if mus and isinstance(mus[0], int):
        mus = (tuple(mus),) * len(rs.chambers)
    return tuple(orders.translate(rs, mu, w) for mu, w in zip(mus, wt))


def checked_translate(rs, mus, wt):
    """translate_tuple, asserting that (quasi-)admissibility of both factors is inherited."""
    out = translate_tuple(rs, mus, wt)
    lat = as_elements(rs, (tuple(mus),) * len(rs.chambers) if isinstance(mus[0], int) else mus)
    if is_quasi_admissible(rs, wt) and is_quasi_admissible(rs, lat) and not is_quasi_admissible(rs, out):
        raise InvariantViolation("translation broke quasi-admissibility")
    if is_admissible(rs, wt) and is_admissible(rs, lat) and not is_admissible(rs, out):
        raise InvariantViolation("translation broke admissibility")
    return out


# -- standard tuples --------------------------------------------------------------------

def standard_tuple(rs):
    """w_st: the chamber u(C0) gets u."""
    return tuple(aw.finite(rs, ch.index) for ch in rs.chambers)


def is_dominant(rs, mu):
    return all(rs.pairing(i, mu) >= 0 for i in range(rs.rank))


def dominant_tuple(rs, mu):
    """The lattice tuple u(C0) -> u(mu) of a dominant mu."""
    mu = tuple(mu)
    if not is_dominant(rs, mu):
        raise DomainError(f"{list(mu)} is not dominant")
    return tuple(rs.weyl_act(ch.index, mu) for ch in rs.chambers)


def minimal_dominant(rs, bound):
    """The mu in Lambda with <a_i, mu> >= bound for all i of least coordinate sum (then lex)."""
    bound = max(0, bound)
    total = 0
    while True:
        # dominant coweights have nonnegative coroot coordinates
        for mu in _compositions(total, rs.rank):
            if all(rs.pairing(i, mu) >= bound for i in range(rs.rank)):
                return mu
        total += 1


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# -- psi data of tuples -----------------------------------------------------------------

def tuple_psi(rs, wt, psi):
    """The common minimal coset representative (w_C)_psi over chambers C containing psi."""
    wt = _weyl(rs, wt)
    vals = {aw.psi_factorize(rs, wt[c], psi.id).minimal for c in psi.chambers}
    if len(vals) != 1:
        raise InvariantViolation(f"(w_C)_psi differs across chambers containing psi {psi.id}")
    return vals.pop()


def psi_truncate(rs, wt, psi):
    """{C: (w_C)^psi} for C containing psi; a tuple over the chambers of Phi^psi."""
    wt = _weyl(rs, wt)
    return {c: aw.psi_factorize(rs, wt[c], psi.id).levi for c in psi.chambers}


def levi_walls(rs, psi):
    """(C, b, C') over chambers containing psi, b simple in Phi_C cap Phi^psi, C' = s_b(C)."""
    out = []
    for c in psi.chambers:
        for b in simple_of_positive(rs, psi.levi_positive[c]):
            out.append((c, b, rs.weyl_mul[rs.reflection_of_root[b]][c]))
    return out


def is_levi_admissible(rs, trunc, psi):
    return all(orders.leq_alpha(rs, trunc[c2], trunc[c], b) for c, b, c2 in levi_walls(rs, psi))


def levi_regularity(rs, trunc, psi):
    vals = [rs.pairing(b, trunc[c].translation) for c in psi.chambers for b in psi.levi_positive[c]]
    return min(vals) if vals else None


# -- the polytope V^{<= mu} -----------------------------------------------------------------

def polytope_contains(rs, x, coords):
    """<psi, x> <= mu_psi for every psi."""
    return all(dot(p.weight, x) <= coords[p.id] for p in rs.psis)


def polytope_points(rs, bounds, margin=0):
    """Lattice points x of Lambda with <psi, x> <= bounds_psi + margin for every psi."""
    r = rs.rank
    lo, hi = [], []
    for j in range(r):
        e = tuple(int(i == j) for i in range(r))
        hi.append(bounds[rs.psi_index[e]] + margin)
        lo.append(-(bounds[rs.psi_index[tuple(-x for x in e)]] + margin))
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(dot(p.weight, x) <= bounds[p.id] + margin for p in rs.psis):
            out.append(x)
    return out


def polytope_contains_by_cones(rs, x, coords):
    lt = from_coords(rs, coords)
    return all(orders.leq_cone(rs, x, lt[ch.index], ch.positive) for ch in rs.chambers)


@lru_cache(maxsize=None)
def _face_systems(rs, psi_id):
    """(other psi ids, inverse matrix) for each nonsingular choice of r - 1 further facets."""
    psi = rs.psis[psi_id]
    others = [p for p in rs.psis if p.id != psi_id]
    out = []
    for subset in combinations(others, rs.rank - 1):
        rows = [psi.weight] + [p.weight for p in subset]
        if rank(rows) == rs.rank:
            out.append((tuple(p.id for p in subset), inverse(rows)))
    return tuple(out)


def face_vertices(rs, coords, psi):
    """Vertices of {x in V^{<= mu} : <psi, x> = mu_psi}, by exact enumeration."""
    verts = set()
    for ids, inv in _face_systems(rs, psi.id):
        rhs = [coords[psi.id]] + [coords[i] for i in ids]
        x = tuple(sum(row[j] * rhs[j] for j in range(len(rhs))) for row in inv)
        if polytope_contains(rs, x, coords):
            verts.add(x)
    return sorted(verts)


def kreg_face_check(rs, coords, psi, samples=20, rng=None):
    """Check that the top psi-face is conv{mu_C : C contains psi} and lies where <a, .> > 0."""
    if coords_regularity(rs, coords) < 1:
        raise DomainError("face check needs a regular tuple")
    lt = from_coords(rs, coords)
    corners = {tuple(Fraction(v) for v in lt[c]) for c in psi.chambers}
    verts = set(face_vertices(rs, coords, psi))
    if not verts <= corners:
        return False
    if not all(polytope_contains(rs, x, coords) and dot(psi.weight, x) == coords[psi.id]
               for x in corners):
        return False
    up = [a for a in range(len(rs.roots)) if dot(rs.root_fn[a], psi.coweight) > 0]
    pts = list(corners)
    if rng is not None:
        corner_list = sorted(corners)
        for _ in range(samples):
            wts = [Fraction(rng.randint(0, 5)) for _ in corner_list]
            tot = sum(wts)
            if not tot:
                continue
            pts.append(tuple(sum(w * c[j] for w, c in zip(wts, corner_list)) / tot
                             for j in range(rs.rank)))
    return all(rs.pairing(a, x) > 0 for a in up for x in pts)


# -- finite-part patterns and enumeration ---------------------------------------------------

@lru_cache(maxsize=None)
def finite_patterns(rs):
    """Every assignment C -> v_C in W with v_{s_a C} in {v_C, s_a v_C} across each wall."""
    order = [0]
    seen = {0}
    for c in order:
        for i in range(rs.rank):
            n = neighbor(rs, c, i)
            if n not in seen:
                seen.add(n)
                order.append(n)
    nbrs = {c: [(rs.chambers[c].simple[i], neighbor(rs, c, i)) for i in range(rs.rank)]
            for c in range(len(rs.chambers))}
    pos = {c: k for k, c in enumerate(order)}
    out = []
    assign = {}

    def ok(c, v):
        for a, n in nbrs[c]:
            if n in assign and assign[n] not in (v, rs.weyl_mul[rs.reflection_of_root[a]][v]):
                return False
        return True

    def rec(k):
        if k == len(order):
            out.append(tuple(assign[c] for c in range(len(rs.chambers))))
            return
        c = order[k]
        if k == 0:
            cands = range(len(rs.weyl))
        else:
            a, n = next((a, n) for a, n in nbrs[c] if n in assign and pos[n] < k)
            cands = sorted({assign[n], rs.weyl_mul[rs.reflection_of_root[a]][assign[n]]})
        for v in cands:
            if ok(c, v):
                assign[c] = v
                rec(k + 1)
                del assign[c]

    rec(0)
    return tuple(sorted(out))


def weyl_tuple(rs, coords, pattern):
    """Quasi-admissible Weyl tuple t_{mu_C} v_C from psi coordinates and a finite pattern."""
    lt = from_coords(rs, coords)
    return tuple(aw.Element(lt[c], pattern[c]) for c in range(len(rs.chambers)))


def coords_box(rs, lo, hi):
    return product(range(lo, hi + 1), repeat=len(rs.psis))


# -- the constant of the order-comparison lemma ----------------------------------------------

def order2_constant(rs, ut, psi=None):
    """Return (m_prime, mu, m) following the recipe of the order-comparison lemma."""
    ut = _weyl(rs, ut)
    m_prime = Fraction(0)
    for c, a, c2 in walls(rs):
        for x in rs.alcove_vertices:
            diff = [p - q for p, q in zip(aw.act_point(rs, ut[c], x), aw.act_point(rs, ut[c2], x))]
            cv = rs.coroots[a]
            j = next(i for i, v in enumerate(cv) if v)
            coef = Fraction(diff[j]) / cv[j]
            assert all(d == coef * v for d, v in zip(diff, cv)), "tuple is not quasi-admissible"
            m_prime = max(m_prime, coef)
    need = max(1, -(-m_prime.numerator // m_prime.denominator))
    mu = minimal_dominant(rs, need)
    lt = dominant_tuple(rs, mu)
    m = max(rs.pairing(a, lt[c]) + 1 for c, a, _ in walls(rs))
    return m_prime, mu, m


def order2_holds(rs, ut, wt, mu, psi):
    """The conclusion of the order-comparison lemma for one (w, mu): premise -> conclusion."""
    ut, wt = _weyl(rs, ut), _weyl(rs, wt)
    shifted = [orders.translate(rs, mu, u) for u in ut]
    premise = all(orders.leq_levi_chamber(rs, shifted[c], wt[c], psi, rs.chambers[c])
                  for c in psi.chambers)
    if not premise:
        return True, False
    concl = all(orders.leq_chamber(rs, shifted[c.index], wt[c.index], c) for c in rs.chambers)
    return concl, True


# -- JSON -----------------------------------------------------------------------------------

def weyl_tuple_to_json(rs, wt):
    return {"entries": {rs.chamber_label(c): aw.to_json(rs, w) for c, w in enumerate(wt)}}


def coords_to_json(rs, coords):
    return {"coords": {str(p): int(x) for p, x in enumerate(coords)}}


def tuple_from_json(rs, obj):
    """Parse either encoding; returns ("coords", tuple) or ("weyl", tuple)."""
    if not isinstance(obj, dict):
        raise UsageError("tuple must be a JSON object")
    if "coords" in obj:
        c = obj["coords"]
        if isinstance(c, list):
            vals = c
        elif isinstance(c, dict):
            try:
                vals = [c[str(p)] for p in range(len(rs.psis))]
            except KeyError as e:
                raise UsageError(f"missing coordinate for psi {e}") from None
        else:
            raise UsageError("coords must be a list or an object keyed by psi id")
        if len(vals) != len(rs.psis) or not all(isinstance(v, int) for v in vals):
            raise UsageError(f"coords need {len(rs.psis)} integers")
        return "coords", tuple(vals)
    if "entries" in obj:
        ent = obj["entries"]
        if not isinstance(ent, dict):
            raise UsageError("entries must be an object keyed by chamber word")
        out = [None] * len(rs.chambers)
        for key, val in ent.items():
            out[rs.chamber_by_word(key).index] = aw.from_json(rs, val)
        if any(v is None for v in out):
            raise UsageError("a Weyl tuple needs an entry for every chamber")
        return "weyl", tuple(out)
    raise UsageError("tuple needs 'coords' or 'entries'")
