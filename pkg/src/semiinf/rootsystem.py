"""Finite root systems of rank <= 3 with exact integer coordinates.

Conventions used throughout the package:

* a point of ``V`` is a vector in the basis of simple coroots, so the coroot
  lattice ``Lambda`` is ``Z^rank``;
* an element of ``V*`` (root or weight) is stored by its values on the simple
  coroots, i.e. in the basis of fundamental weights.  The pairing is then a
  plain dot product;
* roots are *indexed*: ``rs.roots[k]`` is the simple-root expansion of the
  k-th root, ``rs.root_fn[k]`` its functional vector and ``rs.coroots[k]``
  its coroot.  Positive roots come first.
* a finite Weyl group element is an integer index into ``rs.weyl``.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

from semiinf.linalg import dot, inverse

SUPPORTED_TYPES = ("A1", "A2", "B2", "C2", "G2", "A3")

# pair[i][j] = <alpha_i, coroot_j>
_CARTAN = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "B2": ((2, -2), (-1, 2)),
    "C2": ((2, -1), (-2, 2)),
    "G2": ((2, -1), (-3, 2)),
}


class UsageError(ValueError):
    """Bad user input: unknown label, malformed payload, out-of-range index."""


class DomainError(ValueError):
    """An operation was called outside its precondition."""


def _matmul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(len(b)))
                       for j in range(len(b[0]))) for i in range(len(a)))


def _apply(m, x):
    return tuple(sum(row[j] * x[j] for j in range(len(x))) for row in m)


def _covec(f, m):
    # row vector f times matrix m
    return tuple(sum(f[i] * m[i][j] for i in range(len(f))) for j in range(len(m[0])))


class Chamber:
    """The Weyl chamber ``u(C0)``."""

    __slots__ = ("index", "word", "positive", "simple", "psis")

    def __init__(self, index, word, positive, simple, psis):
        self.index = index
        self.word = word
        self.positive = positive  # frozenset of root indices
        self.simple = simple  # tuple of root indices, u(alpha_i) in order i
        self.psis = psis  # tuple of psi ids, u(varpi_i) in order i

    def __repr__(self):
        return f"Chamber({self.word or 'e'})"


class PsiData:
    """Everything attached to one element ``psi`` of the set of chamber weights."""

    __slots__ = ("id", "weight", "coweight", "phi", "perp", "chambers", "levi_positive",
                 "base_chamber", "base_positive")

    def __repr__(self):
        return f"PsiData({self.id}, {self.weight})"


class RootSystem:
    """Root datum of a simply connected group of one of the supported types.

    Built once per label by :func:`build_root_system`; immutable afterwards and
    hashed by identity, which is what the per-root-system caches rely on.
    """

    def __init__(self, cartan_type):
        if cartan_type not in _CARTAN:
            raise UsageError(f"unknown Cartan type {cartan_type!r}; "
                             f"expected one of {', '.join(SUPPORTED_TYPES)}")
        self.cartan_type = cartan_type
        self.pair = _CARTAN[cartan_type]
        r = self.rank = len(self.pair)
        self._build_lengths()
        self._build_roots()
        self._build_weyl()
        self._build_weights()
        self._build_chambers()
        self._build_alcove()
        self._build_psis()

    # -- construction -----------------------------------------------------

    def _build_lengths(self):
        r, pair = self.rank, self.pair
        # half squared lengths d_i with pair[i][j] d_j = pair[j][i] d_i
        d = [None] * r
        d[0] = Fraction(1)
        changed = True
        while changed:
            changed = False
            for i, j in product(range(r), repeat=2):
                if d[i] is not None and d[j] is None and pair[i][j]:
                    d[j] = d[i] * pair[j][i] / pair[i][j]
                    changed = True
        self.half_len2 = tuple(d)

    def _root_norm(self, coeffs):
        # (beta, beta) / 2 for beta = sum coeffs_k alpha_k
        r = self.rank
        return sum(coeffs[k] * coeffs[l] * self.pair[k][l] * self.half_len2[l]
                   for k in range(r) for l in range(r)) / 2

    def _build_roots(self):
        r, pair = self.rank, self.pair
        simple = [tuple(1 if i == k else 0 for i in range(r)) for k in range(r)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(r):
                    c = sum(beta[k] * pair[k][i] for k in range(r))
                    img = tuple(beta[k] - (c if k == i else 0) for k in range(r))
                    if img not in found:
                        found.add(img)
                        nxt.append(img)
            frontier = nxt
        positive = sorted((b for b in found if sum(b) > 0), key=lambda b: (sum(b), b[::-1]))
        self.roots = tuple(positive + [tuple(-x for x in b) for b in positive])
        self.n_pos = len(positive)
        self.root_index = {b: k for k, b in enumerate(self.roots)}
        self.root_fn = tuple(tuple(sum(b[k] * pair[k][j] for k in range(r)) for j in range(r))
                             for b in self.roots)
        coroots = []
        for b in self.roots:
            nb = self._root_norm(b)
            cv = tuple(b[k] * self.half_len2[k] / nb for k in range(r))
            assert all(x.denominator == 1 for x in cv)
            coroots.append(tuple(int(x) for x in cv))
        self.coroots = tuple(coroots)
        self.coroot_index = {c: k for k, c in enumerate(self.coroots)}
        n = self.n_pos
        self.neg = tuple((k + n) % (2 * n) for k in range(2 * n))
        self.simple_roots = tuple(range(r))
        self.is_positive = tuple(k < n for k in range(2 * n))
        top = max(positive, key=sum)
        self.highest_root = self.root_index[top]
        self.coxeter_number = sum(top) + 1

    def _build_weyl(self):
        r, pair = self.rank, self.pair
        ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        gens = []
        for i in range(r):
            # s_i(x) = x - <alpha_i, x> coroot_i
            gens.append(tuple(tuple(int(a == b) - (pair[i][b] if a == i else 0)
                                    for b in range(r)) for a in range(r)))
        self.simple_matrices = tuple(gens)
        mats = [ident]
        words = [()]
        index = {ident: 0}
        frontier = [0]
        while frontier:
            nxt = []
            level = {}
            for u in frontier:
                for i in range(r):
                    m = _matmul(gens[i], mats[u])
                    if m in index:
                        continue
                    w = (i + 1,) + words[u]
                    if m not in level or w < level[m]:
                        level[m] = w
            for m, w in sorted(level.items(), key=lambda kv: kv[1]):
                index[m] = len(mats)
                mats.append(m)
                words.append(w)
                nxt.append(index[m])
            frontier = nxt
        self.weyl = tuple(mats)
        self.weyl_words = tuple(words)
        self.weyl_index = index
        nw = len(mats)
        self.weyl_mul = tuple(tuple(index[_matmul(mats[a], mats[b])] for b in range(nw))
                              for a in range(nw))
        self.weyl_inv = tuple(next(b for b in range(nw) if self.weyl_mul[a][b] == 0)
                              for a in range(nw))
        self.weyl_len = tuple(len(w) for w in words)
        self.simple_reflections = tuple(index[g] for g in gens)
        # u(root_k) via the coroot: u(beta)^vee = u(beta^vee)
        self.root_perm = tuple(tuple(self.coroot_index[_apply(mats[u], c)] for c in self.coroots)
                               for u in range(nw))
        self.longest = max(range(nw), key=lambda u: self.weyl_len[u])
        self.reflection_of_root = tuple(
            index[tuple(tuple(int(a == b) - self.coroots[k][a] * self.root_fn[k][b]
                              for b in range(r)) for a in range(r))]
            for k in range(len(self.roots)))

    def _build_weights(self):
        inv = inverse(self.pair)
        r = self.rank
        # fundamental coweights: <alpha_j, w_i> = delta_ij -> column i of pair^-1
        self.fund_coweights = tuple(tuple(inv[k][i] for k in range(r)) for i in range(r))

    def _build_chambers(self):
        chambers = []
        for u in range(len(self.weyl)):
            pos = frozenset(self.root_perm[u][k] for k in range(self.n_pos))
            simple = tuple(self.root_perm[u][i] for i in range(self.rank))
            chambers.append(Chamber(u, self.weyl_words[u], pos, simple, None))
        self.chambers = tuple(chambers)

    def _build_alcove(self):
        r = self.rank
        theta = self.roots[self.highest_root]
        self.alcove_vertices = ((Fraction(0),) * r,) + tuple(
            tuple(x / theta[i] for x in self.fund_coweights[i]) for i in range(r))
        h = self.coxeter_number
        x0 = tuple(sum(self.fund_coweights[i][k] for i in range(r)) / h for k in range(r))
        self.x0 = x0
        den = 1
        for x in x0:
            den = den * x.denominator // _gcd(den, x.denominator)
        # integer model of V: a point x is stored as scale * x
        self.scale = den
        self.x0_scaled = tuple(int(x * den) for x in x0)

    def _build_psis(self):
        r = self.rank
        seen = {}
        psis = []
        for u in range(len(self.weyl)):
            inv_m = self.weyl[self.weyl_inv[u]]
            ids = []
            for i in range(r):
                # (u varpi_i)(x) = varpi_i(u^-1 x): row i of M_{u^-1}
                fn = tuple(inv_m[i])
                if fn not in seen:
                    seen[fn] = len(psis)
                    psis.append((fn, u, i))
                ids.append(seen[fn])
            self.chambers[u].psis = tuple(ids)
        self.psi_index = seen
        data = []
        for pid, (fn, u, i) in enumerate(psis):
            p = PsiData()
            p.id = pid
            p.weight = fn
            p.coweight = _apply(self.weyl[u], self.fund_coweights[i])
            p.phi = frozenset(k for k in range(len(self.roots)) if dot(self.root_fn[k], p.coweight) >= 0)
            p.perp = frozenset(k for k in range(len(self.roots)) if dot(self.root_fn[k], p.coweight) == 0)
            p.chambers = tuple(c.index for c in self.chambers if pid in c.psis)
            p.levi_positive = {c: self.chambers[c].positive & p.perp for c in p.chambers}
            # base chamber of the Levi system: shortest u (then lexicographic word)
            base = min(p.chambers, key=lambda c: (self.weyl_len[c], self.weyl_words[c]))
            p.base_chamber = base
            p.base_positive = p.levi_positive[base]
            data.append(p)
        self.psis = tuple(data)

    # -- small helpers ----------------------------------------------------

    def pairing(self, root, x):
        """<root, x> for a root index and a point of V."""
        return dot(self.root_fn[root], x)

    def weyl_act(self, u, x):
        return _apply(self.weyl[u], x)

    def weyl_act_fn(self, u, f):
        """Action of W on a functional (element of V*)."""
        return _covec(f, self.weyl[self.weyl_inv[u]])

    def weyl_from_word(self, word):
        u = 0
        for i in word:
            if not 1 <= i <= self.rank:
                raise UsageError(f"finite reflection index {i} out of range 1..{self.rank}")
            u = self.weyl_mul[u][self.simple_reflections[i - 1]]
        return u

    def chamber_by_word(self, word):
        if word in ("", "e"):
            return self.chambers[0]
        try:
            letters = tuple(int(ch) for ch in word)
        except ValueError:
            raise UsageError(f"bad chamber word {word!r}") from None
        return self.chambers[self.weyl_from_word(letters)]

    def chamber_label(self, c):
        return "".join(map(str, self.weyl_words[c])) or "e"

    def root_label(self, k):
        return list(self.roots[k])

    def root_from_coeffs(self, coeffs):
        key = tuple(int(x) for x in coeffs)
        if key not in self.root_index:
            raise UsageError(f"{list(coeffs)} is not a root of {self.cartan_type}")
        return self.root_index[key]

    def psi_of_weight(self, fn):
        key = tuple(int(x) for x in fn)
        if key not in self.psi_index:
            raise UsageError(f"{list(fn)} is not a chamber fundamental weight")
        return self.psis[self.psi_index[key]]

    def rho2_coroot(self):
        """Sum of positive coroots, a regular dominant element of Lambda."""
        return tuple(sum(self.coroots[k][j] for k in range(self.n_pos)) for j in range(self.rank))

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"

    def describe(self):
        """JSON-ready description (roots, Cartan data, chambers, weights)."""
        return {
            "type": self.cartan_type,
            "rank": self.rank,
            "pairing": [list(row) for row in self.pair],
            "roots": [list(b) for b in self.roots],
            "positive_roots": [list(b) for b in self.roots[:self.n_pos]],
            "coroots": [list(c) for c in self.coroots],
            "weyl_order": len(self.weyl),
            "coxeter_number": self.coxeter_number,
            "chambers": [
                {"word": self.chamber_label(c.index),
                 "simple_roots": [list(self.roots[k]) for k in c.simple],
                 "psi_ids": list(c.psis)}
                for c in self.chambers],
            "psi": [
                {"id": p.id, "weight": list(p.weight),
                 "coweight": [str(x) for x in p.coweight],
                 "chambers": [self.chamber_label(c) for c in p.chambers]}
                for p in self.psis],
        }


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def build_root_system(cartan_type):
    """Return the (shared, immutable) root system of the given label."""
    return RootSystem(cartan_type)


def chamber(rs, u):
    return rs.chambers[u]


def psi_data(rs, psi):
    """PsiData for a psi given by id or by weight vector."""
    if isinstance(psi, PsiData):
        return psi
    if isinstance(psi, int):
        if not 0 <= psi < len(rs.psis):
            raise UsageError(f"psi id {psi} out of range")
        return rs.psis[psi]
    return rs.psi_of_weight(psi)
