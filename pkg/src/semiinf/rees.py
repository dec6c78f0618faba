"""Sublattices of the coroot lattice, their Z^Psi filtration and Rees monoid.

For a sublattice L of Lambda and x in Z^Psi, the filtered piece is
``L_x = {mu in L : <psi, mu> <= x_psi for all psi}``.  The Rees monoid is the
set of pairs (mu, x) with x >= 0 and mu in L_x; it is finitely generated and
:func:`hilbert_basis` finds its minimal generators degree by degree.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from semiinf import tuples as tp
from semiinf.linalg import dot, inverse, rank
from semiinf.rootsystem import DomainError, UsageError


@dataclass(frozen=True)
class Sublattice:
    rs: object = field(repr=False)
    basis: tuple
    perp_roots: tuple = ()

    def __post_init__(self):
        basis = tuple(tuple(int(x) for x in v) for v in self.basis)
        if any(len(v) != self.rs.rank for v in basis):
            raise UsageError("sublattice vectors must have one entry per simple coroot")
        if basis and rank(list(basis)) < len(basis):
            raise UsageError("sublattice basis is not linearly independent")
        object.__setattr__(self, "basis", basis)
        perp = tuple(a for a in range(len(self.rs.roots))
                     if all(self.rs.pairing(a, v) == 0 for v in basis))
        object.__setattr__(self, "perp_roots", perp)
        if basis:
            gram = [[dot(u, v) for v in basis] for u in basis]
            object.__setattr__(self, "_gram_inv", inverse(gram))

    def coefficients(self, mu):
        """c with mu = sum c_i b_i, or None when mu is not in the sublattice."""
        if not self.basis:
            return () if not any(mu) else None
        proj = [dot(b, mu) for b in self.basis]
        c = [sum(Fraction(g) * p for g, p in zip(row, proj)) for row in self._gram_inv]
        if any(x.denominator != 1 for x in c):
            return None
        c = tuple(int(x) for x in c)
        back = [sum(ci * b[j] for ci, b in zip(c, self.basis)) for j in range(self.rs.rank)]
        return c if tuple(back) == tuple(mu) else None

    def __contains__(self, mu):
        return self.coefficients(mu) is not None

    def spans(self, vec):
        """vec (rational) lies in the Q-span of the basis."""
        return rank(list(self.basis) + [list(vec)]) == len(self.basis)

    def to_json(self):
        return {"basis": [list(v) for v in self.basis], "perp_roots": list(self.perp_roots)}


def full_lattice(rs):
    return Sublattice(rs, tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank)))


def filtration_set(sub, x):
    """L_x as a sorted list of Lambda vectors."""
    rs = sub.rs
    if len(x) != len(rs.psis):
        raise UsageError(f"degree needs {len(rs.psis)} entries")
    return [mu for mu in tp.polytope_points(rs, tuple(x)) if mu in sub]


def filtration_set_by_coefficients(sub, x, box):
    """Independent enumeration: sum c_i b_i for c in [-box, box]^k, filtered by the inequalities."""
    rs = sub.rs
    out = set()
    for c in product(range(-box, box + 1), repeat=len(sub.basis)):
        mu = tuple(sum(ci * b[j] for ci, b in zip(c, sub.basis)) for j in range(rs.rank))
        if tp.polytope_contains(rs, mu, x):
            out.add(mu)
    if not sub.basis and tp.polytope_contains(rs, (0,) * rs.rank, x):
        out.add((0,) * rs.rank)
    return sorted(out)


def is_member(sub, mu, x):
    """(mu, x) lies in the Rees monoid."""
    return all(v >= 0 for v in x) and mu in sub and tp.polytope_contains(sub.rs, mu, x)


def degrees(n_psi, total):
    """All x in Z_{>=0}^Psi with |x| = total, in lex order."""
    return sorted(tp._compositions(total, n_psi), reverse=True)


def members_of_degree(sub, total):
    out = []
    for x in degrees(len(sub.rs.psis), total):
        out.extend((mu, x) for mu in filtration_set(sub, x))
    return out


def _minus(a, b):
    return tuple(p - q for p, q in zip(a, b))


def hilbert_basis(sub, bound=6):
    """Indecomposable monoid elements of degree <= bound.

    An element of degree d is decomposable iff subtracting some earlier
    generator leaves a monoid element (which, having smaller degree, is
    generated by induction).  Returns the sorted list of (mu, x) pairs.
    """
    basis = []
    for d in range(1, bound + 1):
        new = []
        for mu, x in members_of_degree(sub, d):
            if not any(is_member(sub, _minus(mu, hm), _minus(x, hx)) for hm, hx in basis):
                new.append((mu, x))
        basis.extend(new)
    return sorted(basis, key=lambda e: (sum(e[1]), tuple(-v for v in e[1]), e[0]))


def generated_up_to(sub, gens, bound):
    """All sums of generators of degree <= bound (the zero element included)."""
    zero = ((0,) * sub.rs.rank, (0,) * len(sub.rs.psis))
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for mu, x in frontier:
            for gm, gx in gens:
                e = (tuple(a + b for a, b in zip(mu, gm)), tuple(a + b for a, b in zip(x, gx)))
                if sum(e[1]) <= bound and e not in seen:
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return seen


def hilbert_report(sub, bound=6):
    """Basis plus the checks: generation to ``bound``, minimality, stability between bound-1 and bound."""
    basis = hilbert_basis(sub, bound)
    members = {((0,) * sub.rs.rank, (0,) * len(sub.rs.psis))}
    for d in range(1, bound + 1):
        members.update(members_of_degree(sub, d))
    generates = generated_up_to(sub, basis, bound) == members
    minimal = all(g not in generated_up_to(sub, [h for h in basis if h != g], sum(g[1]))
                  for g in basis)
    previous = hilbert_basis(sub, bound - 1) if bound > 1 else []
    return {
        "basis": basis,
        "bound": bound,
        "generates": generates,
        "minimal": minimal,
        "stable": previous == basis,
        "members_checked": len(members),
    }


def filtration_finitely_generated(sub, gamma0, bound=6):
    """Check that the pieces L_x, |x| <= bound, are generated by those indexed by gamma0.

    Generation means L_x = union over tau + s = x, s in gamma0, of L_tau + L_s.
    """
    n = len(sub.rs.psis)
    gamma0 = [tuple(g) for g in gamma0]
    for total in range(bound + 1):
        for x in degrees(n, total):
            target = set(filtration_set(sub, x))
            got = set()
            for s in gamma0:
                tau = _minus(x, s)
                if min(tau, default=0) < 0:
                    continue
                for a in filtration_set(sub, tau):
                    for b in filtration_set(sub, s):
                        got.add(tuple(p + q for p, q in zip(a, b)))
            if got != target:
                return False
    return True


# -- truncation --------------------------------------------------------------------------

def trunc_hypothesis(sub, psi):
    """Raise DomainError unless psi^vee is outside span(L) and some root of L^perp is positive on psi^vee."""
    rs = sub.rs
    if sub.spans(psi.coweight):
        raise DomainError(f"coweight of psi {psi.id} lies in the span of the sublattice")
    good = [a for a in sub.perp_roots if rs.pairing(a, psi.coweight) > 0]
    if not good:
        raise DomainError(f"no root orthogonal to the sublattice is positive on the coweight of psi {psi.id}")
    return good


def trunc_check(sub, psi, x):
    """L_x = L_{x + e_psi}, after checking the hypothesis."""
    trunc_hypothesis(sub, psi)
    y = tuple(v + (1 if i == psi.id else 0) for i, v in enumerate(x))
    return filtration_set(sub, x) == filtration_set(sub, y)


def trunc_differs(sub, psi, x):
    y = tuple(v + (1 if i == psi.id else 0) for i, v in enumerate(x))
    return filtration_set(sub, x) != filtration_set(sub, y)


def _candidates(sub, top):
    """Points of L in the polytope with every bound equal to ``top``, with their psi pairings."""
    rs = sub.rs
    pts = filtration_set(sub, (top,) * len(rs.psis))
    return [(mu, tuple(dot(p.weight, mu) for p in rs.psis)) for mu in pts]


def trunc_sweep(sub, max_coord=5, min_coord=0, ignore_hypothesis=False):
    """Run the truncation comparison on every x in [min_coord, max_coord]^Psi.

    Returns a report: the psis that satisfy the hypothesis (all psis with
    ``ignore_hypothesis``), failures among regular x, one non-regular x where
    the two pieces differ (if any), the psis that violate the hypothesis, and
    the least regularity from which on every tested x passes.
    """
    rs = sub.rs
    usable, skipped = [], []
    for p in rs.psis:
        try:
            trunc_hypothesis(sub, p)
            usable.append(p)
        except DomainError as e:
            skipped.append({"psi": p.id, "reason": str(e)})
            if ignore_hypothesis:
                usable.append(p)
    # L_{x + e_psi} minus L_x: points whose psi pairing is x_psi + 1, the rest within x
    cands = _candidates(sub, max_coord + 1)
    cases = 0
    failures = []
    nonregular_witness = None
    worst = None
    for x in product(range(min_coord, max_coord + 1), repeat=len(rs.psis)):
        reg = tp.coords_regularity(rs, x)
        for p in usable:
            k = p.id
            differs = any(pair[k] == x[k] + 1
                          and all(v <= x[j] for j, v in enumerate(pair) if j != k)
                          for _, pair in cands)
            if reg >= 1:
                cases += 1
                if differs:
                    failures.append({"psi": k, "x": list(x)})
            if differs:
                worst = reg if worst is None else max(worst, reg)
                if reg < 1 and nonregular_witness is None:
                    nonregular_witness = {"psi": k, "x": list(x), "regularity": reg}
    return {
        "usable_psis": [p.id for p in usable],
        "skipped_psis": skipped,
        "regular_cases": cases,
        "failures": failures,
        "nonregular_difference": nonregular_witness,
        "threshold": None if worst is None else worst + 1,
    }
