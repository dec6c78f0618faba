"""Small exact linear algebra over the rationals.

Everything here works on short integer or :class:`~fractions.Fraction`
vectors (dimension at most 3 in practice).  sympy does the heavy lifting for
null spaces and inverses; the results are converted back to plain Python
numbers so the hot loops never touch sympy objects.
"""

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd, lcm

import sympy


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def integral(vec):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    vec = [Fraction(x) for x in vec]
    den = reduce(lcm, (x.denominator for x in vec), 1)
    ints = [int(x * den) for x in vec]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def inverse(matrix):
    """Exact inverse of a square integer/rational matrix as nested Fractions."""
    inv = sympy.Matrix(matrix).inv()
    return [[Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(inv.cols)]
            for i in range(inv.rows)]


def nullspace(rows, dim):
    """Integer basis of {h : dot(h, r) = 0 for every r in rows}."""
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    ns = sympy.Matrix(rows).nullspace()
    return [integral([Fraction(int(v[i].p), int(v[i].q)) for i in range(dim)]) for v in ns]


def rank(rows):
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


class Cone:
    """The closed convex cone spanned by finitely many vectors, in H-form.

    Membership of ``v`` is decided by a list of equalities (the annihilator
    of the span) and a list of facet inequalities.  Facets of a cone of
    dimension ``d`` are spanned by ``d - 1`` independent generators, so they
    are found by enumerating such subsets; at rank <= 3 this is instant.
    """

    def __init__(self, generators, dim):
        self.dim = dim
        self.generators = [tuple(g) for g in generators if any(g)]
        gens = self.generators
        self.equalities = nullspace(gens, dim)
        d = dim - len(self.equalities)
        self.span_dim = d
        facets = set()
        if d > 0:
            for subset in combinations(range(len(gens)), d - 1):
                rows = [gens[i] for i in subset]
                if rank(rows) != d - 1:
                    continue
                normal = None
                for h in nullspace(rows, dim):
                    if any(dot(h, g) for g in gens):
                        normal = h
                        break
                if normal is None:
                    continue
                signs = {(dot(normal, g) > 0) - (dot(normal, g) < 0) for g in gens}
                if 1 in signs and -1 in signs:
                    continue
                if -1 in signs:
                    normal = tuple(-x for x in normal)
                facets.add(normal)
        self.facets = sorted(facets)
        # pointed iff no generator lies on every facet hyperplane
        self.pointed = all(any(dot(h, g) > 0 for h in self.facets) for g in gens)
        self.positive_functional = None
        if self.pointed and gens:
            self.positive_functional = tuple(sum(col) for col in zip(*self.facets))
            assert all(dot(self.positive_functional, g) > 0 for g in gens)

    def __contains__(self, v):
        if any(dot(h, v) for h in self.equalities):
            return False
        return all(dot(h, v) >= 0 for h in self.facets)

    def lineality(self):
        """Generators g whose negative also lies in the cone."""
        return [g for g in self.generators if tuple(-x for x in g) in self]
