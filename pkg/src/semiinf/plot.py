"""Static SVG pictures of alcove sets for rank-2 root systems.

Points of V are placed in the plane through a Cholesky factor of the
W-invariant form ``(x, y) = sum over positive roots of <a, x><a, y>``, so
chambers and alcoves keep their true angles.  Output depends only on the
input set: elements are drawn in canonical order and numbers are printed
with a fixed number of decimals.
"""

import math
from itertools import product

from semiinf import affine_weyl as aw
from semiinf.rootsystem import DomainError

CANVAS = 640
PAD = 20


def _embedding(rs):
    pos = range(rs.n_pos)
    g = [[sum(rs.root_fn[k][i] * rs.root_fn[k][j] for k in pos) for j in range(2)] for i in range(2)]
    l11 = math.sqrt(g[0][0])
    l21 = g[1][0] / l11
    l22 = math.sqrt(g[1][1] - l21 * l21)
    # x = (x1, x2) in coroot coordinates -> L^T x
    return lambda x: (l11 * float(x[0]) + l21 * float(x[1]), l22 * float(x[1]))


def alcove_polygon(rs, w):
    return [aw.act_point(rs, w, v) for v in rs.alcove_vertices]


def window_elements(rs, radius):
    """All elements whose translation lies in [-radius, radius]^2."""
    out = []
    for mu in product(range(-radius, radius + 1), repeat=2):
        for u in range(len(rs.weyl)):
            out.append(aw.Element(mu, u))
    return sorted(out, key=lambda w: aw.sort_key(rs, w))


def radius_for(elements, margin=1):
    return max((abs(x) for w in elements for x in w.translation), default=0) + margin


def render(rs, shaded, radius, title=""):
    """SVG text: every alcove of the window outlined, members of ``shaded`` filled."""
    if rs.rank != 2:
        raise DomainError(f"alcove pictures need rank 2, got rank {rs.rank} ({rs.cartan_type})")
    emb = _embedding(rs)
    shaded = set(shaded)
    cells = []
    for w in window_elements(rs, radius):
        pts = [emb(p) for p in alcove_polygon(rs, w)]
        cells.append((w, pts))
    xs = [x for _, pts in cells for x, _ in pts]
    ys = [y for _, pts in cells for _, y in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    s = (CANVAS - 2 * PAD) / max(x1 - x0, y1 - y0)

    def fmt(p):
        # flip y so the picture reads with y upward
        return f"{PAD + (p[0] - x0) * s:.3f},{PAD + (y1 - p[1]) * s:.3f}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" '
        f'viewBox="0 0 {CANVAS} {CANVAS}">',
        f"<title>{title}</title>" if title else "<title>alcoves</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    count = 0
    for w, pts in cells:
        inside = w in shaded
        count += inside
        fill = "#4a7ab5" if inside else "none"
        ident = f"{list(w.translation)}:{''.join(map(str, rs.weyl_words[w.finite])) or 'e'}"
        lines.append(f'<polygon points="{" ".join(fmt(p) for p in pts)}" fill="{fill}" '
                     f'stroke="#999" stroke-width="0.5" data-w="{ident}"/>')
    base = [emb(p) for p in alcove_polygon(rs, aw.identity(rs))]
    lines.append(f'<polygon points="{" ".join(fmt(p) for p in base)}" fill="none" '
                 f'stroke="#c33" stroke-width="1.5"/>')
    lines.append("</svg>")
    outside = len(shaded) - count
    return "\n".join(lines) + "\n", count, outside
