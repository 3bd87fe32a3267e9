"""Independent brute-force 2-D geometry used as a test oracle.

Everything here avoids the package's LP machinery on purpose: hull
membership is decided by pairwise segment checks, canonical forms by direct
domination filtering, and decomposability by a quarter-step grid search
over the edge-scaling parameterization.
"""

from fractions import Fraction
from itertools import product

QUARTERS = [Fraction(k, 4) for k in range(5)]


def member2(p, pts):
    """p in conv(pts) + R^2_+ by exhaustive pair checks."""
    for q in pts:
        if q[0] <= p[0] and q[1] <= p[1]:
            return True
    for q1 in pts:
        for q2 in pts:
            dx = q1[0] - q2[0]
            dy = q1[1] - q2[1]
            # need lam in [0,1] with lam*dx <= p.x - q2.x and lam*dy <= p.y - q2.y
            lo, hi = Fraction(0), Fraction(1)
            for d, rhs in ((dx, p[0] - q2[0]), (dy, p[1] - q2[1])):
                if d > 0:
                    hi = min(hi, rhs / d)
                elif d < 0:
                    lo = max(lo, rhs / d)
                elif rhs < 0:
                    lo, hi = Fraction(1), Fraction(0)
            if lo <= hi:
                return True
    return False


def canon2(points):
    pts = sorted({(Fraction(a), Fraction(b)) for a, b in points})
    return tuple(
        p for i, p in enumerate(pts) if not member2(p, pts[:i] + pts[i + 1 :])
    )


def sum2(a, b):
    return canon2([(p[0] + q[0], p[1] + q[1]) for p in a for q in b])


def hom2(a, b):
    """True iff A = c*B + x with c > 0, x >= 0 (vertex tuples, canonical)."""
    if len(a) != len(b):
        return False
    if len(a) == 1:
        (pa,), (pb,) = a, b
        if pb == (0, 0):
            return True
        ratios = [pa[k] / pb[k] for k in range(2) if pb[k] != 0]
        c = min(ratios)
        if c <= 0:
            return False
        return all(pa[k] - c * pb[k] >= 0 for k in range(2))
    da = (a[1][0] - a[0][0], a[1][1] - a[0][1])
    db = (b[1][0] - b[0][0], b[1][1] - b[0][1])
    k0 = 0 if db[0] != 0 else 1
    if db[k0] == 0:
        return False
    c = da[k0] / db[k0]
    if c <= 0:
        return False
    x = (a[0][0] - c * b[0][0], a[0][1] - c * b[0][1])
    if x[0] < 0 or x[1] < 0:
        return False
    return all(
        pa == (c * pb[0] + x[0], c * pb[1] + x[1]) for pa, pb in zip(a, b)
    )


def _verify2(g, k1, k2):
    return sum2(k1, k2) == g and not hom2(k1, g) and not hom2(k2, g)


def _frange(lo, hi):
    """Quarter-step rationals in [lo, hi]."""
    start = lo
    if start * 4 != int(start * 4):
        start = Fraction(int(lo * 4) + 1, 4)
    out = []
    v = start
    while v <= hi:
        out.append(v)
        v += Fraction(1, 4)
    return out


def decomposable_oracle(g):
    """Grid-search decision for canonical 2-D vertex tuples."""
    g = canon2(g)
    if len(g) == 1:
        p = g[0]
        if p[0] > 0 and p[1] > 0:
            return _verify2(g, canon2([(p[0], 0)]), canon2([(0, p[1])]))
        return False
    chain = sorted(g, key=lambda p: (-p[0], p[1]))
    dirs = [
        (chain[i + 1][0] - chain[i][0], chain[i + 1][1] - chain[i][1])
        for i in range(len(chain) - 1)
    ]
    for ts in product(QUARTERS, repeat=len(dirs)):
        shift = [(Fraction(0), Fraction(0))]
        for t, d in zip(ts, dirs):
            last = shift[-1]
            shift.append((last[0] + t * d[0], last[1] + t * d[1]))
        lo = [Fraction(0), Fraction(0)]
        hi = [None, None]
        for v, s in zip(chain, shift):
            for k in range(2):
                lo[k] = max(lo[k], -s[k])
                bound = v[k] - s[k]
                hi[k] = bound if hi[k] is None else min(hi[k], bound)
        if lo[0] > hi[0] or lo[1] > hi[1]:
            continue
        if len(set(ts)) > 1:
            w1 = (lo[0], lo[1])
            k1 = canon2([(w1[0] + s[0], w1[1] + s[1]) for s in shift])
            k2 = canon2(
                [
                    (v[0] - w1[0] - s[0], v[1] - w1[1] - s[1])
                    for v, s in zip(chain, shift)
                ]
            )
            if _verify2(g, k1, k2):
                return True
        else:
            for wx in _frange(lo[0], hi[0]):
                for wy in _frange(lo[1], hi[1]):
                    k1 = canon2([(wx + s[0], wy + s[1]) for s in shift])
                    k2 = canon2(
                        [
                            (v[0] - wx - s[0], v[1] - wy - s[1])
                            for v, s in zip(chain, shift)
                        ]
                    )
                    if _verify2(g, k1, k2):
                        return True
    return False
