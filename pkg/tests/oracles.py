"""Slow, independent reference implementations used only by the tests."""

from fractions import Fraction
from math import floor

INF = float("inf")


def naive_vp(p, n):
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def naive_dims(p, delta, t1, t2, kb):
    ur = floor(Fraction(kb - t1, p + 1)) + floor(Fraction(kb - t2, p + 1)) + 2
    iw = 2 * kb + 2 - 2 * delta
    return ur, iw


def naive_mult(params, n, kb):
    c = params.derived
    ur, iw = naive_dims(params.p, c.delta, c.t1, c.t2, kb)
    if ur < n < iw - ur:
        return min(n - ur, iw - ur - n)
    return 0


def brute_gn(params, n, eval_bullet, hat=None, window=None):
    """Sum over every k_bullet <= window with no support cutoff.

    The default window is twice the package's support bound and never below 500.
    """
    if window is None:
        window = max(500, (params.p + 1) * (n + 2))
    total = 0
    for kb in range(window + 1):
        if kb == hat:
            continue
        m = naive_mult(params, n, kb)
        if not m:
            continue
        if kb == eval_bullet:
            return INF
        total += m * (naive_vp(params.p, kb - eval_bullet) + 1)
    return total


def naive_hull(points):
    """Lower hull vertices: a point survives iff it lies strictly below every chord over it."""
    pts = [(x, y) for x, y in points if y != INF]
    out = []
    for i, (xi, yi) in enumerate(pts):
        keep = True
        for j in range(i):
            for k in range(i + 1, len(pts)):
                (xj, yj), (xk, yk) = pts[j], pts[k]
                chord = Fraction(yj) + Fraction(yk - yj) * (xi - xj) / (xk - xj)
                if yi >= chord:
                    keep = False
                    break
            if not keep:
                break
        if keep:
            out.append((xi, yi))
    return out


def brute_sum_vp(p, n1, n2):
    return sum(naive_vp(p, n) for n in range(n1 + 1, n2 + 1))


def slopes_below(vertices, bound):
    out = []
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]):
        s = Fraction(y1 - y0, x1 - x0)
        if s > bound:
            break
        if out and out[-1][0] == s:
            out[-1][1] += x1 - x0
        else:
            out.append([s, x1 - x0])
    return [tuple(e) for e in out]
