"""p-adic valuations of integers and of differences of arithmetic weights.

A valuation that may be infinite is an ``int`` or :data:`INF`
(``math.inf``), which compares and adds correctly against ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "INF",
    "ToolLemmaReport",
    "legendre_sum",
    "max_vp_interval",
    "sum_vp",
    "vp",
    "vp_weight_diff",
    "weight_valuations",
]

INF = math.inf


def vp(p: int, n: int) -> int:
    """Exponent of ``p`` in the nonzero integer ``n``.

    >>> vp(11, 14641)
    4
    >>> vp(11, -22)
    1
    """
    if n == 0:
        raise ValueError("vp(0) is infinite; handle zero at the call site")
    n = abs(n)
    v = 0
    # peel off large powers first so huge n costs O(log v) divisions
    while n % p == 0:
        q, e = p, 1
        while n % (q * q) == 0:
            q, e = q * q, e * 2
        n //= q
        v += e
    return v


def vp_weight_diff(p: int, k_bullet: int, other_bullet: int) -> int | float:
    """Valuation of ``w_k - w_k'`` for two weights of the same class.

    Since ``k - k' = (p - 1)(k_bullet - k'_bullet)`` and
    ``v(w_k - w_k') = v(k - k') + 1``.
    """
    if k_bullet == other_bullet:
        return INF
    return vp(p, k_bullet - other_bullet) + 1


def weight_valuations(p: int, eval_bullet: int, count: int) -> np.ndarray:
    """``vp(j - eval_bullet) + 1`` for ``j = 0 .. count - 1`` as int64.

    The entry at ``j == eval_bullet`` (if in range) is meaningless and must be
    masked by the caller.
    """
    out = np.ones(count, dtype=np.int64)
    if count == 0:
        return out
    reach = max(abs(eval_bullet), abs(count - 1 - eval_bullet))
    q = p
    while q <= reach:
        out[eval_bullet % q :: q] += 1
        q *= p
    return out


def legendre_sum(p: int, n: int) -> int:
    """``sum(vp(j) for j in 1..n)`` for ``n >= 0``."""
    total, q = 0, p
    while q <= n:
        total += n // q
        q *= p
    return total


@dataclass(frozen=True)
class ToolLemmaReport:
    total: int
    r: int
    lower: Fraction
    upper: Fraction
    lower_ok: bool
    upper_ok: bool


def sum_vp(p: int, n1: int, n2: int) -> ToolLemmaReport:
    """Exact ``sum(vp(n) for n in (n1, n2])`` with the two-sided bound check.

    ``r`` is the smallest admissible bound on the valuations in the range,
    i.e. their maximum.
    """
    if not n1 < n2:
        raise ValueError(f"need n1 < n2, got ({n1}, {n2})")
    if n1 < 0 < n2 or n2 == 0:
        raise ValueError(f"range ({n1}, {n2}] contains 0")
    if n2 < 0:
        n1, n2 = -n2 - 1, -n1 - 1
    total = legendre_sum(p, n2) - legendre_sum(p, n1)
    r = max_vp_interval(p, n1 + 1, n2)
    lower = Fraction(n2 - n1, p) - 1
    upper = Fraction(n2 - n1, p - 1) + r
    return ToolLemmaReport(total, r, lower, upper, lower <= total, total <= upper)


def max_vp_interval(p: int, lo: int, hi: int) -> int:
    """Largest ``vp(n)`` over the integers ``lo <= n <= hi`` (0 excluded)."""
    if lo > hi:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    if lo <= 0 <= hi:
        raise ValueError(f"interval [{lo}, {hi}] contains 0")
    if hi < 0:
        lo, hi = -hi, -lo
    best, q = 0, p
    # a multiple of q lies in [lo, hi] iff floor(hi/q) >= ceil(lo/q)
    while q <= hi and hi // q >= -(-lo // q):
        best += 1
        q *= p
    return best
