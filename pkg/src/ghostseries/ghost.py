"""Valuations of ghost coefficients at arithmetic weights, and Δ profiles.

The n-th ghost coefficient is ``prod_k (w - w_k)^{m_n(k)}``; at ``w = w_{k'}``
its valuation is ``sum_k m_n(k) (vp(k - k') + 1)``, infinite as soon as
``m_n(k') > 0``. Two routes compute it:

* :func:`gn_valuation` sums over the support window one index at a time;
* :func:`coefficient_arrays` produces every index ``0..n_max`` in one pass,
  using that ``n -> m_n(k)`` is a tent whose second difference is
  ``+1, -2, +1`` at ``d_ur``, ``d_iw / 2`` and ``d_iw - d_ur``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ghostseries.dims import d_iw, d_iw_array, d_new, d_ur, d_ur_array, multiplicity, support, support_bound, weight_k
from ghostseries.hull import hull_values, lower_hull
from ghostseries.params import GhostParams
from ghostseries.valuation import INF, vp_weight_diff, weight_valuations

__all__ = [
    "DeltaProfile",
    "coefficient_arrays",
    "coefficient_valuations",
    "delta_prime",
    "delta_profile",
    "gn_hat_valuation",
    "gn_valuation",
]


def gn_valuation(params: GhostParams, n: int, eval_bullet: int) -> int | float:
    """Valuation of ``g_n(w_k)`` where ``k`` has index ``eval_bullet``."""
    total = 0
    for kb in support(params, n):
        m = multiplicity(params, n, kb)
        if m:
            total += m * vp_weight_diff(params.p, kb, eval_bullet)
    return total


def gn_hat_valuation(params: GhostParams, n: int, eval_bullet: int, hat_bullet: int) -> int | float:
    """Valuation of ``g_n`` with the ``(w - w_hat)`` factors removed."""
    total = 0
    for kb in support(params, n):
        if kb == hat_bullet:
            continue
        m = multiplicity(params, n, kb)
        if m:
            total += m * vp_weight_diff(params.p, kb, eval_bullet)
    return total


def coefficient_arrays(
    params: GhostParams, eval_bullet: int, n_max: int, hat_bullet: int | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Valuations of ``g_0 .. g_{n_max}`` at ``w_k`` in one vectorized pass.

    Returns:
        ``(values, infinite)``: int64 valuations and a boolean mask of the
        indices where the coefficient vanishes (value there is meaningless).
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    width = support_bound(params, n_max) + 1
    ks = np.arange(width, dtype=np.int64)
    ur = d_ur_array(params, ks)
    iw = d_iw_array(params, ks)
    if np.any(iw - 2 * ur < 0):
        raise ArithmeticError(f"negative d_new inside window for {params}")
    weights = weight_valuations(params.p, eval_bullet, width)
    for skip in (eval_bullet, hat_bullet):
        if skip is not None and 0 <= skip < width:
            weights[skip] = 0

    acc = np.zeros(n_max + 2, dtype=np.int64)
    for knots, coef in ((ur, 1), (iw // 2, -2), (iw - ur, 1)):
        idx = knots + 1
        keep = idx <= n_max
        np.add.at(acc, idx[keep], coef * weights[keep])
    values = np.cumsum(np.cumsum(acc))[: n_max + 1]

    infinite = np.zeros(n_max + 1, dtype=bool)
    if eval_bullet != hat_bullet:
        lo = d_ur(params, eval_bullet)
        hi = d_iw(params, eval_bullet) - lo
        infinite[max(lo + 1, 0) : min(hi, n_max + 1)] = True
    return values, infinite


def coefficient_valuations(
    params: GhostParams, eval_bullet: int, n_max: int, hat_bullet: int | None = None
) -> list[int | float]:
    """Same as :func:`coefficient_arrays` but as a list with ``INF`` entries."""
    values, infinite = coefficient_arrays(params, eval_bullet, n_max, hat_bullet)
    return [INF if inf else int(v) for v, inf in zip(values.tolist(), infinite.tolist())]


@dataclass(frozen=True)
class DeltaProfile:
    """Tilted valuations ``Δ'`` around ``d_iw / 2`` and their lower convex hull ``Δ``.

    ``raw`` and ``hull`` map ``ell`` in ``[-D, D]`` to exact rationals, with
    ``D = d_new / 2``. ``hull_vertices`` lists only strict vertices.
    """

    k_bullet: int
    k: int
    half_new: int
    raw: dict[int, Fraction] = field(default_factory=dict)
    hull: dict[int, Fraction] = field(default_factory=dict)
    hull_vertices: tuple[int, ...] = ()

    @property
    def empty(self) -> bool:
        return not self.raw

    def gap(self, ell: int) -> Fraction:
        """``Δ_ell - Δ_{ell-1}`` for ``1 <= ell <= D``."""
        if not 1 <= ell <= self.half_new:
            raise ValueError(f"gap index {ell} outside [1, {self.half_new}]")
        return self.hull[ell] - self.hull[ell - 1]

    def to_dict(self) -> dict:
        return {
            "k_bullet": str(self.k_bullet),
            "k": str(self.k),
            "half_new": self.half_new,
            "raw": {str(ell): _frac_str(v) for ell, v in self.raw.items()},
            "hull": {str(ell): _frac_str(v) for ell, v in self.hull.items()},
            "hull_vertices": list(self.hull_vertices),
        }

    @classmethod
    def from_dict(cls, data: dict) -> DeltaProfile:
        return cls(
            k_bullet=int(data["k_bullet"]),
            k=int(data["k"]),
            half_new=int(data["half_new"]),
            raw={int(ell): Fraction(v) for ell, v in data["raw"].items()},
            hull={int(ell): Fraction(v) for ell, v in data["hull"].items()},
            hull_vertices=tuple(int(v) for v in data["hull_vertices"]),
        )


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _check_even(params: GhostParams, k_bullet: int) -> tuple[int, int]:
    iw, new = d_iw(params, k_bullet), d_new(params, k_bullet)
    if iw % 2 or new % 2:
        raise ArithmeticError(f"d_iw={iw}, d_new={new} must be even")
    if new < 0:
        raise ArithmeticError(f"d_new={new} < 0 at k_bullet={k_bullet}")
    return iw // 2, new // 2


def delta_prime(params: GhostParams, k_bullet: int, ell: int) -> Fraction:
    """``Δ'_{k,ell}``: hat-valuation at index ``d_iw/2 + ell`` minus ``(k-2)/2 * ell``."""
    half_iw, half_new = _check_even(params, k_bullet)
    if abs(ell) > half_new:
        raise ValueError(f"ell={ell} outside [-{half_new}, {half_new}]")
    v = gn_hat_valuation(params, half_iw + ell, k_bullet, k_bullet)
    return v - Fraction(weight_k(params, k_bullet) - 2, 2) * ell


@lru_cache(maxsize=1024)
def delta_profile(params: GhostParams, k_bullet: int) -> DeltaProfile:
    half_iw, half_new = _check_even(params, k_bullet)
    k = weight_k(params, k_bullet)
    if half_new == 0:
        return DeltaProfile(k_bullet, k, 0)
    values, _ = coefficient_arrays(params, k_bullet, half_iw + half_new, hat_bullet=k_bullet)
    ells = range(-half_new, half_new + 1)
    # hull on doubled values keeps every coordinate an integer
    doubled = [(ell, 2 * int(values[half_iw + ell]) - (k - 2) * ell) for ell in ells]
    verts = lower_hull(doubled)
    raw = {ell: Fraction(y, 2) for ell, y in doubled}
    hull = {ell: y / 2 for ell, y in hull_values(verts).items()}
    return DeltaProfile(k_bullet, k, half_new, raw, hull, tuple(x for x, _ in verts))
