"""Dimension sequences and ghost multiplicities.

Weights in the class are indexed by ``k_bullet >= 0`` with
``k = k_eps + k_bullet * (p - 1)``. All functions take the index, not ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ghostseries.params import GhostParams

__all__ = [
    "DimTriple",
    "Weight",
    "d_iw",
    "d_iw_array",
    "d_new",
    "d_ur",
    "d_ur_array",
    "dims",
    "multiplicity",
    "support",
    "support_bound",
    "weight_k",
]


@dataclass(frozen=True)
class Weight:
    """An arithmetic weight ``k = k_eps + k_bullet (p - 1)`` of the class."""

    params: GhostParams
    k_bullet: int

    def __post_init__(self):
        if self.k_bullet < 0:
            raise ValueError(f"k_bullet must be >= 0, got {self.k_bullet}")

    @property
    def k(self) -> int:
        return weight_k(self.params, self.k_bullet)

    @classmethod
    def from_k(cls, params: GhostParams, k: int) -> Weight:
        k_bullet, rem = divmod(k - params.derived.k_eps, params.p - 1)
        if rem or k_bullet < 0:
            raise ValueError(f"k={k} is not a weight of the class k = {params.derived.k_eps} mod {params.p - 1}, k >= 2")
        return cls(params, k_bullet)


@dataclass(frozen=True)
class DimTriple:
    d_ur: int
    d_iw: int
    d_new: int

    def to_dict(self) -> dict:
        return {"d_ur": self.d_ur, "d_iw": self.d_iw, "d_new": self.d_new}


def weight_k(params: GhostParams, k_bullet: int) -> int:
    return params.derived.k_eps + k_bullet * (params.p - 1)


def d_iw(params: GhostParams, k_bullet: int) -> int:
    return 2 * k_bullet + 2 - 2 * params.derived.delta


def d_ur(params: GhostParams, k_bullet: int) -> int:
    c = params.derived
    q = params.p + 1
    # Python floor division rounds toward -inf, as required for k_bullet < t
    return (k_bullet - c.t1) // q + (k_bullet - c.t2) // q + 2


def d_new(params: GhostParams, k_bullet: int) -> int:
    return d_iw(params, k_bullet) - 2 * d_ur(params, k_bullet)


def dims(params: GhostParams, k_bullet: int) -> DimTriple:
    ur, iw = d_ur(params, k_bullet), d_iw(params, k_bullet)
    new = iw - 2 * ur
    if new < 0:
        raise ArithmeticError(f"d_new={new} < 0 at k_bullet={k_bullet} for {params}")
    return DimTriple(ur, iw, new)


def d_ur_array(params: GhostParams, ks: np.ndarray) -> np.ndarray:
    c = params.derived
    q = params.p + 1
    return np.floor_divide(ks - c.t1, q) + np.floor_divide(ks - c.t2, q) + 2


def d_iw_array(params: GhostParams, ks: np.ndarray) -> np.ndarray:
    return 2 * ks + 2 - 2 * params.derived.delta


def multiplicity(params: GhostParams, n: int, k_bullet: int) -> int:
    """Exponent of the ``(w - w_k)`` factor in the n-th ghost coefficient."""
    ur = d_ur(params, k_bullet)
    top = d_iw(params, k_bullet) - ur
    if ur < n < top:
        return min(n - ur, top - n)
    return 0


def support_bound(params: GhostParams, n: int) -> int:
    """Largest ``k_bullet`` that can carry a nonzero multiplicity at index ``n``.

    From ``d_ur >= 2 k_bullet / (p + 1) - 2`` and ``d_ur < n``.
    """
    return -(-(params.p + 1) * (n + 2) // 2)


def support(params: GhostParams, n: int) -> range:
    """Window of ``k_bullet`` containing every weight with ``m_n(k) > 0``."""
    return range(0, support_bound(params, n) + 1)
