"""Input parameters (p, a, s) and the constants derived from them.

The residual type is fixed by a prime ``p`` and integers ``a`` and ``s``
(the twist ``b`` is normalized to zero). Everything else in the package is
a pure function of these three integers and a weight index ``k_bullet``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property, lru_cache

from sympy import isprime

__all__ = [
    "DerivedConstants",
    "GhostParams",
    "ParameterError",
    "beta",
    "derive",
    "eta",
    "residue_mod_pm1",
    "theta",
    "validate",
]

STRICT_MIN_PRIME = 11
RELAXED_MIN_PRIME = 7


class ParameterError(ValueError):
    """Raised when (p, a, s) violates one or more constraints.

    The individual violations are kept in ``violations`` so callers can
    report all of them at once.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class DerivedConstants:
    k_eps: int
    delta: int
    t1: int
    t2: int

    def to_dict(self) -> dict:
        return {"k_eps": self.k_eps, "delta": self.delta, "t1": self.t1, "t2": self.t2}

    @classmethod
    def from_dict(cls, data: dict) -> DerivedConstants:
        return cls(**{key: int(data[key]) for key in ("k_eps", "delta", "t1", "t2")})


@dataclass(frozen=True)
class GhostParams:
    """Validated ``(p, a, s)``; build with :func:`validate`.

    ``strict=False`` admits primes ``7 <= p < 11``. Such parameters lie
    outside the range where the slope theorems are proved and are flagged by
    ``outside_theorem_range``.
    """

    p: int
    a: int
    s: int
    strict: bool = True

    @property
    def outside_theorem_range(self) -> bool:
        return self.p < STRICT_MIN_PRIME

    @cached_property
    def derived(self) -> DerivedConstants:
        return derive(self)

    @property
    def half_p_plus(self) -> int:
        """``(p + 1) / 2``; an integer since p is odd."""
        return (self.p + 1) // 2

    def residue(self, n: int) -> int:
        return residue_mod_pm1(self.p, n)

    def to_dict(self) -> dict:
        return {"p": self.p, "a": self.a, "s": self.s, "strict": self.strict}

    @classmethod
    def from_dict(cls, data: dict) -> GhostParams:
        return validate(int(data["p"]), int(data["a"]), int(data["s"]), strict=bool(data.get("strict", True)))


def validate(p: int, a: int, s: int, strict: bool = True) -> GhostParams:
    """Check the admissible range of (p, a, s) and return frozen params.

    Raises:
        ParameterError: listing every violated constraint.
    """
    violations = []
    if not isprime(p):
        violations.append(f"p not prime (p={p})")
    else:
        min_p = STRICT_MIN_PRIME if strict else RELAXED_MIN_PRIME
        if p < min_p:
            violations.append(f"p out of range (need p >= {min_p}, got {p})")
    if not 2 <= a <= p - 5:
        violations.append(f"a out of range (need 2 <= a <= {p - 5}, got {a})")
    if not 0 <= s <= p - 2:
        violations.append(f"s out of range (need 0 <= s <= {p - 2}, got {s})")
    if violations:
        raise ParameterError(violations)
    params = GhostParams(p, a, s, strict)
    if params.outside_theorem_range:
        warnings.warn(f"p={p} is outside theorem range (p >= {STRICT_MIN_PRIME})", stacklevel=2)
    return params


def residue_mod_pm1(p: int, n: int) -> int:
    """Representative of ``n`` modulo ``p - 1`` in ``[0, p - 2]``."""
    return n % (p - 1)


@lru_cache(maxsize=None)
def derive(params: GhostParams) -> DerivedConstants:
    p, a, s = params.p, params.a, params.s
    r = params.residue
    numerator = r(a + s) + s - r(a + 2 * s)
    delta, rem = divmod(numerator, p - 1)
    if rem or delta not in (0, 1):
        raise AssertionError(f"delta formula produced {numerator}/{p - 1} for {params}")
    if a + s < p - 1:
        t1, t2 = s + delta, a + s + delta + 2
    else:
        t1, t2 = r(a + s) + delta + 1, s + delta + 1
    return DerivedConstants(k_eps=r(a + 2 * s) + 2, delta=delta, t1=t1, t2=t2)


def beta(params: GhostParams, n: int) -> int:
    """Depends only on the parity of ``n``."""
    c = params.derived
    if n % 2 == 0:
        return c.t1
    return c.t2 - params.half_p_plus


def theta(params: GhostParams, n: int) -> int:
    return beta(params, n - 1) - beta(params, n) + params.half_p_plus


def eta(params: GhostParams, n: int, k_bullet: int) -> int:
    c = params.derived
    return (params.p - 1) // 2 * k_bullet - params.half_p_plus * c.delta + beta(params, n) - 1
