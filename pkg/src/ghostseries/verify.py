"""Verification harness: local constancy of slope multisets and the inequality suite.

Theorem-level entry points (:func:`slope_multisets_equal`,
:func:`check_local_constancy`, :func:`check_main_proposition`) take actual
weights ``k``; everything else in the package works with ``k_bullet``.

Every check returns a :class:`CheckResult` whose status is ``"pass"``,
``"fail"`` or ``"vacuous"`` (hypothesis never met). Failures carry the
inputs needed to reproduce them.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ghostseries.dims import Weight, d_iw, d_new, d_ur, multiplicity, support_bound, weight_k
from ghostseries.ghost import _frac_str, delta_profile
from ghostseries.hull import hull_segments
from ghostseries.newton import CertificationError, SlopeMultiset, certified_slopes
from ghostseries.params import GhostParams, beta, eta, theta, validate
from ghostseries.steinberg import (
    all_ns_ranges,
    exclusion_check,
    l_value,
    maximal_of,
    ns_range,
    vertex_correspondence,
)
from ghostseries.valuation import max_vp_interval, sum_vp, vp, vp_weight_diff

__all__ = [
    "CheckResult",
    "LEMMA_CHECKS",
    "VerificationReport",
    "WeightFamily",
    "check_local_constancy",
    "check_main_proposition",
    "default_eval_weights",
    "default_grid",
    "figure_constants",
    "figure_envelope",
    "halfint_refinement_check",
    "lemma_suite",
    "run_grid",
    "sharpness_search",
    "slope_multisets_equal",
]

MAX_COUNTEREXAMPLES = 20
THREADS_ENV = "GHOSTSERIES_THREADS"


@dataclass
class CheckResult:
    name: str
    status: str
    checked: int = 0
    vacuous: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "name": self.name,
            "status": self.status,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "counterexamples": self.counterexamples,
            "note": self.note,
        }
        if timing:
            out["elapsed"] = self.elapsed
        return out

    @classmethod
    def from_dict(cls, data: dict) -> CheckResult:
        return cls(
            name=data["name"],
            status=data["status"],
            checked=int(data["checked"]),
            vacuous=int(data["vacuous"]),
            counterexamples=list(data["counterexamples"]),
            elapsed=float(data.get("elapsed", 0.0)),
            note=data.get("note", ""),
        )


@dataclass
class VerificationReport:
    grid: list[dict]
    checks: list[CheckResult]
    runtime: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, timing: bool = False) -> dict:
        out = {"grid": self.grid, "ok": self.ok, "checks": [c.to_dict(timing) for c in self.checks]}
        if timing:
            out["runtime"] = self.runtime
        return out

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        return cls(
            grid=list(data["grid"]),
            checks=[CheckResult.from_dict(c) for c in data["checks"]],
            runtime=float(data.get("runtime", 0.0)),
        )


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.vacuous = 0
        self.failures: list[dict] = []
        self.n_failures = 0
        self.note = ""
        self._t0 = time.perf_counter()

    def check(self, ok: bool, **payload) -> None:
        self.checked += 1
        if not ok:
            self.n_failures += 1
            if len(self.failures) < MAX_COUNTEREXAMPLES:
                self.failures.append({k: _jsonable(v) for k, v in payload.items()})

    def skip(self) -> None:
        self.vacuous += 1

    def result(self) -> CheckResult:
        if self.n_failures:
            status = "fail"
        elif self.checked == 0:
            status = "vacuous"
        else:
            status = "pass"
        note = self.note
        if self.n_failures > len(self.failures):
            note = (note + f"; {self.n_failures} failures, first {len(self.failures)} shown").lstrip("; ")
        return CheckResult(
            self.name, status, self.checked, self.vacuous, self.failures, time.perf_counter() - self._t0, note
        )


def _jsonable(v):
    if isinstance(v, Fraction):
        return _frac_str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, int) and not isinstance(v, bool) and abs(v) >= 2**53:
        return str(v)
    return v


# ---------------------------------------------------------------------------
# weight families and the slope theorem


@dataclass(frozen=True)
class WeightFamily:
    """Weights of the class congruent to ``k1`` modulo ``(p - 1) p^m``."""

    params: GhostParams
    k1: int
    m: int

    @property
    def modulus(self) -> int:
        return (self.params.p - 1) * self.params.p**self.m

    @property
    def k0_min(self) -> int:
        kb = Weight.from_k(self.params, self.k1).k_bullet % self.params.p**self.m
        return weight_k(self.params, kb)

    @property
    def k0_max(self) -> int:
        return self.k0_min + self.modulus

    def __contains__(self, k: int) -> bool:
        return k >= 2 and (k - self.k1) % self.modulus == 0

    def members(self, count: int) -> list[int]:
        return [self.k0_min + i * self.modulus for i in range(count)]


@dataclass(frozen=True)
class ConstancyResult:
    k1: int
    k2: int
    bound: Fraction
    equal: bool
    first: SlopeMultiset
    second: SlopeMultiset

    def to_dict(self) -> dict:
        return {
            "k1": str(self.k1),
            "k2": str(self.k2),
            "bound": _frac_str(self.bound),
            "equal": self.equal,
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
        }


def _certified(params, k_bullet, bound, n_max=None):
    kwargs = {} if n_max is None else {"n_max": n_max}
    ms = certified_slopes(params, k_bullet, bound, **kwargs)
    if not ms.certified:
        raise CertificationError(f"k_bullet={k_bullet}, bound={bound}: {ms.certificate}")
    return ms


def slope_multisets_equal(params: GhostParams, k1: int, k2: int, bound, n_max: int | None = None) -> ConstancyResult:
    """Compare certified slope multisets ``<= bound`` at two weights.

    Raises:
        CertificationError: if either side cannot be certified.
    """
    b1, b2 = Weight.from_k(params, k1).k_bullet, Weight.from_k(params, k2).k_bullet
    first = _certified(params, b1, bound, n_max)
    second = _certified(params, b2, bound, n_max)
    return ConstancyResult(k1, k2, Fraction(bound), first.entries == second.entries, first, second)


def check_local_constancy(params: GhostParams, m: int, k1: int, pair_count: int) -> CheckResult:
    """Pairs ``(k1, k1 + t (p-1) p^m)``, ``t = 1..pair_count``, at slope bound ``m - 4``."""
    if m < 4:
        raise ValueError("m must be >= 4")
    tally = _Tally("local_constancy")
    family = WeightFamily(params, k1, m)
    # the automorphic statement also asks k > m - 3; the ghost-side one needs k >= 2 only
    tally.note = f"m={m}, k1={k1}, bound={m - 4}, k1>m-3: {k1 > m - 3}"
    for t in range(1, pair_count + 1):
        k2 = k1 + t * family.modulus
        res = slope_multisets_equal(params, k1, k2, m - 4)
        tally.check(
            res.equal,
            k1=k1,
            k2=k2,
            first=[[s, n] for s, n in res.first.entries],
            second=[[s, n] for s, n in res.second.entries],
        )
    return tally.result()


def check_main_proposition(params: GhostParams, tilde_k: int, k0: int, m: int) -> CheckResult:
    """Slope of the segment starting at ``n0 = d_ur(k0)`` in ``NP(G(w_tilde))``.

    It must be at least ``min(m - 4, (k0 - 2) / 2)`` whenever ``n0`` dominates
    ``d_iw - d_ur`` of every smaller member of the family of ``k0``.
    """
    tally = _Tally("main_proposition")
    family = WeightFamily(params, k0, m)
    if tilde_k not in family:
        raise ValueError(f"{tilde_k} is not congruent to {k0} mod {family.modulus}")
    k0b = Weight.from_k(params, k0).k_bullet
    n0 = d_ur(params, k0b)
    step = params.p**m
    for kb in range(k0b - step, -1, -step):
        top = d_iw(params, kb) - d_ur(params, kb)
        if n0 < top:
            tally.skip()
            tally.note = f"hypothesis fails: d_ur(k0)={n0} < {top} at k={weight_k(params, kb)}"
            return tally.result()
    target = min(Fraction(m - 4), Fraction(k0 - 2, 2))
    tb = Weight.from_k(params, tilde_k).k_bullet
    bound = max(target, Fraction(0))
    while True:
        ms = _certified(params, tb, bound)
        if ms.prefix[-1][0] > n0:
            break
        bound = 2 * bound + 1
    xs = [x for x, _ in ms.prefix]
    if n0 not in xs:
        tally.skip()
        tally.note = f"no segment starts at n0={n0}"
        return tally.result()
    i = xs.index(n0)
    slope = hull_segments(ms.prefix[i : i + 2])[0][0]
    tally.note = f"n0={n0}, segment {ms.prefix[i][0]}->{ms.prefix[i + 1][0]} slope {slope}, target {target}"
    tally.check(slope >= target, tilde_k=tilde_k, k0=k0, m=m, n0=n0, slope=slope, target=target)
    return tally.result()


def sharpness_search(params: GhostParams, m: int, k1: int, pair_count: int) -> list[ConstancyResult]:
    """Pairs whose multisets differ at bound ``m - 3``; diagnostic only."""
    family = WeightFamily(params, k1, m)
    found = []
    for t in range(1, pair_count + 1):
        res = slope_multisets_equal(params, k1, k1 + t * family.modulus, m - 3)
        if not res.equal:
            found.append(res)
    return found


# ---------------------------------------------------------------------------
# envelope of the gap estimate


def figure_envelope(x: int, p: int = 11) -> float:
    """``(p-1)/(p+1) x - 5 - log_p x - floor(log_p(x+1)) - 3 log_p(x+1)^2``."""
    floor_log = 0
    while p ** (floor_log + 1) <= x + 1:
        floor_log += 1
    lg = math.log(x + 1, p)
    return (p - 1) / (p + 1) * x - 5 - math.log(x, p) - floor_log - 3 * lg * lg


def figure_constants(p: int = 11, x_max: int = 1000) -> tuple[float, float]:
    """Minimum of the envelope over ``x in {1, 2}`` and over ``3 <= x <= x_max``.

    Values are floating point and approximate.
    """
    small = min(figure_envelope(x, p) for x in (1, 2))
    large = min(figure_envelope(x, p) for x in range(3, x_max + 1))
    return small, large


def halfint_refinement_check(params: GhostParams, k_bullet: int) -> CheckResult:
    tally = _Tally("halfint_refinement")
    prof = delta_profile(params, k_bullet)
    D = prof.half_new
    if D == 0:
        tally.skip()
        return tally.result()
    value = Fraction(prof.k - 2, 2) - prof.gap(D)
    tally.check(prof.hull[D - 1] == prof.raw[D - 1], k_bullet=k_bullet, what="hull != raw at D-1")
    tally.check((2 * value).denominator == 1, k_bullet=k_bullet, value=value, what="not in Z/2")
    tally.check(value >= -4, k_bullet=k_bullet, value=value, what="below -4")
    return tally.result()


# ---------------------------------------------------------------------------
# lemma suite


def default_eval_weights(params: GhostParams) -> tuple[int, ...]:
    """Three evaluation indices ``k_bullet`` close to small weights p-adically."""
    p = params.p
    return (1 + p**4, 2 + p**3, 3 + 2 * p**2)


def _eval_set(params, kmax):
    return sorted(set(default_eval_weights(params)) | set(range(0, kmax + 1, 5)))


def _derived_constants(params, kmax):
    t = _Tally("derived_constants")
    c = params.derived
    r = params.residue
    t.check(c.delta in (0, 1), delta=c.delta)
    t.check(c.t1 + c.t2 == params.s + r(params.a + params.s) + 2 + 2 * c.delta, t1=c.t1, t2=c.t2)
    t.check(4 <= c.t2 - c.t1 <= params.p - 3, t1=c.t1, t2=c.t2)
    return t.result()


def _theta_values(params, kmax):
    t = _Tally("theta_values")
    for n in (0, 1):
        th = theta(params, n)
        t.check(th in (params.a + 2, params.p - 1 - params.a) and th <= params.p - 3, n=n, theta=th)
        t.check(beta(params, n) == beta(params, n + 2), n=n)
    return t.result()


def _sandwich(params, kmax):
    t = _Tally("sandwich")
    p = params.p
    for kb in range(kmax + 1):
        ur = d_ur(params, kb)
        # 2k/(p+1) - 2 <= d_ur <= 2k/(p+1) + 2, cleared of denominators
        t.check(2 * kb - 2 * (p + 1) <= ur * (p + 1) <= 2 * kb + 2 * (p + 1), k_bullet=kb, d_ur=ur)
    return t.result()


def _monotonicity(params, kmax):
    t = _Tally("monotonicity")
    ur = [d_ur(params, kb) for kb in range(kmax + 1)]
    top = [d_iw(params, kb) - ur[kb] for kb in range(kmax + 1)]
    for k in range(kmax + 1):
        for k2 in range(k + 1, kmax + 1):
            ok = ur[k] <= ur[k2] and top[k] <= top[k2] and (k2 < k + 2 or top[k] < top[k2])
            t.check(ok, k_bullet=k, other=k2)
    return t.result()


def _equal_dims_coprime(params, kmax):
    t = _Tally("equal_dims_unit_difference")
    ur = [d_ur(params, kb) for kb in range(kmax + 1)]
    top = [d_iw(params, kb) - ur[kb] for kb in range(kmax + 1)]
    for k in range(kmax + 1):
        for k2 in range(k + 1, kmax + 1):
            if ur[k] == ur[k2] or top[k] == top[k2]:
                t.check((k2 - k) % params.p != 0, k_bullet=k, other=k2)
            else:
                t.skip()
    return t.result()


def _parity_corollary(params, kmax):
    t = _Tally("parity_corollary")
    c = params.derived
    q = params.p + 1
    for kb in range(kmax + 1):
        A = c.t1 + (kb - c.t1) % q
        if d_ur(params, kb) % 2:
            t.check(A <= c.t2 - 1, k_bullet=kb, A=A)
        else:
            t.check(A >= c.t2, k_bullet=kb, A=A)
    return t.result()


def _d_new_nonnegative(params, kmax):
    t = _Tally("d_new_nonnegative")
    for kb in range(max(kmax, 10**4) + 1):
        t.check(d_new(params, kb) >= 0, k_bullet=kb)
    return t.result()


def _palindrome(params, kmax):
    t = _Tally("multiplicity_palindrome")
    for kb in range(kmax + 1):
        iw = d_iw(params, kb)
        for n in range(iw + 1):
            t.check(multiplicity(params, n, kb) == multiplicity(params, iw - n, kb), k_bullet=kb, n=n)
    return t.result()


def _profiles(params, kmax):
    for kb in range(kmax + 1):
        prof = delta_profile(params, kb)
        if prof.half_new:
            yield kb, prof


def _delta_symmetry(params, kmax):
    t = _Tally("delta_symmetry")
    for kb, prof in _profiles(params, kmax):
        D = prof.half_new
        t.check(all(prof.raw[ell] == prof.raw[-ell] for ell in range(1, D + 1)), k_bullet=kb)
    return t.result()


def _hull_convexity(params, kmax):
    t = _Tally("hull_convexity")
    for kb, prof in _profiles(params, kmax):
        D = prof.half_new
        h = prof.hull
        ok = all(h[ell] <= prof.raw[ell] for ell in range(-D, D + 1))
        ok = ok and h[D] == prof.raw[D] and h[-D] == prof.raw[-D]
        ok = ok and all(h[ell + 1] - 2 * h[ell] + h[ell - 1] >= 0 for ell in range(-D + 1, D))
        t.check(ok, k_bullet=kb)
    return t.result()


def _gap_three_halves(params, kmax):
    t = _Tally("gap_three_halves")
    for kb, prof in _profiles(params, kmax):
        t.check(prof.gap(1) >= Fraction(3, 2), k_bullet=kb, gap=prof.gap(1))
    return t.result()


def _gap_bound_lemma(params, kmax):
    t = _Tally("gap_bound_lemma")
    p = params.p
    for kb in range(kmax + 1):
        n = d_ur(params, kb)
        D = d_new(params, kb) // 2
        k = weight_k(params, kb)
        lhs = Fraction(k - 2, 2) - Fraction((p - 1) * (D - 1) + theta(params, n), 2)
        rhs = Fraction(p - 1, p + 1) * kb - (2 if n % 2 else 1)
        t.check(lhs >= rhs, k_bullet=kb, lhs=lhs, rhs=rhs)
    return t.result()


def _key_minus_four(params, kmax):
    t = _Tally("key_minus_four")
    for kb, prof in _profiles(params, kmax):
        g = prof.gap(prof.half_new)
        t.check(Fraction(prof.k - 2, 2) >= g - 4, k_bullet=kb, gap=g)
    return t.result()


def _hull_deviation(params, kmax):
    t = _Tally("hull_deviation")
    for kb, prof in _profiles(params, kmax):
        D = prof.half_new
        dev = prof.raw[D - 1] - prof.hull[D - 1]
        t.check(dev <= 3 * math.log(D, params.p) ** 2 if D > 1 else dev == 0, k_bullet=kb, deviation=dev)
    return t.result()


def _gamma_bound(params, kmax):
    t = _Tally("gamma_bound")
    p, h = params.p, params.half_p_plus
    for kb, prof in _profiles(params, kmax):
        n, D = d_ur(params, kb), prof.half_new
        lo = eta(params, n, kb) - h * (D - 1)
        hi = eta(params, n, kb) + theta(params, n) + h * (D - 1)
        if not (0 < lo and hi <= p * kb):
            t.skip()
            continue
        gamma = max_vp_interval(p, lo, hi)
        # gamma <= log_p(p k_bullet)
        t.check(p**gamma <= p * kb, k_bullet=kb, gamma=gamma, interval=[lo, hi])
    t.note = "cells where the interval leaves (0, p*k_bullet] count as vacuous"
    return t.result()


def _l_implies_vp(params, kmax):
    t = _Tally("l_implies_vp")
    for ev in _eval_set(params, kmax):
        for kb in range(kmax + 1):
            L = l_value(params, ev, kb)
            if L is None:
                t.skip()
                continue
            t.check(ev == kb or vp(params.p, ev - kb) >= 1, eval_bullet=ev, k_bullet=kb, L=L)
    return t.result()


def _nestedness(params, kmax, evals=None):
    t = _Tally("nestedness")
    for ev in _eval_set(params, kmax) if evals is None else evals:
        ranges = all_ns_ranges(params, ev, kmax, prune=False)
        if len(ranges) == 1:
            t.check(True)
        for i, r in enumerate(ranges):
            for o in ranges[i + 1 :]:
                t.check(r.disjoint(o) or r.within(o) or o.within(r), eval_bullet=ev, first=r.to_dict(), second=o.to_dict())
    return t.result()


def _exclusion(params, kmax, evals=None):
    t = _Tally("exclusion")
    for ev in _eval_set(params, kmax) if evals is None else evals:
        for kb in range(kmax + 1):
            if ns_range(params, ev, kb) is None:
                t.skip()
                continue
            # the hypothesis needs k' close to k p-adically, so add congruent partners past the window
            near = {kb + t * params.p**j for j in (1, 2, 3) for t in (-2, -1, 1, 2)}
            for other in sorted(set(range(kmax + 1)) | {o for o in near if o >= 0}):
                res = exclusion_check(params, ev, kb, other)
                if res.status in ("pass", "fail"):
                    t.check(res.status == "pass", eval_bullet=ev, k_bullet=kb, other=other, detail=res.detail)
                else:
                    t.skip()
    return t.result()


VC_SLOPE_BOUND = 40


def _vertex_correspondence(params, kmax):
    t = _Tally("vertex_correspondence")
    for ev in default_eval_weights(params):
        rep = vertex_correspondence(params, ev, VC_SLOPE_BOUND)
        t.check(rep.ok, eval_bullet=ev, mismatches=list(rep.mismatches))
    return t.result()


def _tool_lemma(params, kmax, samples: int = 2000, seed: int = 0):
    t = _Tally("tool_lemma")
    rng = np.random.default_rng(seed)
    p = params.p
    for _ in range(samples):
        n1 = int(rng.integers(0, 10 * p**3))
        n2 = n1 + int(rng.integers(1, 5 * p**2))
        rep = sum_vp(p, n1, n2)
        t.check(rep.lower_ok and rep.upper_ok, n1=n1, n2=n2, total=rep.total, r=rep.r)
    return t.result()


def _four_part(params, kmax):
    t = _Tally("four_part_lemma")
    p = params.p
    for kb, prof in _profiles(params, kmax):
        D = prof.half_new
        ur, iw = d_ur(params, kb), d_iw(params, kb)
        for ev in (kb, *default_eval_weights(params)):
            if vp_weight_diff(p, ev, kb) < prof.gap(D):
                t.skip()
                continue
            r = ns_range(params, ev, kb)
            ctx = {"eval_bullet": ev, "k_bullet": kb}
            t.check((r.lo, r.hi) == (ur, iw - ur), part=1, **ctx)
            for other in range(kmax + 1):
                ur2 = d_ur(params, other)
                top2 = d_iw(params, other) - ur2
                if other != kb and ur2 <= r.lo and r.hi <= top2:
                    t.check((kb - other) % p != 0, part=2, other=other, **ctx)
            ranges = all_ns_ranges(params, ev, support_bound(params, r.hi))
            t.check(r in maximal_of(ranges), part=3, **ctx)
            slope = Fraction(prof.k - 2, 2)
            ms = _certified(params, ev, slope)
            seg = [(x0, x1, s) for ((x0, _), (x1, _)), (s, _) in zip(zip(ms.prefix, ms.prefix[1:]), hull_segments(ms.prefix))]
            t.check((ur, iw - ur, slope) in seg, part=4, **ctx)
    return t.result()


def _halfint(params, kmax):
    results = [halfint_refinement_check(params, kb) for kb in (1, 2)]
    t = _Tally("halfint_refinement")
    for r in results:
        t.checked += r.checked
        t.vacuous += r.vacuous
        t.failures += r.counterexamples
        t.n_failures += len(r.counterexamples)
    return t.result()


def _figure(params, kmax):
    t = _Tally("figure_constants")
    small, large = figure_constants(11)
    t.check(abs(small + 4.417) < 1e-3 and abs(large + 3.961) < 1e-3, small=small, large=large)
    t.note = f"approximate: {small:.4f}, {large:.4f}"
    return t.result()


LEMMA_CHECKS = {
    "derived_constants": _derived_constants,
    "theta_values": _theta_values,
    "sandwich": _sandwich,
    "monotonicity": _monotonicity,
    "equal_dims_unit_difference": _equal_dims_coprime,
    "parity_corollary": _parity_corollary,
    "d_new_nonnegative": _d_new_nonnegative,
    "multiplicity_palindrome": _palindrome,
    "delta_symmetry": _delta_symmetry,
    "hull_convexity": _hull_convexity,
    "gap_three_halves": _gap_three_halves,
    "gap_bound_lemma": _gap_bound_lemma,
    "key_minus_four": _key_minus_four,
    "hull_deviation": _hull_deviation,
    "gamma_bound": _gamma_bound,
    "l_implies_vp": _l_implies_vp,
    "nestedness": _nestedness,
    "exclusion": _exclusion,
    "vertex_correspondence": _vertex_correspondence,
    "tool_lemma": _tool_lemma,
    "four_part_lemma": _four_part,
    "halfint_refinement": _halfint,
    "figure_constants": _figure,
}


def _run_cell(args):
    (p, a, s, strict), name, kmax = args
    params = validate(p, a, s, strict=strict)
    res = LEMMA_CHECKS[name](params, kmax)
    return (p, a, s), name, res


def _default_threads() -> int:
    return int(os.environ.get(THREADS_ENV, "1"))


def run_grid(
    grid: list[GhostParams], kmax: int, checks: list[str] | None = None, threads: int | None = None
) -> VerificationReport:
    """Run the named checks on every cell of ``grid``.

    Results are merged in ``(p, a, s, check order)`` order regardless of the
    scheduling, so reports are reproducible.
    """
    names = list(LEMMA_CHECKS) if checks is None else list(checks)
    threads = _default_threads() if threads is None else threads
    t0 = time.perf_counter()
    jobs = [((g.p, g.a, g.s, g.strict), name, kmax) for g in grid for name in names]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            out = list(pool.map(_run_cell, jobs))
    else:
        out = [_run_cell(job) for job in jobs]
    order = {name: i for i, name in enumerate(names)}
    out.sort(key=lambda item: (item[0], order[item[1]]))
    checks_out = []
    for (p, a, s), name, res in out:
        res.name = f"{name}[p={p},a={a},s={s}]" if len(grid) > 1 else name
        checks_out.append(res)
    grid_meta = [g.to_dict() for g in grid]
    return VerificationReport(grid_meta, checks_out, time.perf_counter() - t0)


def lemma_suite(params: GhostParams, k_bullet_max: int, threads: int | None = None, checks=None) -> VerificationReport:
    return run_grid([params], k_bullet_max, checks=checks, threads=threads)


def default_grid(primes=(11, 13)) -> list[GhostParams]:
    return [
        validate(p, a, s)
        for p in primes
        for a in range(2, p - 4)
        for s in sorted({0, p // 2, p - 2})
    ]
