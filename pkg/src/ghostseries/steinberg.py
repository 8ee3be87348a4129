"""Near-Steinberg ranges and their correspondence with Newton polygon segments.

For an evaluation weight ``k_eval`` and a weight ``k`` with ``D = d_new/2 >= 1``,
``L`` is the largest ``ell`` in ``[1, D]`` with
``v(w_eval - w_k) >= Δ_{k,ell} - Δ_{k,ell-1}``; the range is the open interval
``(d_iw/2 - L, d_iw/2 + L)``. When ``k_eval == k`` the valuation is infinite and
``L = D``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ghostseries.dims import d_iw, d_ur, support_bound, weight_k
from ghostseries.ghost import _frac_str, delta_profile
from ghostseries.hull import hull_segments
from ghostseries.newton import CertificationError, certified_slopes
from ghostseries.params import GhostParams
from ghostseries.valuation import vp_weight_diff

__all__ = [
    "CorrespondenceReport",
    "ExclusionResult",
    "NSRange",
    "all_ns_ranges",
    "exclusion_check",
    "l_value",
    "maximal_of",
    "maximal_ns_ranges",
    "ns_range",
    "vertex_correspondence",
]


@dataclass(frozen=True, order=True)
class NSRange:
    """Open interval ``(lo, hi)`` generated by the weight with index ``k_bullet``."""

    lo: int
    hi: int
    k_bullet: int
    L: int

    @property
    def center(self) -> int:
        return (self.lo + self.hi) // 2

    def contains(self, x: int) -> bool:
        return self.lo < x < self.hi

    def closure_contains(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def within(self, other: NSRange) -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def strictly_within(self, other: NSRange) -> bool:
        return self.within(other) and (self.lo, self.hi) != (other.lo, other.hi)

    def disjoint(self, other: NSRange) -> bool:
        return self.hi <= other.lo or other.hi <= self.lo

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "k_bullet": str(self.k_bullet), "L": self.L}

    @classmethod
    def from_dict(cls, data: dict) -> NSRange:
        return cls(int(data["lo"]), int(data["hi"]), int(data["k_bullet"]), int(data["L"]))


def l_value(params: GhostParams, eval_bullet: int, k_bullet: int) -> int | None:
    profile = delta_profile(params, k_bullet)
    if profile.half_new == 0:
        return None
    v = vp_weight_diff(params.p, eval_bullet, k_bullet)
    best = None
    for ell in range(1, profile.half_new + 1):
        if v >= profile.gap(ell):
            best = ell
    return best


def ns_range(params: GhostParams, eval_bullet: int, k_bullet: int) -> NSRange | None:
    L = l_value(params, eval_bullet, k_bullet)
    if L is None:
        return None
    center = d_iw(params, k_bullet) // 2
    return NSRange(center - L, center + L, k_bullet, L)


def all_ns_ranges(params: GhostParams, eval_bullet: int, k_bullet_max: int, prune: bool = True) -> list[NSRange]:
    """Every range generated by ``k_bullet <= k_bullet_max``, ordered by ``k_bullet``.

    With ``prune`` only weights congruent to ``k_eval`` mod p are tried; the
    others have ``v(w_eval - w_k) = 1 < 3/2 <= Δ_{k,1} - Δ_{k,0}``.
    """
    p = params.p
    if prune:
        candidates = range(eval_bullet % p, k_bullet_max + 1, p)
    else:
        candidates = range(0, k_bullet_max + 1)
    out = []
    for kb in candidates:
        r = ns_range(params, eval_bullet, kb)
        if r is not None:
            out.append(r)
    return out


def maximal_of(ranges: list[NSRange]) -> list[NSRange]:
    return [r for r in ranges if not any(r.strictly_within(o) for o in ranges if o is not r)]


def maximal_ns_ranges(params: GhostParams, eval_bullet: int, k_bullet_max: int, prune: bool = True) -> list[NSRange]:
    return maximal_of(all_ns_ranges(params, eval_bullet, k_bullet_max, prune))


@dataclass(frozen=True)
class ExclusionResult:
    status: str  # "pass", "fail", "vacuous" or "skipped"
    detail: str = ""


def exclusion_check(params: GhostParams, eval_bullet: int, k_bullet: int, other_bullet: int) -> ExclusionResult:
    """Check that ``k'`` close enough to ``k`` stays out of the range of ``k``.

    If ``v(w_k' - w_k) >= Δ_{k,L} - Δ_{k,L-1}`` then ``d_iw(k')/2`` avoids the
    closed range and ``d_ur(k')``, ``d_iw(k') - d_ur(k')`` avoid the open one.
    """
    if other_bullet == k_bullet:
        return ExclusionResult("skipped", "k' == k")
    r = ns_range(params, eval_bullet, k_bullet)
    if r is None:
        return ExclusionResult("vacuous", "no range for k")
    gap = delta_profile(params, k_bullet).gap(r.L)
    if vp_weight_diff(params.p, other_bullet, k_bullet) < gap:
        return ExclusionResult("vacuous", "hypothesis false")
    iw, ur = d_iw(params, other_bullet), d_ur(params, other_bullet)
    bad = []
    if r.closure_contains(iw // 2):
        bad.append(f"d_iw/2={iw // 2} in [{r.lo}, {r.hi}]")
    for name, x in (("d_ur", ur), ("d_iw-d_ur", iw - ur)):
        if r.contains(x):
            bad.append(f"{name}={x} in ({r.lo}, {r.hi})")
    if bad:
        return ExclusionResult("fail", "; ".join(bad))
    return ExclusionResult("pass")


@dataclass(frozen=True)
class CorrespondenceReport:
    """Matching of maximal ranges with Newton polygon segments of length >= 2.

    ``matched`` rows are ``(lo, hi, k_bullet, slope)``.
    """

    eval_bullet: int
    slope_bound: Fraction
    prefix_end: int
    window: int
    matched: tuple[tuple[int, int, int, Fraction], ...]
    mismatches: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "eval_bullet": str(self.eval_bullet),
            "slope_bound": _frac_str(self.slope_bound),
            "prefix_end": self.prefix_end,
            "window": self.window,
            "matched": [
                {"lo": lo, "hi": hi, "k_bullet": str(kb), "slope": _frac_str(s)} for lo, hi, kb, s in self.matched
            ],
            "mismatches": list(self.mismatches),
        }


def vertex_correspondence(
    params: GhostParams, eval_bullet: int, slope_bound, n_max: int | None = None
) -> CorrespondenceReport:
    """Match maximal ranges against segments inside the certified prefix.

    Raises:
        CertificationError: when the Newton polygon cannot be certified.
    """
    kwargs = {} if n_max is None else {"n_max": n_max}
    ms = certified_slopes(params, eval_bullet, slope_bound, **kwargs)
    if not ms.certified:
        raise CertificationError(f"uncertified Newton polygon at k_bullet={eval_bullet}: {ms.certificate}")
    prefix = list(ms.prefix)
    end = prefix[-1][0]
    window = support_bound(params, end)
    # weights past the window have d_ur > end, so their ranges miss [0, end]
    assert d_ur(params, window + 1) >= end
    maximal = maximal_of(all_ns_ranges(params, eval_bullet, window))

    segments = {}
    for ((x0, _), (x1, _)), (slope, _) in zip(zip(prefix, prefix[1:]), hull_segments(prefix)):
        segments[(x0, x1)] = slope
    mismatches = []
    matched = []
    covered = set()
    for r in maximal:
        key = (r.lo, r.hi)
        if r.hi <= end:
            if key in segments:
                matched.append((r.lo, r.hi, r.k_bullet, segments[key]))
                covered.add(key)
            else:
                mismatches.append(f"maximal range {key} from k_bullet={r.k_bullet} is not a segment")
        elif r.lo < end:
            mismatches.append(f"maximal range {key} from k_bullet={r.k_bullet} straddles vertex {end}")
    for key in segments:
        if key[1] - key[0] >= 2 and key not in covered:
            mismatches.append(f"segment {key} has no maximal range")
    return CorrespondenceReport(
        eval_bullet, ms.bound, end, window, tuple(sorted(matched)), tuple(mismatches)
    )
