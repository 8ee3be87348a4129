"""Newton polygons of the ghost series at a weight, with certified truncation.

Certification rests on two facts about ``T(n) = sum_k m_n(k)``:

* every linear factor has valuation at least 1, so ``v(g_n) >= T(n)``;
* ``T(n) - T(n-1) = #{k : d_ur < n <= d_iw/2} - #{k : d_iw/2 < n <= d_iw - d_ur}``.
  The first set contains every ``k_bullet`` in ``[n, (p+1)(n-2)/2)`` and the
  second lies inside ``[0, n-1]``, hence
  ``T(n) - T(n-1) >= ceil((p+1)(n-2)/2) - 2n``, strictly increasing in ``n``.

Once that increment is at least the slope bound ``B`` and ``T`` sits strictly
above the line of slope ``B`` through the last kept vertex at one index past
the computed range, it stays above for every later index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from ghostseries.ghost import _frac_str, coefficient_arrays
from ghostseries.dims import multiplicity, support
from ghostseries.hull import hull_segments, lower_hull
from ghostseries.params import GhostParams

__all__ = [
    "CertificationError",
    "NewtonPolygon",
    "SlopeMultiset",
    "certified_slopes",
    "ghost_np",
    "lower_hull",
    "tail_increment_bound",
    "tail_lower_bound",
]

DEFAULT_N_MAX = 10**6


class CertificationError(RuntimeError):
    """A slope multiset could not be certified within the index budget."""


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[tuple[int, int], ...]

    @property
    def segments(self) -> list[tuple[Fraction, int]]:
        return hull_segments(self.vertices)

    def vertex_indices(self) -> list[int]:
        return [x for x, _ in self.vertices]

    def to_dict(self) -> dict:
        return {
            "vertices": [[x, str(v)] for x, v in self.vertices],
            "segments": [{"slope": _frac_str(s), "length": n} for s, n in self.segments],
        }

    @classmethod
    def from_dict(cls, data: dict) -> NewtonPolygon:
        return cls(tuple((int(x), int(v)) for x, v in data["vertices"]))


@dataclass(frozen=True)
class SlopeMultiset:
    """Slopes ``<= bound`` with multiplicities (horizontal segment lengths).

    ``prefix`` holds the Newton polygon vertices up to the last vertex whose
    incoming slope is ``<= bound``; when ``certified`` these agree with the
    untruncated series.
    """

    entries: tuple[tuple[Fraction, int], ...]
    bound: Fraction
    certified: bool
    truncation: int
    prefix: tuple[tuple[int, int], ...] = ()
    certificate: dict = field(default_factory=dict, compare=False)

    @property
    def total(self) -> int:
        return sum(mult for _, mult in self.entries)

    def to_dict(self) -> dict:
        return {
            "entries": [{"slope": _frac_str(s), "mult": m} for s, m in self.entries],
            "bound": _frac_str(self.bound),
            "certified": self.certified,
            "truncation": self.truncation,
            "prefix": [[x, str(v)] for x, v in self.prefix],
            "certificate": {key: str(val) for key, val in self.certificate.items()},
        }

    @classmethod
    def from_dict(cls, data: dict) -> SlopeMultiset:
        return cls(
            entries=tuple((Fraction(e["slope"]), int(e["mult"])) for e in data["entries"]),
            bound=Fraction(data["bound"]),
            certified=bool(data["certified"]),
            truncation=int(data["truncation"]),
            prefix=tuple((int(x), int(v)) for x, v in data["prefix"]),
            certificate=dict(data.get("certificate", {})),
        )


def ghost_np(params: GhostParams, eval_bullet: int, n_max: int) -> NewtonPolygon:
    """Newton polygon of ``g_0 .. g_{n_max}`` evaluated at ``w_k``."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    values, infinite = coefficient_arrays(params, eval_bullet, n_max)
    pts = [(n, int(v)) for n, (v, inf) in enumerate(zip(values.tolist(), infinite.tolist())) if not inf]
    return NewtonPolygon(tuple(lower_hull(pts)))


def tail_lower_bound(params: GhostParams, n: int) -> int:
    """``sum_k m_n(k)``; a lower bound for ``v(g_n)`` at every weight."""
    return sum(multiplicity(params, n, kb) for kb in support(params, n))


def tail_increment_bound(params: GhostParams, n: int) -> int:
    """Lower bound for ``tail_lower_bound(n) - tail_lower_bound(n - 1)``."""
    return -(-(params.p + 1) * (n - 2) // 2) - 2 * n


def _crossover(params: GhostParams, bound: Fraction) -> int:
    n = 1
    while tail_increment_bound(params, n) < bound:
        n += 1
    return n


def _split_at_bound(vertices, bound):
    keep = 0
    for i, (slope, _) in enumerate(hull_segments(vertices), start=1):
        if slope > bound:
            break
        keep = i
    return list(vertices[: keep + 1])


def _group(segments):
    grouped: list[list] = []
    for slope, length in segments:
        if grouped and grouped[-1][0] == slope:
            grouped[-1][1] += length
        else:
            grouped.append([slope, length])
    return tuple((s, n) for s, n in grouped)


def certified_slopes(
    params: GhostParams,
    eval_bullet: int,
    slope_bound: Rational | int,
    n_start: int = 16,
    n_max: int = DEFAULT_N_MAX,
) -> SlopeMultiset:
    """Slope multiset of ``NP(G(w_k, -))`` below ``slope_bound``, certified.

    The truncation doubles from ``n_start`` until the tail argument in the
    module docstring closes. If ``n_max`` is exceeded the result comes back
    with ``certified=False`` and the best uncertified answer.
    """
    bound = Fraction(slope_bound)
    if bound < 0:
        raise ValueError("slope_bound must be >= 0")
    crossover = _crossover(params, bound)
    n = max(n_start, crossover, 1)
    prefix: list = []
    while n <= n_max:
        values, infinite = coefficient_arrays(params, eval_bullet, n)
        pts = [(i, int(v)) for i, (v, inf) in enumerate(zip(values.tolist(), infinite.tolist())) if not inf]
        prefix = _split_at_bound(lower_hull(pts), bound)
        x_last, v_last = prefix[-1]
        tail = tail_lower_bound(params, n + 1)
        line = v_last + bound * (n + 1 - x_last)
        if tail > line:
            return SlopeMultiset(
                entries=_group(hull_segments(prefix)),
                bound=bound,
                certified=True,
                truncation=n,
                prefix=tuple(prefix),
                certificate={
                    "last_vertex": f"({x_last}, {v_last})",
                    "crossover": crossover,
                    "tail_index": n + 1,
                    "tail_lower_bound": tail,
                    "line_value": line,
                },
            )
        if n == n_max:
            break
        n = min(2 * n, n_max)
    return SlopeMultiset(
        entries=_group(hull_segments(prefix)) if prefix else (),
        bound=bound,
        certified=False,
        truncation=n_max,
        prefix=tuple(prefix),
        certificate={"reason": f"no certificate up to n_max={n_max}"},
    )
