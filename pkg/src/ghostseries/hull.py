"""Exact lower convex hull (monotone chain) shared by Newton polygons and Δ profiles."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

__all__ = ["lower_hull", "hull_segments", "hull_values", "interpolate"]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Iterable[tuple[int, Rational | float]]) -> list[tuple[int, Rational]]:
    """Vertices of the lower convex hull of ``points``, left to right.

    Points whose y-value is infinite are ignored. x-coordinates must be
    strictly increasing. Interior points on a hull edge are not vertices.
    """
    finite = [(x, y) for x, y in points if not (isinstance(y, float) and math.isinf(y))]
    if not finite:
        raise ValueError("lower_hull needs at least one finite point")
    for (x0, _), (x1, _) in zip(finite, finite[1:]):
        if x1 <= x0:
            raise ValueError("x-coordinates must be strictly increasing")
    chain: list[tuple[int, Rational]] = []
    for pt in finite:
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], pt) <= 0:
            chain.pop()
        chain.append(pt)
    return chain


def hull_segments(vertices: Sequence[tuple[int, Rational]]) -> list[tuple[Fraction, int]]:
    """``(slope, horizontal length)`` for each edge between consecutive vertices."""
    return [
        (Fraction(y1 - y0) / (x1 - x0), x1 - x0)
        for (x0, y0), (x1, y1) in zip(vertices, vertices[1:])
    ]


def interpolate(vertices: Sequence[tuple[int, Rational]], x: int) -> Fraction:
    """Value of the piecewise-linear hull at an integer ``x`` inside its span."""
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]):
        if x0 <= x <= x1:
            return Fraction(y0) + Fraction(y1 - y0) * (x - x0) / (x1 - x0)
    if len(vertices) == 1 and vertices[0][0] == x:
        return Fraction(vertices[0][1])
    raise ValueError(f"x={x} outside hull span")


def hull_values(vertices: Sequence[tuple[int, Rational]]) -> dict[int, Fraction]:
    """Hull value at every integer x between the first and last vertex."""
    out = {vertices[0][0]: Fraction(vertices[0][1])}
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]):
        step = Fraction(y1 - y0) / (x1 - x0)
        for i in range(1, x1 - x0 + 1):
            out[x0 + i] = y0 + step * i
    return out
