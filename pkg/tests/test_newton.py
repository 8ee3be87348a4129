from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ghostseries import validate
from ghostseries.dims import d_ur
from ghostseries.ghost import coefficient_valuations
from ghostseries.hull import lower_hull
from ghostseries.newton import (
    CertificationError,
    NewtonPolygon,
    SlopeMultiset,
    certified_slopes,
    ghost_np,
    tail_increment_bound,
    tail_lower_bound,
)
from conftest import SAMPLE
from oracles import slopes_below

cells = st.sampled_from(SAMPLE).map(lambda c: validate(*c))


def test_ghost_np_examples(p11):
    assert ghost_np(p11, 0, 4).segments == [(0, 1), (3, 1), (10, 1), (13, 1)]
    assert ghost_np(p11, 14642, 3).vertices == ((0, 0), (1, 0), (3, 12))
    for cell in SAMPLE:
        params = validate(*cell)
        # g_1 is constant exactly when no weight has d_ur = 0
        if d_ur(params, 0) >= 1:
            assert ghost_np(params, 5, 1).segments == [(0, 1)]
        else:
            assert coefficient_valuations(params, 5, 1)[1] > 0
    with pytest.raises(ValueError):
        ghost_np(p11, 0, 0)


def test_tail_lower_bound_examples(p11):
    assert [tail_lower_bound(p11, n) for n in (0, 2, 3)] == [0, 3, 12]


def test_certified_examples(p11):
    ms = certified_slopes(p11, 0, 3)
    assert ms.certified and ms.entries == ((0, 1), (3, 1))
    assert certified_slopes(p11, 1, 0).entries == ((0, 1),)
    assert certified_slopes(p11, 14642, 0).entries == ((0, 1),)
    with pytest.raises(ValueError):
        certified_slopes(p11, 0, -1)


def test_budget_exhaustion_is_reported(p11):
    ms = certified_slopes(p11, 0, 30, n_start=4, n_max=8)
    assert not ms.certified
    assert "reason" in ms.certificate


def test_roundtrips(p11):
    ms = certified_slopes(p11, 14642, Fraction(13, 2))
    assert SlopeMultiset.from_dict(ms.to_dict()) == ms
    poly = ghost_np(p11, 14642, 30)
    assert NewtonPolygon.from_dict(poly.to_dict()) == poly


@pytest.mark.parametrize("cell", SAMPLE)
def test_increment_bound_holds(cell):
    params = validate(*cell)
    prev = tail_lower_bound(params, 0)
    for n in range(1, 200):
        cur = tail_lower_bound(params, n)
        assert cur - prev >= tail_increment_bound(params, n)
        prev = cur
    assert all(tail_increment_bound(params, n + 1) > tail_increment_bound(params, n) for n in range(1, 200))


@settings(max_examples=60, deadline=None)
@given(cells, st.integers(0, 10**12), st.fractions(min_value=0, max_value=40, max_denominator=4))
def test_certified_matches_long_truncation(params, ev, bound):
    """Certified multiset equals the one read off a much longer truncation."""
    ms = certified_slopes(params, ev, bound)
    assert ms.certified
    vals = coefficient_valuations(params, ev, max(4 * ms.truncation, 300))
    hull = lower_hull(list(enumerate(vals)))
    assert list(ms.entries) == slopes_below(hull, bound)
    assert all(s <= bound for s, _ in ms.entries)
    # sum rule: total multiplicity is the x-coordinate where slopes first exceed the bound
    assert ms.total == ms.prefix[-1][0]


@settings(max_examples=30, deadline=None)
@given(cells, st.integers(0, 5000), st.integers(5, 60), st.integers(1, 60))
def test_monotone_refinement(params, ev, n, extra):
    short = ghost_np(params, ev, n).vertices
    long = ghost_np(params, ev, n + extra).vertices
    last = short[-2][0] if len(short) > 1 else 0
    assert [v for v in short if v[0] <= last] == [v for v in long if v[0] <= last]


def test_polygon_invariants(p13):
    for ev in range(0, 50, 7):
        poly = ghost_np(p13, ev, 120)
        xs = poly.vertex_indices()
        assert xs == sorted(set(xs)) and poly.vertices[0] == (0, 0)
        slopes = [s for s, _ in poly.segments]
        assert slopes == sorted(set(slopes))


def test_certification_error_type():
    assert issubclass(CertificationError, RuntimeError)
