from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ghostseries.valuation import INF, legendre_sum, max_vp_interval, sum_vp, vp, vp_weight_diff, weight_valuations
from oracles import brute_sum_vp, naive_vp

primes = st.sampled_from([11, 13, 17, 19, 23, 29])
nonzero = st.integers(-(10**60), 10**60).filter(bool)


@pytest.mark.parametrize("n,expected", [(14641, 4), (10, 0), (-22, 1)])
def test_vp_examples(n, expected):
    assert vp(11, n) == expected


def test_vp_rejects_zero():
    with pytest.raises(ValueError):
        vp(11, 0)


def test_weight_diff_examples():
    assert vp_weight_diff(11, 1, 12) == 2
    assert vp_weight_diff(11, 5, 5) == INF
    assert vp_weight_diff(11, 1, 14642) == 5


def test_sum_vp_examples():
    r = sum_vp(11, 0, 11)
    assert r.total == 1 and r.lower_ok and r.upper_ok and r.upper == Fraction(11, 10) + 1
    r = sum_vp(11, 0, 121)
    assert r.total == 12 and r.lower == 10
    assert sum_vp(13, 5, 6).total == 0


def test_max_vp_examples():
    assert max_vp_interval(11, 1, 121) == 2
    assert max_vp_interval(11, 12, 21) == 0
    # 110 and 121 both lie in the range; 121 = 11^2 wins
    assert max_vp_interval(11, 100, 130) == 2
    with pytest.raises(ValueError):
        max_vp_interval(11, -3, 4)
    with pytest.raises(ValueError):
        sum_vp(11, -3, 4)


@given(primes, nonzero, nonzero)
def test_vp_multiplicative_and_ultrametric(p, a, b):
    assert vp(p, a * b) == vp(p, a) + vp(p, b)
    if a + b:
        assert vp(p, a + b) >= min(vp(p, a), vp(p, b))
    assert vp(p, a) == naive_vp(p, a)


@given(primes, st.integers(-3000, 3000), st.integers(1, 3000))
def test_sum_and_max_match_brute_force(p, n1, length):
    n2 = n1 + length
    if n1 < 0 < n2 or n2 == 0:
        return
    rep = sum_vp(p, n1, n2)
    assert rep.total == brute_sum_vp(p, n1, n2)
    assert rep.r == max(naive_vp(p, n) for n in range(n1 + 1, n2 + 1))
    assert rep.lower_ok and rep.upper_ok


def test_tool_lemma_random_cases():
    rng = np.random.default_rng(1)
    for _ in range(10**4):
        p = int(rng.choice([11, 13, 17, 19, 23]))
        n1 = int(rng.integers(0, 10**12))
        n2 = n1 + int(rng.integers(1, 10**6))
        rep = sum_vp(p, n1, n2)
        assert rep.lower <= rep.total <= rep.upper


@given(primes, st.integers(0, 10**40), st.integers(1, 400))
def test_weight_valuations_array(p, ev, count):
    arr = weight_valuations(p, ev, count)
    assert arr.dtype == np.int64
    for kb in range(count):
        if kb != ev:
            assert arr[kb] == vp_weight_diff(p, ev, kb)


@given(primes, st.integers(0, 10**6))
def test_legendre(p, n):
    assert legendre_sum(p, n) == sum(n // p**i for i in range(1, 40))
