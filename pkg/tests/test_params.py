import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import primerange

from ghostseries import ParameterError, validate
from ghostseries.params import GhostParams, beta, derive, eta, residue_mod_pm1, theta

PRIMES = list(primerange(11, 60))


@st.composite
def legal(draw):
    p = draw(st.sampled_from(PRIMES))
    a = draw(st.integers(2, p - 5))
    s = draw(st.integers(0, p - 2))
    return validate(p, a, s)


def test_validate_ok():
    assert validate(11, 2, 0) == GhostParams(11, 2, 0)


def test_validate_a_out_of_range():
    with pytest.raises(ParameterError, match="a out of range"):
        validate(11, 7, 0)


def test_validate_not_prime():
    with pytest.raises(ParameterError, match="p not prime"):
        validate(12, 2, 0)


def test_validate_reports_every_violation():
    with pytest.raises(ParameterError) as err:
        validate(12, 1, 20)
    names = " ".join(err.value.violations)
    assert "p not prime" in names and "a out of range" in names and "s out of range" in names


def test_relaxed_mode_warns_and_flags():
    with pytest.raises(ParameterError, match="p out of range"):
        validate(7, 2, 0)
    with pytest.warns(UserWarning, match="outside theorem range"):
        params = validate(7, 2, 0, strict=False)
    assert params.outside_theorem_range


@pytest.mark.parametrize("n,expected", [(12, 2), (-1, 9), (20, 0)])
def test_residue(n, expected):
    assert residue_mod_pm1(11, n) == expected


# Hand evaluation of the delta formula and the t1/t2 table:
#   (11,2,0): {2}=2, {2}=2 -> delta=(2+0-2)/10=0; a+s<10 -> t1=0, t2=4; k_eps={2}+2=4
#   (11,2,9): {11}=1, {20}=0 -> delta=(1+9-0)/10=1; a+s>=10 -> t1=1+1+1=3, t2=9+1+1=11; k_eps=2
#   (13,2,0): same row as (11,2,0)
@pytest.mark.parametrize(
    "cell,expected",
    [((11, 2, 0), (0, 0, 4, 4)), ((11, 2, 9), (1, 3, 11, 2)), ((13, 2, 0), (0, 0, 4, 4))],
)
def test_derive_hand_values(cell, expected):
    c = derive(validate(*cell))
    assert (c.delta, c.t1, c.t2, c.k_eps) == expected


def test_beta_theta_eta(p11, p11s9):
    assert (beta(p11, 0), beta(p11, 1)) == (0, -2)
    assert (theta(p11, 0), theta(p11, 1)) == (4, 8)
    assert eta(p11, 0, 3) == 14
    assert all(theta(p11s9, n) <= 11 - 3 for n in (0, 1))


def test_derived_roundtrip(p11s9):
    c = p11s9.derived
    assert type(c).from_dict(c.to_dict()) == c
    assert GhostParams.from_dict(p11s9.to_dict()) == p11s9


@given(legal())
def test_derived_invariants(params):
    c = params.derived
    r = params.residue
    assert c.delta in (0, 1)
    assert c.t1 + c.t2 == params.s + r(params.a + params.s) + 2 + 2 * c.delta
    assert 4 <= c.t2 - c.t1 <= params.p - 3
    assert 2 <= c.k_eps <= params.p


@given(legal(), st.integers(-50, 50))
def test_beta_parity_theta_values(params, n):
    assert beta(params, n) == beta(params, n + 2)
    assert theta(params, n) in (params.a + 2, params.p - 1 - params.a)
    assert theta(params, n) <= params.p - 3


def test_every_s_for_sample_primes():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        for p in (11, 13, 17, 19, 23):
            for a in range(2, p - 4):
                for s in range(p - 1):
                    assert derive(validate(p, a, s)).delta in (0, 1)
