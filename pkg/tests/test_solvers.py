import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qchbounds.bounds import mu_g
from qchbounds.errors import ConvergenceError, NoSignChangeError, TargetOutOfRangeError
from qchbounds.solvers import DEFAULT_TOL, Bracket, find_root, invert_monotone
from qchbounds.special import grotzsch_mu, teichmuller_psi

import oracles


def test_linear():
    res = find_root(lambda x: x - 1, (0.0, 2.0))
    assert res.root == pytest.approx(1.0, abs=1e-12)
    assert abs(res.residual) <= DEFAULT_TOL


def test_sqrt2():
    res = find_root(lambda x: x * x - 2, Bracket.of(lambda x: x * x - 2, 1.0, 2.0))
    assert res.root == pytest.approx(math.sqrt(2), abs=1e-12)


def test_pseudo_anosov_fixed_point():
    res = find_root(lambda K: K - mu_g(2, K), (1.01, 3.0))
    assert res.root == pytest.approx(1.42588, abs=5e-4)
    assert res.root == pytest.approx(oracles.K_A, rel=1e-11)


def test_deterministic():
    f = lambda K: K - mu_g(2, K)  # noqa: E731
    assert find_root(f, (1.01, 3.0)) == find_root(f, (1.01, 3.0))


def test_endpoint_root():
    res = find_root(lambda x: x, (0.0, 1.0))
    assert res.root == 0.0 and res.iterations == 0


def test_no_sign_change():
    with pytest.raises(NoSignChangeError):
        find_root(lambda x: x * x + 1, (-1.0, 1.0))


def test_bracket_order():
    with pytest.raises(ValueError):
        Bracket(2.0, 1.0, -1.0, 1.0)


def test_nonconvergence():
    # a step function never gets its residual under tol
    with pytest.raises(ConvergenceError):
        find_root(lambda x: -1.0 if x < 0.3 else 1.0, (0.0, 1.0), maxiter=200)


def test_xtol_stops_on_width():
    res = find_root(lambda x: -1.0 if x < 0.3 else 1.0, (0.0, 1.0), xtol=1e-9)
    assert res.root == pytest.approx(0.3, abs=1e-8)


@given(
    st.floats(min_value=-50, max_value=50),
    st.floats(min_value=0.1, max_value=10),
    st.integers(min_value=1, max_value=7),
)
def test_residual_contract(c, scale, power):
    # odd monotone polynomial with root at c
    f = lambda x: scale * (x - c) ** (2 * power - 1)  # noqa: E731
    res = find_root(f, (c - 3.7, c + 11.0), xtol=0.0)
    assert abs(f(res.root)) <= DEFAULT_TOL
    assert res.residual == f(res.root)


def test_invert_identity():
    assert invert_monotone(lambda x: x, 0.5, 0.0, 1.0) == pytest.approx(0.5, abs=1e-12)


def test_invert_mu():
    r = invert_monotone(grotzsch_mu, math.pi / 2, 0.01, 0.99)
    assert r == pytest.approx(math.sqrt(0.5), abs=1e-11)


def test_invert_psi():
    d = invert_monotone(teichmuller_psi, teichmuller_psi(1.0), 0.0, 5.0)
    assert d == pytest.approx(1.0, abs=1e-10)


def test_invert_out_of_range():
    with pytest.raises(TargetOutOfRangeError):
        invert_monotone(lambda x: x, 2.0, 0.0, 1.0)
