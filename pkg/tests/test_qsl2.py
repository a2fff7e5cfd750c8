import pytest
from hypothesis import given, settings, strategies as st

from quasibgg.charring import LaurentInt, qbinom, quantum_integer
from quasibgg.qsl2 import (
    Sl2VermaVector,
    act_E_divided,
    act_E_iterated,
    act_F_divided,
    cogeneration_product,
    specialize_module,
    verify_cogeneration,
    verify_kernel_closure,
)

V = Sl2VermaVector.basis


def test_F_examples():
    x = V(4, 0)
    assert act_F_divided(0, x) == x
    assert act_F_divided(1, x) == V(4, 1)
    assert act_F_divided(2, V(4, 1)) == V(4, 3, LaurentInt({2: 1, 0: 1, -2: 1}))


def test_E_examples():
    assert act_E_divided(1, V(1, 2)) == Sl2VermaVector(1, {})
    for mu in range(6):
        assert act_E_divided(1, V(mu, 1)) == V(mu, 0, quantum_integer(mu))
    assert act_E_divided(1, V(1, 3)) == V(1, 2, -1)


def test_E_beyond_top_is_zero():
    assert not act_E_divided(3, V(2, 2))


def test_cogeneration_examples():
    res = act_E_divided(1, V(1, 3))
    assert res == V(1, 2, -1)
    assert act_E_divided(0, V(0, 1)) == V(0, 1)
    c = act_E_divided(2, V(2, 5)).coefficient(3)
    assert c == LaurentInt({0: 1})


def test_cogeneration_sign_pattern():
    for mu in range(6):
        for case in verify_cogeneration(mu, mu + 9):
            n = case.parameters["m"] - mu - 1
            assert case.passed
            assert case.witness["sign"] == (-1) ** n


def test_cogeneration_product_matches_formula():
    for mu in range(5):
        for m in range(mu + 1, mu + 8):
            coef = act_E_divided(m - mu - 1, V(mu, m)).coefficient(mu + 1)
            assert cogeneration_product(mu, m) == coef


def test_kernel_closure_examples():
    assert act_E_divided(1, V(1, 2)).coefficient(1) == LaurentInt()
    for n in range(1, 6):
        assert act_E_divided(n, V(0, n)).coefficient(0) == qbinom(0, n) == LaurentInt()
    assert act_E_divided(0, V(3, 4)) == V(3, 4)


@pytest.mark.parametrize("ell", [None, 3, 5, 7])
def test_kernel_closure(ell):
    for mu in range(11):
        assert all(c.passed for c in verify_kernel_closure(mu, mu + 10, mu + 10, ell))


def test_kernel_is_not_everything():
    # vectors below index mu+1 do leave the span: E F^(mu) p lands on F^(mu-1) p
    mu = 4
    assert act_E_divided(1, V(mu, mu)).coefficient(mu - 1)


def test_specialize():
    assert specialize_module(3, V(0, 1, quantum_integer(3))) == Sl2VermaVector(0, {})
    assert specialize_module(5, V(0, 1)) == V(0, 1)
    assert specialize_module(3, V(0, 0, quantum_integer(2))) == V(0, 0, -1)
    with pytest.raises(ValueError):
        specialize_module(4, V(0, 0))


def test_bad_inputs():
    with pytest.raises(ValueError):
        V(0, -1)
    with pytest.raises(ValueError):
        act_E_divided(-1, V(0, 0))
    with pytest.raises(ValueError):
        V(0, 1) + V(1, 1)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 6), st.integers(0, 8), st.integers(0, 4))
def test_closed_formula_matches_commutation_oracle(mu, b, a):
    x = V(mu, b)
    assert act_E_divided(a, x) == act_E_iterated(a, x)


@settings(max_examples=60, deadline=None)
@given(st.integers(-3, 8), st.integers(0, 6), st.integers(0, 4))
def test_weight_shift(mu, b, a):
    x = V(max(mu, 0), b)
    for y, sign in ((act_E_divided(a, x), 1), (act_F_divided(a, x), -1)):
        if y:
            assert y.weights() == {w + 2 * a * sign for w in x.weights()}


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_classical_limit(mu, b, a):
    from math import comb

    y = act_F_divided(a, V(mu, b))
    assert y.coefficient(a + b).evaluate(1) == comb(a + b, a)


@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
def test_F_divided_powers_compose(mu, a, c):
    x = V(mu, 0)
    lhs = act_F_divided(a, act_F_divided(c, x))
    rhs = act_F_divided(a + c, x).scale(qbinom(a + c, a))
    assert lhs == rhs
