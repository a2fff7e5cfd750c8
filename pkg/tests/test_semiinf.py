import itertools
import json

import pytest

from quasibgg.charring import CharError, DenomFactor, FormalChar, RationalChar, rc_equal, rc_sum
from quasibgg.root_data import build_root_datum
from quasibgg.semiinf import (
    SemiinfCharParams,
    calibrate_rank1,
    chformula,
    chformula_general,
    expand,
    nilcone_cech_oracle_rank1,
    odd_t_only,
    per_cell_term,
    rank1_closed_form,
    t_support,
)
from quasibgg.weyl import from_word, generate_group, identity

A1 = build_root_datum("A1")


def P(label, ell, lam, **kw):
    return SemiinfCharParams(build_root_datum(label), ell, lam, **kw)


@pytest.mark.parametrize("ell", [3, 5])
def test_per_cell_a1(ell):
    p = P("A1", ell, (0,))
    x = (-2 * ell,)
    want_e = RationalChar(FormalChar.monomial((0,), -1), [DenomFactor(x), DenomFactor(x, 2)])
    want_s = RationalChar(FormalChar.monomial((0,), 1), [DenomFactor(x), DenomFactor(x, -2)])
    e, s = generate_group(A1)
    assert rc_equal(per_cell_term(p, e), want_e)
    assert rc_equal(per_cell_term(p, s), want_s)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_per_cell_top_coefficient(label):
    d = build_root_datum(label)
    p = SemiinfCharParams(d, 3, (1,) * d.rank)
    N = d.num_positive_roots
    for w in generate_group(d):
        c = per_cell_term(p, w)
        top = w.act((3,) * d.rank)
        assert c.numerator == FormalChar.monomial(top, 2 * w.length - N)


def test_closed_form_values():
    assert rank1_closed_form(0) == {-1: 1, 1: 1}
    assert rank1_closed_form(2) == {-3: 1, -1: 2, 1: 2, 3: 1}


@pytest.mark.parametrize("ell", [3, 5, 7])
def test_rank1_expansion(ell):
    p = P("A1", ell, (0,), truncation_height=10)
    e = expand(p, chformula(p))
    for n in range(11):
        assert e.t_polynomial((-2 * n * ell,)) == rank1_closed_form(n)
    assert odd_t_only(e)
    assert all(c > 0 for _, _, c in e.items())
    # only multiples of ell*alpha appear
    assert all(wt[0] % (2 * ell) == 0 for wt in e.weights())


def test_support_grows_linearly():
    p = P("A1", 3, (0,), truncation_height=8)
    sup = t_support(expand(p, chformula(p)))
    for n in range(1, 9):
        lo, hi = sup[(-6 * n,)]
        assert (lo, hi) == (1 - 2 * n, 2 * n - 1)


@pytest.mark.parametrize("label,ell", [("A2", 3), ("B2", 3), ("A2", 5)])
def test_odd_degrees_higher_rank(label, ell):
    d = build_root_datum(label)
    p = SemiinfCharParams(d, ell, (0,) * d.rank, truncation_height=2)
    e = expand(p, chformula(p))
    assert e and odd_t_only(e) == (d.num_positive_roots % 2 == 1)
    assert all(c > 0 for _, _, c in e.items())


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
@pytest.mark.parametrize("ell", [3, 5])
def test_cell_sum_is_chformula(label, ell):
    d = build_root_datum(label)
    for lam in itertools.product(range(2), repeat=d.rank):
        p = SemiinfCharParams(d, ell, lam)
        total = rc_sum([per_cell_term(p, w) for w in generate_group(d)])
        assert rc_equal(total, chformula(p), d)
        assert rc_equal(chformula_general(p), chformula(p), d)


def test_general_twist_prefactor():
    s = from_word(A1, [1])
    p = P("A1", 3, (1,), twist_w=s)
    g = chformula_general(p)
    base = chformula(P("A1", 3, (1,)))
    # t^{l(s)} times the untwisted sum
    assert rc_equal(g, RationalChar(base.numerator.shift((0,), 1), base.denominator))
    # prefactor t^{-N + l(w)} = t^0 on the top term e^{ell lambda}
    assert g.numerator.coefficient((3,), 0) != 0


def test_general_twist_needs_dominance():
    s = from_word(A1, [1])
    with pytest.raises(CharError):
        chformula_general(P("A1", 3, (0,), twist_w=s))


def test_chformula_refuses_twist():
    with pytest.raises(CharError):
        chformula(P("A1", 3, (1,), twist_w=from_word(A1, [1])))
    assert rc_equal(chformula(P("A1", 3, (1,), twist_w=identity(A1))), chformula(P("A1", 3, (1,))))


def test_params_validation():
    with pytest.raises(CharError):
        P("A1", 4, (0,))
    with pytest.raises(CharError):
        P("A2", 3, (1, -1))
    with pytest.raises(CharError):
        P("A1", 3, (0,), truncation_height=-1)
    assert P("A1", 9, (0,)).caveat
    assert P("A1", 7, (0,)).caveat is None


def test_oracle_examples():
    o = nilcone_cech_oracle_rank1(3, 1)
    # c^-1 (degree -1) and a c^-1 (degree 0), both at weight -alpha
    assert o == FormalChar.from_items([((-2,), -1, 1), ((-2,), 0, 1)])
    assert nilcone_cech_oracle_rank1(3, 0) == FormalChar()


def test_oracle_weight_structure():
    o = nilcone_cech_oracle_rank1(5, 10)
    for n in range(1, 11):
        assert o.t_polynomial((-2 * n,)) == {d: 1 for d in range(-n, n)}
    assert all(wt[0] < 0 for wt in o.weights())


def test_calibration_record():
    r = calibrate_rank1(3, 10)
    cal = r["calibration"]
    assert cal["converged"]
    assert cal["map"] == {"s_w": 1, "o_w": 0, "s_t": 1, "o_t": 1}
    # the fitted dictionary leaves t^-1 + t at every weight
    for row in r["coefficients"]:
        assert row["residual"] == {"-1": "1", "1": "1"}
    assert r["residual_l1"] == 22


def test_calibration_is_deterministic():
    a = json.dumps(calibrate_rank1(3, 6), sort_keys=True)
    b = json.dumps(calibrate_rank1(3, 6), sort_keys=True)
    assert a == b


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_cells_are_weyl_group(label):
    from quasibgg.semiinf import cell_indices

    d = build_root_datum(label)
    cells = cell_indices(d)
    assert len(cells) == len(set(cells)) == len(generate_group(d))
