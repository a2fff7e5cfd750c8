import pytest
from hypothesis import given, settings, strategies as st

from quasibgg.root_data import build_root_datum
from quasibgg.weyl import (
    GroupTooLarge,
    bruhat_leq,
    covers,
    dot_action,
    from_word,
    generate_group,
    identity,
    reduced_subword_products,
)

ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "C3": 48, "B3": 48, "G2": 12, "D4": 192, "F4": 1152}


@pytest.mark.parametrize("label,order", sorted(ORDERS.items()))
def test_group_orders(label, order):
    assert len(generate_group(build_root_datum(label))) == order


def test_a1_elements():
    W = generate_group(build_root_datum("A1"))
    assert [w.length for w in W] == [0, 1]
    assert str(W[1]) == "s1"


def test_a2_length_generating_function():
    assert generate_group(build_root_datum("A2")).length_generating_function() == [1, 2, 2, 1]


def test_b2_longest():
    W = generate_group(build_root_datum("B2"))
    assert W.longest.length == 4


def test_group_too_large(monkeypatch):
    monkeypatch.setenv("QBGG_MAX_WEYL_ORDER", "100")
    with pytest.raises(GroupTooLarge):
        generate_group(build_root_datum("D4"))


def test_dot_action_examples():
    A1 = build_root_datum("A1")
    s = from_word(A1, [1])
    assert dot_action(A1, identity(A1), (5,)) == (5,)
    assert dot_action(A1, s, (0,)) == (-2,)
    for ell in (3, 5, 7):
        for k in range(5):
            assert dot_action(A1, s, (k * ell,)) == (-k * ell - 2,)


def test_bruhat_examples():
    A2 = build_root_datum("A2")
    s1, s2 = from_word(A2, [1]), from_word(A2, [2])
    assert bruhat_leq(s1, from_word(A2, [1, 2]))
    assert not bruhat_leq(s1, s2)
    assert all(bruhat_leq(identity(A2), w) for w in generate_group(A2))


def test_covers_examples():
    A2 = build_root_datum("A2")
    assert [str(w) for w in covers(identity(A2))] == ["s1", "s2"]
    assert [str(w) for w in covers(from_word(A2, [1]))] == ["s1s2", "s2s1"]
    A1 = build_root_datum("A1")
    assert covers(from_word(A1, [1])) == []


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "B3", "C3", "G2"])
def test_bruhat_matches_bruteforce_subwords(label):
    d = build_root_datum(label)
    W = generate_group(d)
    for w2 in W:
        below = reduced_subword_products(w2)
        for w1 in W:
            assert bruhat_leq(w1, w2) == (w1.rho_image in below)


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2"])
def test_diamond_property(label):
    W = generate_group(build_root_datum(label))
    up = {w.rho_image: {u.rho_image for u in covers(w)} for w in W}
    for x in W:
        two = {}
        for y in up[x.rho_image]:
            for z in up[y]:
                two[z] = two.get(z, 0) + 1
        assert set(two.values()) <= {2}


@pytest.mark.parametrize("label", ["A3", "B3", "G2"])
def test_length_identities(label):
    W = generate_group(build_root_datum(label))
    w0 = W.longest
    for w in W:
        assert w.inverse().length == w.length
        assert (w0 * w).length == w0.length - w.length


def test_words_are_shortlex_and_reduced():
    d = build_root_datum("B3")
    for w in generate_group(d):
        assert from_word(d, w.word) == w
        assert len(w.word) == w.length


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2", "A3"]), st.data())
def test_dot_action_is_group_action(label, data):
    d = build_root_datum(label)
    W = generate_group(d)
    w1 = W[data.draw(st.integers(0, len(W) - 1))]
    w2 = W[data.draw(st.integers(0, len(W) - 1))]
    lam = data.draw(st.tuples(*[st.integers(-6, 6)] * d.rank))
    assert dot_action(d, w1 * w2, lam) == dot_action(d, w1, dot_action(d, w2, lam))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=12))
def test_arbitrary_words_reduce(word):
    d = build_root_datum("A3")
    w = from_word(d, word)
    assert w.length <= len(word)
    assert w.length % 2 == len(word) % 2
