import itertools

import pytest

from quasibgg.bgg import (
    SIGN_CONVENTION,
    build_bgg_complex,
    cousin_shape,
    d_squared,
    euler_character,
    square_violations,
)
from quasibgg.charring import CharError, FormalChar, RationalChar, rc_equal
from quasibgg.reps_chars import freudenthal_char, quasi_verma_char, weyl_char
from quasibgg.root_data import build_root_datum
from quasibgg.weyl import from_word

A1 = build_root_datum("A1")


def test_a1_shape():
    cx = build_bgg_complex(A1, (0,))
    assert sorted(cx.layers) == [-1, 0]
    assert [str(w) for w, _ in cx.layers[0]] == ["e"]
    assert [str(w) for w, _ in cx.layers[-1]] == ["s1"]
    assert [(str(e.source), str(e.target), e.sign) for e in cx.edges] == [("s1", "e", 1)]


@pytest.mark.parametrize("label,sizes", [("A2", [1, 2, 2, 1]), ("B2", [1, 2, 2, 2, 1]),
                                         ("G2", [1, 2, 2, 2, 2, 2, 1])])
def test_layer_sizes(label, sizes):
    d = build_root_datum(label)
    for mu in [(0,) * d.rank, (1,) * d.rank]:
        assert build_bgg_complex(d, mu).layer_sizes() == sizes


@pytest.mark.parametrize("label", ["A3", "B3", "C3"])
def test_layer_sizes_palindromic(label):
    sizes = build_bgg_complex(build_root_datum(label), (0, 0, 0)).layer_sizes()
    assert sizes == sizes[::-1]


def test_layers_hold_quasi_vermas():
    d = build_root_datum("A2")
    cx = build_bgg_complex(d, (1, 0))
    for deg, cells in cx.layers.items():
        for w, ch in cells:
            assert w.length == -deg
            assert rc_equal(ch, quasi_verma_char(d, w, (1, 0)))


def test_edges_are_covers_between_adjacent_layers():
    cx = build_bgg_complex(build_root_datum("B3"), (0, 0, 0))
    for e in cx.edges:
        assert e.source.length == e.target.length + 1
        assert e.sign in (1, -1)


def test_non_dominant_rejected():
    with pytest.raises(CharError):
        build_bgg_complex(build_root_datum("A2"), (0, -1))
    with pytest.raises(CharError):
        cousin_shape(A1, (-3,))


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "B3", "C3", "G2"])
def test_d_squared_and_squares(label):
    d = build_root_datum(label)
    cx = build_bgg_complex(d, (0,) * d.rank)
    for M in d_squared(cx).values():
        assert all(x == 0 for row in M for x in row)
    assert square_violations(cx) == []


def test_broken_sign_is_detected():
    cx = build_bgg_complex(build_root_datum("A2"), (0, 0))
    from quasibgg.bgg import Edge

    e = cx.edges[0]
    cx.edges[0] = Edge(e.source, e.target, -e.sign)
    assert square_violations(cx)
    assert any(any(x for row in M for x in row) for M in d_squared(cx).values())


def test_euler_examples():
    for ell in (3, 5):
        for k in range(4):
            e = euler_character(build_bgg_complex(A1, (k * ell,)))
            assert rc_equal(e, weyl_char(A1, (k * ell,)).rational)
    for label in ("A2", "B2", "G2", "A3"):
        d = build_root_datum(label)
        assert rc_equal(euler_character(build_bgg_complex(d, (0,) * d.rank)), RationalChar(FormalChar.one(d.rank)))
    A2 = build_root_datum("A2")
    e = euler_character(build_bgg_complex(A2, (1, 0)))
    assert rc_equal(e, RationalChar(freudenthal_char(A2, (1, 0))), A2)
    assert freudenthal_char(A2, (1, 0)).dimension() == 3


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_euler_matches_freudenthal(label):
    d = build_root_datum(label)
    for mu in itertools.product(range(3), repeat=d.rank):
        e = euler_character(build_bgg_complex(d, mu))
        assert rc_equal(e, RationalChar(freudenthal_char(d, mu)), d)


def test_cousin_shape():
    cx = cousin_shape(A1, (2,))
    assert sorted(cx.layers) == [0, 1]
    labels = {cx.label(w) for deg in cx.layers for w, _ in cx.layers[deg]}
    assert labels == {"S_e", "S_s1"}
    A2 = build_root_datum("A2")
    cs = cousin_shape(A2, (0, 0))
    assert cs.layer_sizes() == [1, 2, 2, 1]
    assert sum(cs.layer_sizes()) == 6
    for deg, cells in cs.layers.items():
        assert all(w.length == deg for w, _ in cells)
    assert cs.edges == build_bgg_complex(A2, (0, 0)).edges


def test_json_schema():
    out = build_bgg_complex(build_root_datum("A2"), (1, 1)).to_json()
    assert [l["degree"] for l in out["layers"]] == [0, -1, -2, -3]
    for layer in out["layers"]:
        for cell in layer["cells"]:
            assert set(cell) == {"word", "char_ref"}
            assert cell["char_ref"] in out["characters"]
    assert all(set(e) == {"from", "to", "sign"} for e in out["edges"])
    assert out["metadata"]["sign_convention"] == SIGN_CONVENTION


def test_incidence_matrix_a2():
    cx = build_bgg_complex(build_root_datum("A2"), (0, 0))
    d1 = cx.incidence_matrix(1)
    assert len(d1) == 1 and len(d1[0]) == 2
    d3 = cx.incidence_matrix(3)
    assert len(d3) == 2 and len(d3[0]) == 1
    # every cover is an edge
    assert sum(abs(x) for row in cx.incidence_matrix(2) for x in row) == 4
    s1 = from_word(cx.datum, [1])
    assert cx.degree_of(s1) == -1
