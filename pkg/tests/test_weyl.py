from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liecalc import weyl
from liecalc.rootsystem import build

SMALL = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2"]


def bfs_lengths(rs):
    """Element matrices with their word-metric distance from the identity."""
    gens = [weyl.reflection_matrix(rs, i) for i in range(rs.rank)]
    start = weyl.identity(rs).matrix
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for M in frontier:
            for S in gens:
                P = weyl._mul(M, S)
                if P not in dist:
                    dist[P] = dist[M] + 1
                    nxt.append(P)
        frontier = nxt
    return dist


def length_via_rho(rs, w):
    return sum(1 for r in rs.positive_roots if sum(a * c for a, c in zip(w(rs.rho), r.coroot)) < 0)


def test_reflect_examples():
    assert weyl.reflect(build("A1"), 0, (1,)) == (-1,)
    assert weyl.reflect(build("A2"), 0, (1, 0)) == (-1, 1)
    assert weyl.reflect(build("B3"), 1, (2, 0, 5)) == (2, 0, 5)
    with pytest.raises(IndexError):
        weyl.reflect(build("A2"), 2, (1, 0))


def test_length_examples():
    a2 = build("A2")
    assert weyl.length(a2, weyl.identity(a2)) == 0
    assert weyl.length(a2, weyl.element(a2, [0, 1])) == 2
    assert weyl.length(a2, weyl.longest_element(a2)) == 3


def test_longest_examples():
    a1 = build("A1")
    assert weyl.longest_element(a1).word == (0,)
    a2 = build("A2")
    w0 = weyl.longest_element(a2)
    assert len(w0.word) == 3
    assert w0.matrix == ((0, -1), (-1, 0))
    b2 = build("B2")
    w0 = weyl.longest_element(b2)
    assert len(w0.word) == 4
    assert w0.matrix == ((-1, 0), (0, -1))


@pytest.mark.parametrize("t", SMALL + ["D4", "F4", "E6"])
def test_longest_properties(t):
    rs = build(t)
    w0 = weyl.longest_element(rs)
    assert weyl.length(rs, w0) == len(rs.positive_roots) == len(w0.word)
    assert w0(rs.rho) == tuple(-x for x in rs.rho)
    assert weyl._mul(w0.matrix, w0.matrix) == weyl.identity(rs).matrix
    assert w0.matrix == rs.longest_matrix


def test_dot_examples():
    a1 = build("A1")
    s1 = weyl.element(a1, [0])
    assert weyl.dot(a1, s1, (-2,)) == (0,)
    assert weyl.dot(a1, weyl.identity(a1), (7,)) == (7,)
    a2 = build("A2")
    for w in weyl.enumerate_group(a2):
        assert weyl.dot(a2, w, (-1, -1)) == (-1, -1)


def test_straighten_examples():
    a2 = build("A2")
    r = weyl.straighten(a2, (1, 1))
    assert r.dominant == (1, 1) and r.w == weyl.identity(a2) and r.steps == 0
    r = weyl.straighten(a2, (-1, -1))
    assert r.dominant == (1, 1) and r.steps == 3
    assert r.w(( -1, -1)) == (1, 1)
    assert weyl.straighten(build("A1"), (0,)) is None


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "A3"])
@given(data=st.data())
def test_straighten_properties(t, data):
    rs = build(t)
    xi = tuple(data.draw(st.lists(st.integers(-7, 7), min_size=rs.rank, max_size=rs.rank)))
    r = weyl.straighten(rs, xi)
    negatives = sum(1 for c in rs.positive_coroots if rs.pairing(xi, c) < 0)
    if r is None:
        assert any(rs.pairing(xi, c) == 0 for c in rs.positive_coroots)
        return
    assert rs.is_dominant(r.dominant)
    assert r.w(xi) == r.dominant
    assert r.steps == negatives == weyl.length(rs, r.w)


@pytest.mark.parametrize("t, coeffs", [("A2", [1, 2, 2, 1]), ("A1", [1, 1]), ("B2", [1, 2, 2, 2, 1])])
def test_poincare_examples(t, coeffs):
    assert weyl.poincare_coefficients(build(t)) == coeffs


@pytest.mark.parametrize("t", SMALL)
def test_enumeration_against_bfs(t):
    rs = build(t)
    elems = weyl.enumerate_group(rs)
    dist = bfs_lengths(rs)
    assert {w.matrix for w in elems} == set(dist)
    assert len(elems) == rs.weyl_order
    hist = Counter(dist.values())
    assert [hist[i] for i in range(len(hist))] == weyl.poincare_coefficients(rs)
    for w in elems:
        # three computations of the length
        assert len(w.word) == weyl.inversion_count(rs, w) == length_via_rho(rs, w) == dist[w.matrix]
        assert weyl.element(rs, w.word).matrix == w.matrix
    keys = [(len(w.word), w.word) for w in elems]
    assert keys == sorted(keys)


def test_enumerate_examples():
    a1 = build("A1")
    assert [w.word for w in weyl.enumerate_group(a1)] == [(), (0,)]
    a2 = build("A2")
    assert Counter(len(w.word) for w in weyl.enumerate_group(a2)) == {0: 1, 1: 2, 2: 2, 3: 1}
    with pytest.raises(weyl.WeylCapExceeded) as exc:
        weyl.enumerate_group(build("G2"), cap=10)
    assert exc.value.order == 12


def test_lex_smallest_words():
    a2 = build("A2")
    words = {w.word for w in weyl.enumerate_group(a2)}
    assert (0, 1, 0) in words and (1, 0, 1) not in words


@pytest.mark.parametrize("t", ["A2", "A3", "B2", "B3", "G2"])
def test_w0_conjugate_inverse_permutes_length_classes(t):
    rs = build(t)
    w0 = weyl.longest_element(rs)
    elems = weyl.enumerate_group(rs)
    by_len = {}
    for w in elems:
        by_len.setdefault(len(w.word), set()).add(w)
    for i, cls in by_len.items():
        image = {weyl.multiply(rs, weyl.multiply(rs, w0, weyl.inverse(rs, w)), w0) for w in cls}
        assert image == cls


def test_element_reduces_words():
    a2 = build("A2")
    w = weyl.element(a2, [0, 0, 1])
    assert w.word == (1,)
    assert weyl.element(a2, [1, 0, 1]) == weyl.element(a2, [0, 1, 0])


def test_coroot_action_is_contragredient():
    for t in ["A2", "B2", "G2"]:
        rs = build(t)
        for w in weyl.enumerate_group(rs):
            winv = weyl.inverse(rs, w)
            for c in rs.positive_coroots:
                wc = weyl.coroot_action(rs, w, c)
                for i in range(rs.rank):
                    lam = tuple(int(i == j) for j in range(rs.rank))
                    assert rs.pairing(lam, wc) == rs.pairing(winv(lam), c)
