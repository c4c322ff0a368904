from __future__ import annotations

from hypothesis import given, settings, strategies as st

from rank2.rootdata import (
    enumerate_weyl,
    inverse,
    inversion_set,
    is_positive,
    longest,
    minimal_coset_reps,
    multiply,
    parabolic,
    root_system,
)

SYSTEMS = ("A1", "A2", "C2", "G2", "A1xA1")
ORDERS = {"A1": 2, "A2": 6, "C2": 8, "G2": 12, "A1xA1": 4}


def _closure(rs):
    """Independent group closure on omega-coordinate matrices, BFS in letter order."""
    gens = [rs.reflection(i)[0] for i in rs.indices]
    ident = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
    seen = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for i, g in zip(rs.indices, gens):
                # left multiplication: s_i * a
                b = tuple(tuple(sum(g[r][k] * a[k][c] for k in range(rs.rank)) for c in range(rs.rank))
                          for r in range(rs.rank))
                word = (i,) + seen[a]
                if b not in seen or (len(word) == len(seen[b]) and word < seen[b]):
                    if b not in seen:
                        nxt.append(b)
                    seen[b] = word
        frontier = nxt
    return seen


def test_cartan_conventions():
    assert root_system("A2").cartan[0][1] == -1 and root_system("A2").cartan[1][0] == -1
    assert (root_system("C2").cartan[0][1], root_system("C2").cartan[1][0]) == (-2, -1)
    assert (root_system("G2").cartan[0][1], root_system("G2").cartan[1][0]) == (-3, -1)


def test_group_orders_and_words():
    for lab in SYSTEMS:
        rs = root_system(lab)
        W = enumerate_weyl(rs)
        assert len(W) == ORDERS[lab]
        oracle = _closure(rs)
        assert {w.action for w in W} == set(oracle)


def test_words_are_lex_least_reduced():
    for lab in SYSTEMS:
        rs = root_system(lab)
        oracle = _closure(rs)
        assert all(w.word == oracle[w.action] for w in enumerate_weyl(rs))
    assert [w.name() for w in enumerate_weyl(root_system("A2"))] == ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]


def test_braid_orders():
    expect = {"A1xA1": 2, "A2": 3, "C2": 4, "G2": 6}
    for lab, m in expect.items():
        rs = root_system(lab)
        assert rs.braid_order(1, 2) == m
        a = rs.element((1, 2))
        acc = rs.identity()
        for k in range(1, m + 1):
            acc = multiply(rs, acc, a)
            assert (acc.action == rs.identity().action) == (k == m)


def test_reflection_examples():
    assert root_system("A1").element((1,)).act_root((1,)) == (-1,)
    assert root_system("A2").element((1,)).act_root((0, 1)) == (1, 1)
    assert root_system("C2").element((2,)).act_root((1, 0)) == (1, 2)


def test_positive_roots():
    names = {lab: [root_system(lab).root_name(b) for b in root_system(lab).positive_roots] for lab in SYSTEMS}
    assert sorted(names["C2"]) == sorted(["a1", "a2", "a1+a2", "a1+2a2"])
    assert sorted(names["G2"]) == sorted(["a1", "a2", "a1+a2", "a1+2a2", "a1+3a2", "2a1+3a2"])
    assert len(names["A1xA1"]) == 2


def test_inversion_set_examples():
    C2 = root_system("C2")
    assert inversion_set(C2, longest(C2)) == frozenset(C2.positive_roots)
    A1 = root_system("A1")
    assert inversion_set(A1, A1.element((1,))) == {(1,)}
    A2 = root_system("A2")
    assert inversion_set(A2, A2.element((2, 1))) == {(1, 0), (1, 1)}


def test_coset_representatives():
    C2, G2 = root_system("C2"), root_system("G2")
    assert len(minimal_coset_reps(C2, ())) == 8
    assert len(minimal_coset_reps(C2, (1,))) == 4
    assert len(minimal_coset_reps(G2, (2,))) == 6
    for rs in (C2, G2):
        for I in ((1,), (2,)):
            reps, WI = minimal_coset_reps(rs, I), parabolic(rs, I)
            prods = {multiply(rs, u, v).action for u in reps for v in WI}
            assert len(prods) == len(enumerate_weyl(rs))
            assert all(multiply(rs, u, rs.element((i,))).length > u.length for u in reps for i in I)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SYSTEMS), st.lists(st.integers(1, 2), max_size=10))
def test_random_words(lab, letters):
    rs = root_system(lab)
    letters = [min(i, rs.rank) for i in letters]
    w = rs.element(letters)
    red = next(u for u in enumerate_weyl(rs) if u.action == w.action)
    assert red.length <= len(letters) and (len(letters) - red.length) % 2 == 0
    R = inversion_set(rs, red)
    assert len(R) == red.length
    # definition: beta > 0 with w beta < 0
    assert R == {b for b in rs.positive_roots if not is_positive(red.act_root(b))}
    assert multiply(rs, red, inverse(rs, red)).length == 0
