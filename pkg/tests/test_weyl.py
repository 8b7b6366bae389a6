import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borelab.cartan import load_diagram
from borelab.roots import coroot_pair, delta, highest_root, simple_root, subsystem_closure
from borelab.weyl import (
    coset_poset,
    from_reflection,
    from_word,
    identity,
    is_biconvex,
    length_ball,
    longest_element,
    minimal_coset_rep,
    minimal_mapper,
    weyl_group_order,
)

A2 = load_diagram("A2~1")
B3 = load_diagram("B3~1")


def test_identity():
    e = identity(A2)
    assert e.length == 0 and e.word == () and e.inversions == frozenset()
    assert e.apply((1, 2, 3)) == (1, 2, 3)


def test_from_word_cancellation():
    assert from_word(A2, [0, 0]).length == 0
    assert from_word(A2, [1, 2, 2, 1]).length == 0
    assert from_word(A2, [1, 2, 1, 2, 1, 2]).length == 0  # braid + cancel


def test_braid_words_canonicalize_equal():
    u = from_word(A2, [1, 2, 1])
    v = from_word(A2, [2, 1, 2])
    assert u == v
    assert u.word == v.word  # canonical form is word-independent


def test_length_and_inversions():
    w = from_word(A2, [1, 2])
    assert w.length == 2
    assert w.inversions == {(0, 1, 0), (0, 1, 1)}


def test_descents():
    w = from_word(A2, [1, 2])
    assert 2 in w.right_descents()
    assert 1 in w.left_descents()
    assert 1 not in w.right_descents()


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_group_laws(data):
    label = data.draw(st.sampled_from(["A2~1", "B3~1", "G2~1", "D5~2"]))
    d = load_diagram(label)
    nodes = list(d.nodes)
    u = from_word(d, data.draw(st.lists(st.sampled_from(nodes), max_size=8)))
    v = from_word(d, data.draw(st.lists(st.sampled_from(nodes), max_size=8)))
    x = tuple(data.draw(st.integers(-2, 2)) for _ in nodes)
    assert (u * v).apply(x) == u.apply(v.apply(x))
    assert (u.inverse() * u).length == 0
    assert u.inverse().inverse() == u
    assert len(u.inversions) == u.length
    assert from_word(d, u.word) == u


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_weak_order_is_inversion_containment(data):
    d = load_diagram("B3~1")
    nodes = list(d.nodes)
    u = from_word(d, data.draw(st.lists(st.sampled_from(nodes), max_size=6)))
    assert identity(d).le(u)
    assert u.le(u)
    i = data.draw(st.sampled_from(nodes))
    grown = u.extend(i)
    if grown is not None:
        assert u.le(grown) and not grown.le(u)


def test_extend_matches_descent():
    w = from_word(A2, [1, 2])
    assert w.extend(2) is None  # 2 is a right descent
    grown = w.extend(0)
    assert grown is not None and grown.length == 3


def test_longest_elements():
    cases = [
        (A2, (1, 2), 3),
        (B3, (1, 2, 3), 9),
        (load_diagram("C3~1"), (0, 1, 2), 9),
        (load_diagram("G2~1"), (1, 2), 6),
        (load_diagram("D4~1"), (1, 2, 3, 4), 12),
        (load_diagram("F4~1"), (1, 2, 3, 4), 24),
    ]
    for d, nodes, count in cases:
        w0 = longest_element(d, nodes)
        assert w0.length == count == len(subsystem_closure(d, nodes))
        assert (w0 * w0).length == 0
        # w0 maps every positive root of the subsystem to a negative one
        assert w0.inversions == subsystem_closure(d, nodes)
    assert longest_element(A2, []).length == 0


def test_coset_poset_sizes():
    reps = coset_poset(A2, (1, 2), [simple_root(A2, 1)])
    assert len(reps) == 3
    reps = coset_poset(B3, (1, 2, 3), [simple_root(B3, 1), simple_root(B3, 2)])
    assert len(reps) == 48 // 6
    # representatives are minimal: no subgroup simple root is an inversion
    for u in reps:
        assert simple_root(B3, 1) not in u.inversions
        assert simple_root(B3, 2) not in u.inversions
    # BFS order starts at the identity and lengths never decrease
    lengths = [u.length for u in reps]
    assert lengths[0] == 0 and lengths == sorted(lengths)


def test_minimal_coset_rep():
    w0 = longest_element(B3, (1, 2, 3))
    sub = [simple_root(B3, 2), simple_root(B3, 3)]
    rep = minimal_coset_rep(B3, w0, sub)
    assert rep.length == 9 - 4  # |W(B3)| minus |W(B2)| worth of length
    for beta in sub:
        assert beta not in rep.inversions


def test_minimal_mapper_identity_and_failure():
    a = simple_root(A2, 1)
    assert minimal_mapper(A2, (1, 2), a, a).length == 0
    assert minimal_mapper(A2, (1, 2), a, (5, 5, 5), cap=6) is None


@pytest.mark.parametrize(
    "label,nodes,alpha,g",
    [("A2~1", (1, 2), 1, 3),
     ("A6~1", (1, 2, 3), 1, 4),
     ("B3~1", (1, 2, 3), 1, 5),
     ("D4~1", (1, 2, 3, 4), 1, 6),
     ("F4~1", (1, 2, 3, 4), 1, 9)],
)
def test_mapper_to_highest_root(label, nodes, alpha, g):
    # the minimal element sending a long simple root to the highest root has
    # length g - 2, and its inverse inverts exactly the positive roots that
    # pair to -1 with the source coroot
    d = load_diagram(label)
    theta = highest_root(d, nodes)
    a = simple_root(d, alpha)
    y = minimal_mapper(d, nodes, a, theta)
    assert y is not None
    assert y.length == g - 2
    predicted = {
        b for b in subsystem_closure(d, nodes) if coroot_pair(d, a, b) == -1
    }
    assert y.inverse().inversions == predicted
    for b in subsystem_closure(d, nodes):
        if coroot_pair(d, theta, b) == 0:
            assert b not in y.inversions


def test_group_orders():
    cases = [
        (A2, (1, 2), 6),
        (B3, (1, 2, 3), 48),
        (load_diagram("C3~1"), (0, 1, 2), 48),
        (load_diagram("D4~1"), (1, 2, 3, 4), 192),
        (load_diagram("D5~1"), (1, 2, 3, 4, 5), 1920),
        (load_diagram("E6~1"), (1, 2, 3, 4, 5, 6), 51840),
        (load_diagram("E8~1"), tuple(range(2, 9)), 2903040),
        (load_diagram("E8~1"), tuple(range(1, 9)), 696729600),
        (load_diagram("F4~1"), (1, 2, 3, 4), 1152),
        (load_diagram("G2~1"), (1, 2), 12),
        (A2, (1,), 2),
        (A2, (), 1),
    ]
    for d, nodes, want in cases:
        assert weyl_group_order(d, nodes) == want


def test_group_orders_against_coset_recursion():
    # independent oracle: |W| = (number of cosets of a maximal parabolic)
    # times the parabolic's order, recursively
    def oracle(d, nodes):
        nodes = tuple(nodes)
        if not nodes:
            return 1
        sub = nodes[:-1]
        reps = coset_poset(d, nodes, [simple_root(d, i) for i in sub])
        return len(reps) * oracle(d, sub)

    for label, nodes in [("A2~1", (1, 2)), ("B3~1", (1, 2, 3)),
                         ("C3~1", (0, 1, 2)), ("G2~1", (1, 2)),
                         ("D4~1", (1, 2, 3, 4)), ("A6~1", (1, 2, 3, 4, 5))]:
        d = load_diagram(label)
        assert oracle(d, nodes) == weyl_group_order(d, nodes)


def test_from_reflection():
    theta = highest_root(A2, (1, 2))
    s = from_reflection(A2, theta)
    assert s == from_word(A2, [1, 2, 1])
    assert s.apply(theta) == tuple(-x for x in theta)
    with pytest.raises(ValueError):
        from_reflection(A2, delta(A2))


def test_biconvex():
    pos = subsystem_closure(A2, (1, 2))
    a1, a2 = simple_root(A2, 1), simple_root(A2, 2)
    theta = highest_root(A2, (1, 2))
    assert is_biconvex(A2, [a1, theta], pos)
    assert is_biconvex(A2, [], pos)
    assert is_biconvex(A2, pos, pos)
    assert not is_biconvex(A2, [a1, a2], pos)  # misses the sum
    assert not is_biconvex(A2, [theta], pos)  # sum of two outsiders
    # inversion sets of subgroup elements are biconvex within the full pool
    for word in [(1,), (2,), (1, 2), (2, 1), (1, 2, 1)]:
        assert is_biconvex(A2, from_word(A2, word).inversions, pos)


def test_length_ball_growth():
    # infinite dihedral: two elements of every positive length
    d = load_diagram("A1~1")
    assert len(length_ball(d, 5)) == 11
    # affine A2 has 3n elements of length n
    assert len(length_ball(A2, 8)) == 1 + 3 * sum(range(1, 9))
    ball = length_ball(A2, 3)
    assert sorted(w.length for w in ball) == [0, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3]
