import pytest

from borelab.cartan import load_diagram
from borelab.grading import context_for
from borelab.minuscule import (
    check_intersections,
    enumerate_poset,
    family_minimum,
    intersection_minimum,
    maxima_parametrization,
    special_involution,
    type_one_nodes,
    u_element,
    verify_all,
)
from borelab.weyl import from_reflection, from_word


def words(poset):
    return {w.word for w in poset.elements}


def test_adjoint_rank_one_and_two_exactly():
    p = enumerate_poset(context_for("A1~1", [0], adjoint=True))
    assert words(p) == {(), (0,)}
    p = enumerate_poset(context_for("A2~1", [0], adjoint=True))
    assert words(p) == {(), (0,), (0, 1), (0, 2)}
    assert sorted(p.elements[i].word for i in p.maxima) == [(0, 1), (0, 2)]


def test_smallest_hermitian_case():
    p = enumerate_poset(context_for("A1~1", [0, 1]))
    assert words(p) == {(), (0,), (1,)}
    assert len(p.maxima) == 2


def test_d5_twisted_golden(d5):
    ctx, p = d5
    assert len(p) == 15
    assert len(p.edges) == 19
    assert sorted(p.elements[i].length for i in p.maxima) == [3, 7, 7]
    w1, w2, w3 = ctx.walls
    assert len(p.family(0, w1)) == 1
    assert len(p.family(1, w2)) == 4
    assert len(p.family(2, w2)) == 1
    assert len(p.family(1, w3)) == 1
    assert p.family(0, w2) == ()
    assert p.family(3, w3) == ()


def test_d5_family_minimum_lengths(d5):
    ctx, p = d5
    w1, w2, w3 = ctx.walls
    assert family_minimum(ctx, 0, w1).length == 7  # g - 1 for a type-2 wall
    assert family_minimum(ctx, 1, w2).length == 3  # g - g_Sigma
    assert family_minimum(ctx, 2, w2).length == 3
    assert family_minimum(ctx, 1, w3).length == 7  # g - 1 for the odd wall


def test_e8_golden(e8):
    ctx, p = e8
    assert len(p) == 239
    assert len(p.maxima) == 14
    items = maxima_parametrization(p)
    by_label = {it.label: it.dimension for it in items}
    assert by_label == {
        "alpha2@wall2": 20, "alpha3@wall2": 16, "alpha4@wall2": 14,
        "alpha5@wall2": 13, "alpha6@wall2": 12, "alpha8@wall2": 14,
        "alpha0&alpha2": 28, "alpha0&alpha3": 28, "alpha0&alpha4": 28,
        "alpha0&alpha5": 28, "alpha0&alpha6": 28, "alpha0&alpha7": 28,
        "alpha0&alpha8": 28, "alpha1@wall3": 29,
    }
    for it in items:
        assert p.elements[it.position].length == it.dimension


def test_e8_family_sizes(e8):
    ctx, p = e8
    w1, w2, w3 = ctx.walls
    assert len(p.family(0, w2)) == 63  # |W(E7)| / |W(D6 + theta-star)|
    assert len(p.family(6, w2)) == 1
    assert len(p.family(1, w3)) == 1
    for a in ctx.family_indices(w1):
        assert family_minimum(ctx, a, w1).length == 30 - 2
    assert family_minimum(ctx, 0, w2).length == 30 - 18


def test_special_involution_closed_forms():
    # hermitian C-type: product of the two end reflections
    ctx = context_for("C3~1", [0, 3])
    (comp,) = ctx.components
    s = special_involution(ctx, comp)
    assert s == from_word(ctx.d, [0, 3])
    # B-type with the short-end singleton component: the folded word
    ctx = context_for("B3~1", [2])
    comp = next(c for c in ctx.components if c.nodes == (3,))
    s = special_involution(ctx, comp)
    assert s == from_word(ctx.d, [2, 0, 1, 2])
    assert s.length == 4
    ctx = context_for("B4~1", [3])
    comp = next(c for c in ctx.components if c.nodes == (4,))
    s = special_involution(ctx, comp)
    assert s == from_word(ctx.d, [3, 2, 0, 1, 2, 3])
    assert s.length == 6
    # k=2: the reflection in delta minus the component highest root
    ctx = context_for("A2~1", [0], adjoint=True)
    (comp,) = ctx.components
    assert special_involution(ctx, comp) == from_reflection(ctx.d, (1, 0, 0))
    ctx = context_for("D5~2", [1])
    comp = ctx.components[0]
    assert special_involution(ctx, comp) == from_reflection(
        ctx.d, (0, 1, 1, 1, 1))
    assert special_involution(ctx, comp).length == 8 - 2 + 1


def test_jobs_determinism():
    ctx = context_for("E6~1", [6])
    base = enumerate_poset(ctx)
    for jobs in (2, 3):
        other = enumerate_poset(ctx, jobs=jobs)
        assert [w.word for w in other.elements] == [w.word for w in base.elements]
        assert other.edges == base.edges


def test_max_length_truncation(d5):
    ctx, full = d5
    p = enumerate_poset(ctx, max_length=2)
    assert not p.complete
    assert all(w.length <= 2 for w in p.elements)
    assert len(p) == len([w for w in full.elements if w.length <= 2])
    assert enumerate_poset(ctx, max_length=len(ctx.odd_height_one_roots)).complete


def test_e6_intersections():
    ctx = context_for("E6~1", [6])
    p = enumerate_poset(ctx)
    w1, w2, w3 = ctx.walls
    nonempty = []
    for a in ctx.family_indices(w1):
        for b in ctx.family_indices(w2):
            inter = set(p.family(a, w1)) & set(p.family(b, w2))
            if inter:
                nonempty.append((a, b))
    # alpha must come from the other wall's component: 5 crossings with
    # alpha in {1..5} and beta = 0
    assert nonempty == [(1, 0), (2, 0), (3, 0), (4, 0), (5, 0)]
    m = intersection_minimum(ctx, ctx.components[1], 1, ctx.components[0], 0)
    fam = set(p.family(1, w1)) & set(p.family(0, w2))
    assert p.position(m) in fam
    assert all(m.le(p.elements[q]) for q in fam)
    assert check_intersections(p).passed


def test_u_element_length():
    ctx = context_for("E6~1", [6])
    u = u_element(ctx, ctx.components[0], ctx.components[1])
    assert u.length == 12 - 2 - 6 + 2
    assert (u * u).length == 0
    ctx = context_for("E8~1", [1])
    u = u_element(ctx, ctx.components[0], ctx.components[1])
    assert u.length == 30 - 2 - 18 + 2


def test_e6_maxima_breakdown():
    ctx = context_for("E6~1", [6])
    p = enumerate_poset(ctx)
    items = maxima_parametrization(p)
    kinds = sorted(it.kind for it in items)
    assert kinds == ["component"] * 3 + ["odd"] + ["pair"] * 5
    singles = {it.alphas[0] for it in items if it.kind == "component"}
    assert singles == {2, 3, 4}  # the long region nodes inside the big component
    assert {it.dimension for it in items if it.kind == "pair"} == {10}
    (odd_item,) = [it for it in items if it.kind == "odd"]
    assert odd_item.dimension == 11


def test_hermitian_dimensions():
    ctx = context_for("A6~1", [0, 3])
    p = enumerate_poset(ctx)
    dims = sorted(p.elements[i].length for i in p.maxima)
    assert dims == [5, 5, 6, 6, 7, 7, 12, 12]
    assert dims[-1] == len(ctx.odd_height_one_roots) // 2


def test_type_one_nodes():
    ctx = context_for("D5~2", [1])
    assert type_one_nodes(ctx, ctx.d.nodes) == (1, 2, 3)
    e8 = context_for("E8~1", [1])
    assert type_one_nodes(e8, e8.d.nodes) == tuple(e8.d.nodes)


def test_verify_all_passes_everywhere(d5, e8):
    for _, p in (d5, e8):
        results = verify_all(p)
        assert all(r.passed for r in results), [r.line() for r in results]
        names = [r.name for r in results]
        assert "bounding_equivalence" in names
        assert "maxima_parametrization" in names


def test_check_line_format(d5):
    _, p = d5
    r = verify_all(p)[0]
    assert r.line().startswith("[PASS] bounding_equivalence:")
