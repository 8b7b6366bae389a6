"""Enumeration and structure of the poset attached to an order-2 grading.

The elements collected here are the Weyl group elements whose inversion sets
consist only of odd-height-1 roots; they form a lower set in the right weak
order, in bijection with the Borel-stable abelian subalgebras of the odd part,
with dimension equal to length.  Families are the fibers w(alpha) = wall root
over a simple root alpha and a wall; their minima, pairwise intersections, and
the parametrization of the maximal elements all have closed-form descriptions
that `verify_all` checks against the enumerated poset.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .cartan import dual_coxeter_number, finite_dual_coxeter
from .grading import EvenComponent, GradedContext, Wall
from .roots import (
    Root,
    add,
    root_kind,
    simple_root,
    sub,
    subsystem_closure,
)
from .weyl import (
    WeylElement,
    coset_poset,
    from_word,
    identity,
    is_biconvex,
    longest_element,
    minimal_mapper,
)


class MinusculePoset:
    """BFS-enumerated poset of elements with all inversions of odd height 1."""

    def __init__(
        self,
        ctx: GradedContext,
        elements: tuple[WeylElement, ...],
        edges: tuple[tuple[int, int], ...],
        complete: bool,
    ):
        self.ctx = ctx
        self.elements = elements
        self.edges = edges
        self.complete = complete
        self._position = {w.mat: i for i, w in enumerate(elements)}
        self._families: Optional[dict[tuple[int, int], tuple[int, ...]]] = None

    def __len__(self) -> int:
        return len(self.elements)

    def position(self, w: WeylElement) -> Optional[int]:
        return self._position.get(w.mat)

    @property
    def maxima(self) -> tuple[int, ...]:
        sources = {a for a, _ in self.edges}
        return tuple(i for i in range(len(self.elements)) if i not in sources)

    def _family_table(self) -> dict[tuple[int, int], tuple[int, ...]]:
        if self._families is None:
            table: dict[tuple[int, int], list[int]] = {}
            for pos, w in enumerate(self.elements):
                for wall in self.ctx.walls:
                    for a in self.ctx.d.nodes:
                        if w.mat[a] == wall.root:
                            table.setdefault((a, wall.index), []).append(pos)
            self._families = {k: tuple(v) for k, v in table.items()}
        return self._families

    def family(self, alpha: int, wall: Wall) -> tuple[int, ...]:
        """Positions of elements sending alpha's simple root to the wall root."""
        return self._family_table().get((alpha, wall.index), ())

    def family_maximal(self, positions: Iterable[int]) -> tuple[int, ...]:
        pos = list(positions)
        out = []
        for p in pos:
            w = self.elements[p]
            if not any(
                q != p and w.inversions < self.elements[q].inversions for q in pos
            ):
                out.append(p)
        return tuple(out)


def enumerate_poset(
    ctx: GradedContext, max_length: Optional[int] = None, jobs: int = 1
) -> MinusculePoset:
    """Breadth-first enumeration; deterministic for any job count."""
    s1 = ctx.odd_height_one_roots
    cap = len(s1) if max_length is None else min(max_length, len(s1))
    start = identity(ctx.d)
    elements = [start]
    position = {start.mat: 0}
    edges: list[tuple[int, int]] = []
    frontier = [0]
    nodes = list(ctx.d.nodes)
    truncated = False

    def expand(pos: int) -> list[tuple[int, WeylElement]]:
        w = elements[pos]
        out = []
        for i in nodes:
            if w.mat[i] in s1:
                grown = w.extend(i)
                assert grown is not None
                out.append((pos, grown))
        return out

    pool = ThreadPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        depth = 0
        while frontier:
            if depth == cap:
                if any(expand(p) for p in frontier):
                    truncated = True
                break
            depth += 1
            if pool is not None:
                batches = pool.map(expand, frontier)
            else:
                batches = map(expand, frontier)
            new_frontier: list[int] = []
            for batch in batches:
                for src, grown in batch:
                    tgt = position.get(grown.mat)
                    if tgt is None:
                        tgt = len(elements)
                        position[grown.mat] = tgt
                        elements.append(grown)
                        new_frontier.append(tgt)
                    edges.append((src, tgt))
            frontier = new_frontier
    finally:
        if pool is not None:
            pool.shutdown()
    return MinusculePoset(ctx, tuple(elements), tuple(edges), complete=not truncated)


def special_involution(ctx: GradedContext, comp: EvenComponent) -> WeylElement:
    """Shortest element sending the component's highest root to its wall root."""
    d = ctx.d
    target = tuple(ctx.k * m - t for m, t in zip(ctx.delta, comp.theta))
    cap = dual_coxeter_number(d) + 2
    s = minimal_mapper(d, d.nodes, comp.theta, target, cap=cap)
    if s is None:
        raise ValueError(f"no element maps {comp.theta} to {target} within length {cap}")
    return s


def family_minimum(ctx: GradedContext, alpha: int, wall: Wall) -> WeylElement:
    """The closed-form minimum of the family at (alpha, wall)."""
    d = ctx.d
    a_root = simple_root(d, alpha)
    if wall.kind == "odd":
        b = wall.node
        assert b is not None
        w0 = longest_element(d, ctx.even)
        perp_even = [i for i in ctx.even if d.cartan[i][b] == 0]
        w0b = longest_element(d, perp_even)
        return from_word(d, (b,)) * (w0b * w0)
    comp = wall.component
    assert comp is not None
    if wall.wall_type == 1:
        w = minimal_mapper(d, comp.region, a_root, wall.root)
        if w is None:
            raise ValueError(f"alpha_{alpha} does not reach the wall within its region")
        return w
    v = minimal_mapper(d, comp.nodes, a_root, comp.theta)
    if v is None:
        raise ValueError(f"alpha_{alpha} is not conjugate to the component highest root")
    return special_involution(ctx, comp) * v


def u_element(ctx: GradedContext, ca: EvenComponent, cb: EvenComponent) -> WeylElement:
    """Longest minimal representative attached to two type-1 components."""
    d = ctx.d
    inter = sorted(set(ca.region) & set(cb.region))
    outer = longest_element(d, inter)
    inner = longest_element(d, [i for i in inter if i not in ctx.odd])
    return inner * outer


def intersection_minimum(
    ctx: GradedContext, ca: EvenComponent, x: int, cb: EvenComponent, y: int
) -> WeylElement:
    """Minimum of the intersection of the two crossed families:
    x in ca mapping to cb's wall, y in cb mapping to ca's wall."""
    d = ctx.d
    vx = minimal_mapper(d, ca.nodes, simple_root(d, x), ca.theta)
    vy = minimal_mapper(d, cb.nodes, simple_root(d, y), cb.theta)
    if vx is None or vy is None:
        raise ValueError("pair members must be conjugate to their component's highest root")
    return u_element(ctx, ca, cb) * vx * vy


def type_one_nodes(ctx: GradedContext, nodes: Iterable[int]) -> tuple[int, ...]:
    """Members of a node set whose simple root is long and stays real when
    shifted by delta (type 1)."""
    return tuple(
        i for i in nodes if ctx.root_type(simple_root(ctx.d, i)) == 1
    )


def _positive_count(ctx: GradedContext, nodes: Sequence[int]) -> int:
    return len(subsystem_closure(ctx.d, nodes)) if nodes else 0


def single_dimension(ctx: GradedContext, alpha: int, wall: Wall) -> int:
    """Closed-form dimension of the family maximum at (alpha, wall)."""
    g0 = dual_coxeter_number(ctx.d)
    perp = ctx.perp_nodes(alpha)
    blocked = set(ctx.blocked_nodes(wall))
    reduced = tuple(i for i in perp if i not in blocked)
    base = (
        g0 - wall.component.sub_dual_coxeter
        if wall.kind == "component" and wall.wall_type == 1
        else g0 - 1
    )
    return base + _positive_count(ctx, perp) - _positive_count(ctx, reduced)


def pair_dimension(ctx: GradedContext, x: int, y: int) -> int:
    """Closed-form dimension of the maximum attached to a component pair."""
    g0 = dual_coxeter_number(ctx.d)
    inter = tuple(sorted(set(ctx.perp_nodes(x)) & set(ctx.perp_nodes(y))))
    inner = tuple(i for i in inter if i not in ctx.odd)
    return g0 - 2 + _positive_count(ctx, inter) - _positive_count(ctx, inner)


@dataclass(frozen=True)
class MaximumItem:
    """One entry of the maxima parametrization."""

    kind: str  # "component", "pair", "odd"
    alphas: tuple[int, ...]
    wall_indices: tuple[int, ...]
    position: int
    dimension: int
    label: str


def maxima_parametrization(poset: MinusculePoset) -> tuple[MaximumItem, ...]:
    """The closed-form index set for the maximal elements, with closed-form
    dimensions, resolved to positions in the enumerated poset."""
    ctx = poset.ctx
    items: list[MaximumItem] = []
    component_walls = [w for w in ctx.walls if w.kind == "component"]
    for wall in component_walls:
        comp = wall.component
        assert comp is not None
        if wall.wall_type == 1:
            heads = type_one_nodes(ctx, comp.region_in_component)
        else:
            heads = ctx.family_indices(wall)
        for a in heads:
            fam = poset.family(a, wall)
            tops = poset.family_maximal(fam)
            if len(tops) != 1:
                raise ValueError(
                    f"family ({a}, wall {wall.index}) has {len(tops)} maximal elements"
                )
            items.append(
                MaximumItem(
                    kind="component",
                    alphas=(a,),
                    wall_indices=(wall.index,),
                    position=tops[0],
                    dimension=single_dimension(ctx, a, wall),
                    label=f"alpha{a}@wall{wall.index}",
                )
            )
    for ia in range(len(component_walls)):
        for ib in range(ia + 1, len(component_walls)):
            wa, wb = component_walls[ia], component_walls[ib]
            if wa.wall_type != 1 or wb.wall_type != 1:
                continue
            ca, cb = wa.component, wb.component
            assert ca is not None and cb is not None
            for x in type_one_nodes(ctx, ca.nodes):
                for y in type_one_nodes(ctx, cb.nodes):
                    both = sorted(set(poset.family(x, wb)) & set(poset.family(y, wa)))
                    tops = poset.family_maximal(both)
                    if len(tops) != 1:
                        raise ValueError(
                            f"pair ({x}, {y}) has {len(tops)} maximal elements"
                        )
                    items.append(
                        MaximumItem(
                            kind="pair",
                            alphas=(x, y),
                            wall_indices=(wb.index, wa.index),
                            position=tops[0],
                            dimension=pair_dimension(ctx, x, y),
                            label=f"alpha{x}&alpha{y}",
                        )
                    )
    for wall in ctx.walls:
        if wall.kind != "odd":
            continue
        for a in ctx.family_indices(wall):
            fam = poset.family(a, wall)
            tops = poset.family_maximal(fam)
            if len(tops) != 1:
                raise ValueError(
                    f"family ({a}, wall {wall.index}) has {len(tops)} maximal elements"
                )
            items.append(
                MaximumItem(
                    kind="odd",
                    alphas=(a,),
                    wall_indices=(wall.index,),
                    position=tops[0],
                    dimension=single_dimension(ctx, a, wall),
                    label=f"alpha{a}@wall{wall.index}",
                )
            )
    return tuple(items)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def _check(name: str, passed: bool, detail: str) -> CheckResult:
    return CheckResult(name, bool(passed), detail)


def verify_all(poset: MinusculePoset, structural_limit: int = 600) -> list[CheckResult]:
    """Run every structural check against the enumerated poset."""
    out = [
        check_bounding_equivalence(poset),
        check_poset_basics(poset),
        check_pairing_structure(poset.ctx),
        check_family_minima(poset),
        check_family_completeness(poset),
        check_coset_isomorphism(poset),
        check_intersections(poset),
        check_maxima(poset),
        check_length_identities(poset.ctx),
        check_special_involutions(poset.ctx),
        check_structural(poset, structural_limit),
        check_family_coverage(poset),
    ]
    ctx = poset.ctx
    if ctx.k == 1 and len(ctx.odd) == 2:
        out.append(check_hermitian_half(poset))
    if ctx.spec.adjoint:
        out.append(check_adjoint_count(poset))
    return out


def check_bounding_equivalence(poset: MinusculePoset) -> CheckResult:
    """Avoiding the bounding roots must carve out exactly the same poset."""
    ctx = poset.ctx
    blocked = ctx.bounding_roots()
    cap = 4 * len(poset) + 1000
    start = identity(ctx.d)
    seen = {start.mat}
    frontier = [start]
    count = 1
    ok = True
    while frontier and ok:
        nxt = []
        for w in frontier:
            for i in ctx.d.nodes:
                col = w.mat[i]
                if not all(x >= 0 for x in col) or col in blocked:
                    continue
                grown = w.extend(i)
                if grown is None or grown.mat in seen:
                    continue
                if poset.position(grown) is None:
                    ok = False
                    break
                seen.add(grown.mat)
                nxt.append(grown)
                count += 1
                if count > cap:
                    ok = False
                    break
            if not ok:
                break
        frontier = nxt
    ok = ok and count == len(poset)
    return _check(
        "bounding_equivalence",
        ok,
        f"wall-avoiding enumeration found {count} of {len(poset)} elements",
    )


def check_poset_basics(poset: MinusculePoset) -> CheckResult:
    ctx = poset.ctx
    s1 = ctx.odd_height_one_roots
    problems = []
    for w in poset.elements:
        if len(w.inversions) != w.length:
            problems.append(f"length mismatch at {w.word}")
        if not w.inversions <= s1:
            problems.append(f"inversion outside odd height 1 at {w.word}")
    for a, b in poset.edges:
        u, v = poset.elements[a], poset.elements[b]
        if not (u.length + 1 == v.length and u.inversions < v.inversions):
            problems.append(f"bad cover {u.word} -> {v.word}")
    if poset.elements[0].length != 0:
        problems.append("missing identity")
    return _check(
        "poset_basics",
        not problems,
        problems[0] if problems else f"{len(poset)} elements, {len(poset.edges)} covers",
    )


def check_pairing_structure(ctx: GradedContext) -> CheckResult:
    """Simple-root pairings with each component highest coroot take only the
    structured values: eps on the boundary, 0 elsewhere inside the even set,
    and a single common negative on the odd nodes."""
    problems = []
    for comp in ctx.components:
        for j in ctx.d.nodes:
            t = comp.pairing_row[j]
            if j in ctx.odd:
                if t != -comp.level:
                    problems.append(
                        f"comp {comp.index}: odd node {j} pairs {t}, expected {-comp.level}"
                    )
            elif t not in (0, comp.eps):
                problems.append(f"comp {comp.index}: even node {j} pairs {t}")
        if comp.wall_included != (comp.level <= 2):
            problems.append(f"comp {comp.index}: inclusion/level mismatch")
    return _check(
        "pairing_structure",
        not problems,
        problems[0] if problems else f"{len(ctx.components)} components structured",
    )


def check_family_minima(poset: MinusculePoset) -> CheckResult:
    ctx = poset.ctx
    problems = []
    for wall in ctx.walls:
        for a in ctx.family_indices(wall):
            fam = poset.family(a, wall)
            if not fam:
                problems.append(f"family ({a}, wall {wall.index}) empty")
                continue
            m = family_minimum(ctx, a, wall)
            pos = poset.position(m)
            if pos is None or pos not in fam:
                problems.append(f"closed-form minimum not in family ({a}, {wall.index})")
                continue
            if not all(m.le(poset.elements[p]) for p in fam):
                problems.append(f"({a}, wall {wall.index}): minimum not below all members")
    return _check(
        "family_minima",
        not problems,
        problems[0] if problems else "every family has its closed-form minimum",
    )


def check_family_completeness(poset: MinusculePoset) -> CheckResult:
    """No family may exist at (alpha, wall) outside the predicted index set."""
    ctx = poset.ctx
    problems = []
    for wall in ctx.walls:
        allowed = set(ctx.family_indices(wall))
        for a in ctx.d.nodes:
            if a not in allowed and poset.family(a, wall):
                problems.append(f"unexpected family ({a}, wall {wall.index})")
    return _check(
        "family_completeness",
        not problems,
        problems[0] if problems else "families appear exactly at predicted indices",
    )


def check_coset_isomorphism(poset: MinusculePoset) -> CheckResult:
    """Each family is order-isomorphic to the minimal coset representatives of
    its stabilizer quotient, via left translation by the family minimum."""
    ctx = poset.ctx
    problems = []
    for wall in ctx.walls:
        for a in ctx.family_indices(wall):
            fam = poset.family(a, wall)
            if not fam:
                continue
            m = family_minimum(ctx, a, wall)
            ambient, subgroup = ctx.quotient_data(a, wall)
            reps = coset_poset(ctx.d, ambient, subgroup)
            if len(reps) != len(fam):
                problems.append(
                    f"({a}, wall {wall.index}): {len(reps)} cosets vs {len(fam)} members"
                )
                continue
            images = []
            for u in reps:
                w = m * u
                pos = poset.position(w)
                if pos is None or pos not in fam:
                    problems.append(
                        f"({a}, wall {wall.index}): translate of coset rep leaves family"
                    )
                    break
                images.append(w)
            else:
                for i in range(len(reps)):
                    for j in range(len(reps)):
                        if (reps[i].inversions <= reps[j].inversions) != (
                            images[i].inversions <= images[j].inversions
                        ):
                            problems.append(
                                f"({a}, wall {wall.index}): order not preserved"
                            )
                            break
                    else:
                        continue
                    break
    return _check(
        "coset_isomorphism",
        not problems,
        problems[0] if problems else "families are translated coset posets",
    )


def check_intersections(poset: MinusculePoset) -> CheckResult:
    """Pairwise family intersections: exact nonemptiness criterion, the
    closed-form minimum, its inversion set, and the cardinality ratio."""
    from .weyl import weyl_group_order

    ctx = poset.ctx
    problems = []
    walls = list(ctx.walls)
    for wa in walls:
        for wb in walls:
            if wb.index <= wa.index:
                continue
            for a in ctx.family_indices(wa):
                for b in ctx.family_indices(wb):
                    fam_a = set(poset.family(a, wa))
                    fam_b = set(poset.family(b, wb))
                    inter = fam_a & fam_b
                    predicted = (
                        wa.kind == "component"
                        and wb.kind == "component"
                        and wa.wall_type == 1
                        and wb.wall_type == 1
                        and a in type_one_nodes(ctx, wb.component.nodes)
                        and b in type_one_nodes(ctx, wa.component.nodes)
                    )
                    if bool(inter) != predicted:
                        problems.append(
                            f"intersection ({a},{wa.index})&({b},{wb.index}): "
                            f"{'nonempty' if inter else 'empty'}, predicted otherwise"
                        )
                        continue
                    if not inter:
                        continue
                    ca, cb = wb.component, wa.component
                    m = intersection_minimum(ctx, cb, b, ca, a)
                    pos = poset.position(m)
                    if pos is None or pos not in inter:
                        problems.append(
                            f"intersection ({a},{wa.index})&({b},{wb.index}): bad minimum"
                        )
                        continue
                    if not all(m.le(poset.elements[p]) for p in inter):
                        problems.append(
                            f"intersection ({a},{wa.index})&({b},{wb.index}): not minimal"
                        )
                    wa_min = family_minimum(ctx, a, wa)
                    wb_min = family_minimum(ctx, b, wb)
                    if m.inversions != wa_min.inversions | wb_min.inversions:
                        problems.append(
                            f"intersection ({a},{wa.index})&({b},{wb.index}): "
                            "inversions are not the union of the family minima's"
                        )
                    common = tuple(
                        sorted(set(ctx.perp_nodes(a)) & set(ctx.perp_nodes(b)))
                    )
                    inner = tuple(i for i in common if i not in ctx.odd)
                    expect = weyl_group_order(ctx.d, common) // weyl_group_order(
                        ctx.d, inner
                    )
                    if len(inter) != expect:
                        problems.append(
                            f"intersection ({a},{wa.index})&({b},{wb.index}): "
                            f"size {len(inter)} vs predicted {expect}"
                        )
    return _check(
        "intersections",
        not problems,
        problems[0] if problems else "intersection criterion, minima, and sizes agree",
    )


def check_maxima(poset: MinusculePoset) -> CheckResult:
    try:
        items = maxima_parametrization(poset)
    except ValueError as exc:
        return _check("maxima_parametrization", False, str(exc))
    problems = []
    positions = [it.position for it in items]
    if len(set(positions)) != len(positions):
        problems.append("parametrization hits a maximal element twice")
    if set(positions) != set(poset.maxima):
        problems.append(
            f"parametrized {len(set(positions))} maxima, enumeration has {len(poset.maxima)}"
        )
    for it in items:
        if poset.elements[it.position].length != it.dimension:
            problems.append(
                f"{it.label}: closed-form dimension {it.dimension} "
                f"vs length {poset.elements[it.position].length}"
            )
    return _check(
        "maxima_parametrization",
        not problems,
        problems[0] if problems else f"{len(items)} maxima parametrized with exact dimensions",
    )


def check_length_identities(ctx: GradedContext) -> CheckResult:
    g0 = dual_coxeter_number(ctx.d)
    problems = []
    for wall in ctx.walls:
        for a in ctx.family_indices(wall):
            m = family_minimum(ctx, a, wall)
            if wall.kind == "component" and wall.wall_type == 1:
                expect = g0 - wall.component.sub_dual_coxeter
            else:
                expect = g0 - 1
            if m.length != expect:
                problems.append(
                    f"({a}, wall {wall.index}): minimum length {m.length}, expected {expect}"
                )
    for wall in ctx.walls:
        if wall.kind == "component" and wall.wall_type == 1:
            comp = wall.component
            region_g = finite_dual_coxeter(ctx.d, comp.region)
            if region_g != g0 - comp.sub_dual_coxeter + 2:
                problems.append(
                    f"comp {comp.index}: region dual Coxeter {region_g} "
                    f"!= {g0 - comp.sub_dual_coxeter + 2}"
                )
    comps = [w.component for w in ctx.walls if w.kind == "component" and w.wall_type == 1]
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            u = u_element(ctx, comps[i], comps[j])
            expect = g0 - comps[i].sub_dual_coxeter - comps[j].sub_dual_coxeter + 2
            if u.length != expect:
                problems.append(
                    f"u({comps[i].index},{comps[j].index}): length {u.length} != {expect}"
                )
    return _check(
        "length_identities",
        not problems,
        problems[0] if problems else "family-minimum and pair-element lengths match",
    )


def check_special_involutions(ctx: GradedContext) -> CheckResult:
    from .weyl import from_reflection

    g0 = dual_coxeter_number(ctx.d)
    problems = []
    for wall in ctx.walls:
        if wall.kind != "component" or wall.wall_type != 2:
            continue
        comp = wall.component
        s = special_involution(ctx, comp)
        if (s * s).length != 0:
            problems.append(f"comp {comp.index}: special element is not an involution")
        if s.apply(comp.theta) != wall.root:
            problems.append(f"comp {comp.index}: wrong image of the highest root")
        if s.length != g0 - comp.sub_dual_coxeter + 1:
            problems.append(
                f"comp {comp.index}: length {s.length} != {g0 - comp.sub_dual_coxeter + 1}"
            )
        predicted = {
            g
            for g in ctx.odd_height_one_roots
            if sum(comp.pairing_row[i] * c for i, c in enumerate(g)) == -2
        }
        if s.inversions != predicted:
            problems.append(f"comp {comp.index}: inversion set mismatch")
        if ctx.k == 2:
            shifted = sub(ctx.delta, comp.theta)
            if s != from_reflection(ctx.d, shifted):
                problems.append(
                    f"comp {comp.index}: not the reflection in delta minus theta"
                )
    return _check(
        "special_involutions",
        not problems,
        problems[0] if problems else "special involutions match their closed forms",
    )


def check_structural(poset: MinusculePoset, limit: int) -> CheckResult:
    """Inversion sets are biconvex and pairwise-sum-free (abelian)."""
    ctx = poset.ctx
    candidates = tuple(ctx.even_positive_roots | ctx.odd_height_one_roots)
    if len(poset) <= limit:
        targets = list(range(len(poset)))
        scope = "all"
    else:
        step = max(1, len(poset) // limit)
        targets = sorted(set(range(0, len(poset), step)) | set(poset.maxima))
        scope = f"{len(targets)} sampled"
    problems = []
    for p in targets:
        w = poset.elements[p]
        inv = sorted(w.inversions)
        for i, x in enumerate(inv):
            for y in inv[i + 1 :]:
                if root_kind(ctx.d, add(x, y)) != "none":
                    problems.append(f"element {p}: inversions sum to a root")
                    break
            else:
                continue
            break
        if not is_biconvex(ctx.d, inv, candidates):
            problems.append(f"element {p}: inversion set not biconvex")
    return _check(
        "structural",
        not problems,
        problems[0] if problems else f"{scope} inversion sets biconvex and sum-free",
    )


def check_family_coverage(poset: MinusculePoset) -> CheckResult:
    """Every maximal element lies in at least one family."""
    covered = set()
    for positions in poset._family_table().values():
        covered.update(positions)
    missing = [i for i in poset.maxima if i not in covered]
    return _check(
        "family_coverage",
        not missing,
        f"{len(missing)} uncovered maxima" if missing else "all maximal elements covered",
    )


def check_hermitian_half(poset: MinusculePoset) -> CheckResult:
    ctx = poset.ctx
    half, rem = divmod(len(ctx.odd_height_one_roots), 2)
    problems = []
    if rem:
        problems.append("odd height-1 root count is odd")
    for wall in ctx.walls:
        if wall.kind != "odd":
            continue
        for a in ctx.family_indices(wall):
            tops = poset.family_maximal(poset.family(a, wall))
            for t in tops:
                if poset.elements[t].length != half:
                    problems.append(
                        f"({a}, wall {wall.index}): top dimension "
                        f"{poset.elements[t].length} != {half}"
                    )
    return _check(
        "hermitian_half",
        not problems,
        problems[0] if problems else f"odd-wall family tops all have dimension {half}",
    )


def check_adjoint_count(poset: MinusculePoset) -> CheckResult:
    expect = 2 ** (poset.ctx.d.size - 1)
    ok = len(poset) == expect
    return _check("adjoint_count", ok, f"{len(poset)} elements vs 2^rank = {expect}")
