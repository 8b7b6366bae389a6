"""Order-2 gradings of an affine diagram and their wall/component analysis.

A grading is given by node flags (s_0, ..., s_n) in {0, 1} with
k * sum(s_i * a_i) = 2, where a_i are the marks and k is 1 or 2.  Nodes with
s_i = 1 form the odd set; the even nodes split into diagram components, each
carrying a highest root, a candidate wall k*delta - theta, and the attached
combinatorial data driving the family analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import lcm
from typing import Iterable, Optional

from .cartan import AffineDiagram, components as diagram_components, finite_dual_coxeter
from .cartan import diagram_automorphisms, load_diagram
from .roots import (
    Root,
    add,
    coroot_pair,
    highest_root,
    ht_subset,
    is_long,
    is_real_root,
    norm_sq,
    simple_root,
    subsystem_closure,
)


@dataclass(frozen=True)
class InvolutionSpec:
    """Node flags defining an order-2 grading of the loop algebra."""

    diagram: AffineDiagram
    flags: tuple[int, ...]
    adjoint: bool = False

    def __post_init__(self):
        d = self.diagram
        if len(self.flags) != d.size or any(s not in (0, 1) for s in self.flags):
            raise ValueError("flags must be one 0/1 value per node")
        weight = sum(s * a for s, a in zip(self.flags, d.marks))
        if weight not in (1, 2):
            raise ValueError(f"flag weight {weight} does not define an order-2 grading")
        if weight == 2 and (d.twist != 1 or self.adjoint):
            raise ValueError("flag weight 2 requires an untwisted diagram, not adjoint")
        if weight == 1:
            if d.twist == 1 and not self.adjoint:
                raise ValueError("flag weight 1 on an untwisted diagram needs adjoint=True")
            if d.twist == 2 and self.adjoint:
                raise ValueError("adjoint gradings only exist on untwisted diagrams")

    @property
    def k(self) -> int:
        """2 divided by the flag weight; k*delta has odd height 2."""
        return 2 // sum(s * a for s, a in zip(self.flags, self.diagram.marks))

    @property
    def odd_nodes(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.flags) if s)

    @property
    def even_nodes(self) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.flags) if not s)

    def describe(self) -> str:
        tag = "adjoint " if self.adjoint else ""
        return f"{self.diagram.label} {tag}odd={{{','.join(map(str, self.odd_nodes))}}}"


def involution(d: AffineDiagram, odd: Iterable[int], adjoint: bool = False) -> InvolutionSpec:
    odd_set = set(odd)
    return InvolutionSpec(d, tuple(1 if i in odd_set else 0 for i in d.nodes), adjoint)


def catalog_involutions(
    d: AffineDiagram, include_adjoint: bool = False, dedupe: bool = True
) -> tuple[InvolutionSpec, ...]:
    """All order-2 gradings of the diagram, optionally up to diagram symmetry."""
    specs: list[InvolutionSpec] = []
    if d.twist == 1:
        for i in d.nodes:
            if d.marks[i] == 2:
                specs.append(involution(d, [i]))
        ones = [i for i in d.nodes if d.marks[i] == 1]
        for i, j in combinations(ones, 2):
            specs.append(involution(d, [i, j]))
        if include_adjoint:
            for i in ones:
                specs.append(involution(d, [i], adjoint=True))
    else:
        for i in d.nodes:
            if d.marks[i] == 1:
                specs.append(involution(d, [i]))
    if not dedupe:
        return tuple(specs)
    autos = diagram_automorphisms(d)
    seen: set[tuple] = set()
    out = []
    for spec in specs:
        orbit = {
            (tuple(sorted(perm[i] for i in spec.odd_nodes)), spec.adjoint) for perm in autos
        }
        key = min(orbit)
        if key not in seen:
            seen.add(key)
            out.append(spec)
    return tuple(out)


@dataclass(frozen=True)
class EvenComponent:
    """A connected component of the even nodes, with its wall candidate."""

    index: int
    nodes: tuple[int, ...]
    theta: Root
    theta_norm: Fraction
    pairing_row: tuple[int, ...]  # <alpha_j, theta^vee> per node j
    level: int  # r: minus the pairing of an odd simple root with theta^vee
    eps: int  # 2 for a single-node component, else 1
    boundary: tuple[int, ...]  # nodes pairing with theta^vee by exactly eps
    sub_dual_coxeter: int
    wall_included: bool
    region: tuple[int, ...]  # nodes of the attached subdiagram A
    region_in_component: tuple[int, ...]  # region nodes inside this component


@dataclass(frozen=True)
class Wall:
    """A non-simple bounding root: k*delta - theta, or k*delta + beta."""

    index: int  # 1-based position in the wall list
    kind: str  # "component" or "odd"
    root: Root
    component: Optional[EvenComponent] = None
    node: Optional[int] = None  # the odd simple node, for kind "odd"
    wall_type: int = 1


class GradedContext:
    """Everything derived from one grading: components, walls, odd-height data."""

    def __init__(self, spec: InvolutionSpec):
        self.spec = spec
        self.d = spec.diagram
        self.k = spec.k
        self.odd = spec.odd_nodes
        self.even = spec.even_nodes
        self.delta = self.d.marks
        self.components = self._build_components()
        self.walls = self._build_walls()

    def ht_odd(self, a: Root) -> int:
        """Coefficient sum over the odd nodes."""
        return ht_subset(a, self.odd)

    def is_complex(self, a: Root) -> bool:
        """Whether delta + a stays a real root; only possible when k = 2."""
        return self.k == 2 and is_real_root(self.d, add(self.delta, a))

    def root_type(self, a: Root) -> int:
        """1 for long non-complex real roots, else 2."""
        if norm_sq(self.d, a) == 2 and not self.is_complex(a):
            return 1
        return 2

    def _build_components(self) -> tuple[EvenComponent, ...]:
        d = self.d
        out = []
        for idx, nodes in enumerate(diagram_components(d, self.even), start=1):
            theta = simple_root(d, nodes[0]) if len(nodes) == 1 else highest_root(d, nodes)
            row = tuple(coroot_pair(d, theta, simple_root(d, j)) for j in d.nodes)
            eps = 2 if len(nodes) == 1 else 1
            level = -row[min(self.odd)]
            nrm = norm_sq(d, theta)
            neg = [i for i in d.nodes if row[i] <= 0]
            region: set[int] = set()
            for comp in diagram_components(d, neg):
                if any(i in self.odd for i in comp):
                    region |= set(comp)
            out.append(
                EvenComponent(
                    index=idx,
                    nodes=nodes,
                    theta=theta,
                    theta_norm=nrm,
                    pairing_row=row,
                    level=level,
                    eps=eps,
                    boundary=tuple(i for i in d.nodes if row[i] == eps),
                    sub_dual_coxeter=finite_dual_coxeter(d, nodes),
                    wall_included=nrm >= 1,
                    region=tuple(sorted(region)),
                    region_in_component=tuple(sorted(region & set(nodes))),
                )
            )
        return tuple(out)

    def _build_walls(self) -> tuple[Wall, ...]:
        d, k = self.d, self.k
        walls = []
        for comp in self.components:
            if not comp.wall_included:
                continue
            root = tuple(k * m - t for m, t in zip(self.delta, comp.theta))
            walls.append(
                Wall(
                    index=len(walls) + 1,
                    kind="component",
                    root=root,
                    component=comp,
                    wall_type=self.root_type(root),
                )
            )
        for b in self.odd:
            beta = simple_root(d, b)
            if self.root_type(beta) == 1:
                root = tuple(k * m + x for m, x in zip(self.delta, beta))
                walls.append(
                    Wall(index=len(walls) + 1, kind="odd", root=root, node=b, wall_type=1)
                )
        return tuple(walls)

    @cached_property
    def even_positive_roots(self) -> frozenset[Root]:
        """Positive roots supported on the even nodes."""
        if not self.even:
            return frozenset()
        return subsystem_closure(self.d, self.even)

    @cached_property
    def odd_height_one_roots(self) -> frozenset[Root]:
        """All positive real roots of odd height 1 (a finite set).

        Coordinates are bounded by k * marks, so a box scan with a squared
        length filter and a reflection-descent confirmation is exhaustive.
        """
        d, k = self.d, self.k
        gram = [[d.symmetrizer[i] * d.cartan[i][j] for j in d.nodes] for i in d.nodes]
        lam = lcm(*(x.denominator for row in gram for x in row))
        gint = [[int(lam * x) for x in row] for row in gram]
        allowed = {int(lam * 2 * di) for di in d.symmetrizer}
        even = list(self.even)
        ranges = [range(k * d.marks[i] + 1) for i in even]
        found = []
        for b in self.odd:
            base = [0] * d.size
            base[b] = 1
            for combo in product(*ranges):
                vec = list(base)
                for pos, c in zip(even, combo):
                    vec[pos] = c
                q = 0
                for i, vi in enumerate(vec):
                    if vi:
                        row = gint[i]
                        q += vi * sum(row[j] * vj for j, vj in enumerate(vec) if vj)
                if q not in allowed:
                    continue
                cand = tuple(vec)
                if is_real_root(d, cand):
                    found.append(cand)
        return frozenset(found)

    def bounding_roots(self) -> frozenset[Root]:
        """Even simple roots plus wall roots; avoiding all of them in the
        inversion set characterizes the elements being enumerated."""
        out = {simple_root(self.d, i) for i in self.even}
        out.update(w.root for w in self.walls)
        return frozenset(out)

    def family_indices(self, wall: Wall) -> tuple[int, ...]:
        """Simple nodes heading a nonempty family at this wall."""
        d = self.d
        if wall.kind == "odd":
            if len(self.odd) == 1:
                return tuple(self.odd)
            return tuple(i for i in self.odd if i != wall.node)
        comp = wall.component
        assert comp is not None
        if wall.wall_type == 1:
            return tuple(i for i in comp.region if norm_sq(d, simple_root(d, i)) == 2)
        return tuple(i for i in comp.nodes if is_long(d, simple_root(d, i), comp.nodes))

    def blocked_nodes(self, wall: Wall) -> tuple[int, ...]:
        """Nodes whose reflections are excluded from family stabilizers at
        this wall: the simples pairing by 1 with the component's highest
        coroot for a type-1 wall, all odd nodes for a type-2 wall, and the
        defining odd node itself for an odd wall."""
        if wall.kind == "odd":
            assert wall.node is not None
            return (wall.node,)
        comp = wall.component
        assert comp is not None
        if wall.wall_type == 1:
            return tuple(i for i in self.d.nodes if comp.pairing_row[i] == 1)
        return self.odd

    def perp_nodes(self, alpha: int) -> tuple[int, ...]:
        """Nodes whose simple root is orthogonal to alpha's."""
        return tuple(i for i in self.d.nodes if i != alpha and self.d.cartan[i][alpha] == 0)

    def quotient_data(self, alpha: int, wall: Wall) -> tuple[tuple[int, ...], tuple[Root, ...]]:
        """Ambient nodes and subgroup simple system for the family at (alpha, wall).

        The subgroup simples are the perpendicular nodes minus the blocked
        nodes, plus the component's highest root in the starred situation
        (type-1 wall of a multi-node component, alpha outside both the
        component and the odd set).
        """
        perp = self.perp_nodes(alpha)
        blocked = set(self.blocked_nodes(wall))
        reduced = tuple(i for i in perp if i not in blocked)
        starred = [simple_root(self.d, i) for i in reduced]
        comp = wall.component
        if (
            wall.kind == "component"
            and comp is not None
            and wall.wall_type == 1
            and len(comp.nodes) > 1
            and alpha in comp.region
            and alpha not in comp.nodes
            and alpha not in self.odd
        ):
            starred.append(comp.theta)
        return perp, tuple(starred)


def analyze(spec: InvolutionSpec) -> GradedContext:
    return GradedContext(spec)


def context_for(label: str, odd: Iterable[int], adjoint: bool = False) -> GradedContext:
    d = load_diagram(label)
    return GradedContext(involution(d, odd, adjoint))
