"""Affine Weyl group elements and the coset machinery built on them.

An element is stored by its action matrix (column i = image of the i-th simple
root, in simple-root coordinates), the matrix of the inverse, and the inversion
set {gamma > 0 : w^{-1}(gamma) < 0}.  Length equals the inversion count, and
the right weak order is containment of inversion sets.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .cartan import AffineDiagram
from .roots import (
    Root,
    coroot_pair,
    is_negative,
    is_positive,
    reflect_simple,
    root_kind,
    simple_root,
    subsystem_closure,
)

Cols = tuple[Root, ...]


def _apply_cols(cols: Cols, a: Root) -> Root:
    n = len(a)
    out = [0] * n
    for j, c in enumerate(a):
        if c:
            col = cols[j]
            for t in range(n):
                out[t] += c * col[t]
    return tuple(out)


def _right_mult_simple(d: AffineDiagram, mat: Cols, inv: Cols, i: int) -> tuple[Cols, Cols]:
    """Matrices of w*s_i from those of w."""
    row = d.cartan[i]
    col_i = mat[i]
    new_mat = tuple(
        tuple(x - row[j] * y for x, y in zip(mat[j], col_i)) if j != i else tuple(-x for x in col_i)
        for j in range(len(mat))
    )
    new_inv = tuple(reflect_simple(d, c, i) for c in inv)
    return new_mat, new_inv


@lru_cache(maxsize=None)
def _coroot_row(d: AffineDiagram, beta: Root) -> tuple[int, ...]:
    """<alpha_j, beta^vee> for each node j."""
    return tuple(coroot_pair(d, beta, simple_root(d, j)) for j in d.nodes)


def _left_mult_reflection(
    d: AffineDiagram, beta: Root, mat: Cols, inv: Cols
) -> tuple[Cols, Cols]:
    """Matrices of s_beta*w from those of w, for a real root beta."""
    row = _coroot_row(d, beta)
    new_mat = []
    for col in mat:
        c = sum(r * x for r, x in zip(row, col))
        if c:
            new_mat.append(tuple(x - c * y for x, y in zip(col, beta)))
        else:
            new_mat.append(col)
    inv_beta = _apply_cols(inv, beta)
    new_inv = []
    for j in range(len(inv)):
        c = row[j]
        if c:
            new_inv.append(tuple(x - c * y for x, y in zip(inv[j], inv_beta)))
        else:
            new_inv.append(inv[j])
    return tuple(new_mat), tuple(new_inv)


class WeylElement:
    """Group element with cached matrices, a reduced word, and inversions."""

    __slots__ = ("d", "word", "mat", "inv", "inversions", "_hash")

    def __init__(
        self,
        d: AffineDiagram,
        word: tuple[int, ...],
        mat: Cols,
        inv: Cols,
        inversions: frozenset[Root],
    ):
        self.d = d
        self.word = word
        self.mat = mat
        self.inv = inv
        self.inversions = inversions
        self._hash = hash(mat)

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def apply(self, a: Root) -> Root:
        return _apply_cols(self.mat, a)

    def apply_inverse(self, a: Root) -> Root:
        return _apply_cols(self.inv, a)

    def extend(self, i: int) -> Optional["WeylElement"]:
        """w*s_i if that is longer (image of alpha_i positive), else None."""
        col = self.mat[i]
        if not is_positive(col):
            return None
        mat, inv = _right_mult_simple(self.d, self.mat, self.inv, i)
        return WeylElement(self.d, self.word + (i,), mat, inv, self.inversions | {col})

    def right_descents(self) -> tuple[int, ...]:
        return tuple(i for i in self.d.nodes if is_negative(self.mat[i]))

    def left_descents(self) -> tuple[int, ...]:
        return tuple(i for i in self.d.nodes if is_negative(self.inv[i]))

    def inverse(self) -> "WeylElement":
        return _from_mats(self.d, self.inv, self.mat)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        mat = tuple(self.apply(c) for c in other.mat)
        inv = tuple(other.apply_inverse(c) for c in self.inv)
        return _from_mats(self.d, mat, inv)

    def le(self, other: "WeylElement") -> bool:
        """Right weak order: every inversion of self is one of other."""
        return self.inversions <= other.inversions

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.mat == other.mat

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:  # pragma: no cover
        return f"<w {'.'.join(map(str, self.word)) or 'e'}>"


@lru_cache(maxsize=None)
def _identity_cols(label_size: tuple[str, int]) -> Cols:
    n = label_size[1]
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def identity(d: AffineDiagram) -> WeylElement:
    cols = _identity_cols((d.label, d.size))
    return WeylElement(d, (), cols, cols, frozenset())


def _canonical_word(d: AffineDiagram, inv: Cols) -> tuple[int, ...]:
    """Reduced word by repeatedly stripping the smallest left descent."""
    inv_cols = list(inv)
    word = []
    for _ in range(100_000):
        i = next((i for i in d.nodes if is_negative(inv_cols[i])), None)
        if i is None:
            return tuple(word)
        word.append(i)
        row = d.cartan[i]
        base = inv_cols[i]
        inv_cols = [
            tuple(x - row[j] * y for x, y in zip(inv_cols[j], base)) if j != i
            else tuple(-x for x in base)
            for j in range(len(inv_cols))
        ]
    raise RuntimeError("word extraction did not terminate")


def _from_mats(d: AffineDiagram, mat: Cols, inv: Cols) -> WeylElement:
    """Element with given matrices; word and inversions are recomputed."""
    word = _canonical_word(d, inv)
    w = identity(d)
    for i in word:
        nxt = w.extend(i)
        assert nxt is not None, "canonical word was not reduced"
        w = nxt
    assert w.mat == mat, "matrix does not define a group element"
    return w


def from_word(d: AffineDiagram, word: Iterable[int]) -> WeylElement:
    """Product of simple reflections; the word need not be reduced."""
    mat = _identity_cols((d.label, d.size))
    inv = mat
    for i in word:
        mat, inv = _right_mult_simple(d, mat, inv, i)
    return _from_mats(d, mat, inv)


def from_reflection(d: AffineDiagram, beta: Root) -> WeylElement:
    """The reflection in a real root beta."""
    if root_kind(d, beta) != "real":
        raise ValueError(f"{beta} is not a real root")
    e = identity(d)
    mat, inv = _left_mult_reflection(d, beta, e.mat, e.inv)
    return _from_mats(d, mat, inv)


def longest_element(d: AffineDiagram, nodes: Iterable[int]) -> WeylElement:
    """Longest element of the finite parabolic on the given nodes."""
    s = sorted(set(nodes))
    cap = len(subsystem_closure(d, s)) if s else 0
    w = identity(d)
    for _ in range(cap):
        i = next((i for i in s if is_positive(w.mat[i])), None)
        if i is None:
            return w
        w = w.extend(i)
    assert all(is_negative(w.mat[i]) for i in s)
    return w


def minimal_coset_rep(
    d: AffineDiagram, g: WeylElement, subgroup_roots: Sequence[Root]
) -> WeylElement:
    """Minimal element of W'g, W' the reflection subgroup on the given simples.

    Valid whenever subgroup_roots is a canonical simple system (pairwise
    non-positive inner products); repeatedly strips reflections s_beta with
    g^{-1}(beta) < 0, which always shortens g.
    """
    mat, inv = _normalize_mats(d, g.mat, g.inv, subgroup_roots)
    if mat == g.mat:
        return g
    return _from_mats(d, mat, inv)


def _normalize_mats(
    d: AffineDiagram, mat: Cols, inv: Cols, subgroup_roots: Sequence[Root]
) -> tuple[Cols, Cols]:
    changed = True
    while changed:
        changed = False
        for beta in subgroup_roots:
            if is_negative(_apply_cols(inv, beta)):
                mat, inv = _left_mult_reflection(d, beta, mat, inv)
                changed = True
    return mat, inv


def coset_poset(
    d: AffineDiagram, ambient_nodes: Iterable[int], subgroup_roots: Sequence[Root]
) -> list[WeylElement]:
    """Minimal coset representatives of W'\\W(ambient), in BFS order.

    W(ambient) is the standard parabolic on ambient_nodes; W' is the reflection
    subgroup with canonical simple system subgroup_roots (a subset of the
    positive roots on ambient_nodes).
    """
    ambient = sorted(set(ambient_nodes))
    start = identity(d)
    reps = [start]
    seen = {start.mat}
    queue = [start]
    while queue:
        nxt: list[WeylElement] = []
        for u in queue:
            for i in ambient:
                mat, inv = _right_mult_simple(d, u.mat, u.inv, i)
                mat, inv = _normalize_mats(d, mat, inv, subgroup_roots)
                if mat not in seen:
                    seen.add(mat)
                    v = _from_mats(d, mat, inv)
                    reps.append(v)
                    nxt.append(v)
        queue = nxt
    return reps


def minimal_mapper(
    d: AffineDiagram,
    nodes: Iterable[int],
    frm: Root,
    to: Root,
    cap: Optional[int] = None,
) -> Optional[WeylElement]:
    """Shortest element of the parabolic on `nodes` sending frm to to.

    BFS over the orbit: the orbit distance equals the minimal length.  Returns
    None if `to` is not reached (within `cap` reflection steps, if given).
    """
    s = sorted(set(nodes))
    if frm == to:
        return identity(d)
    parent: dict[Root, tuple[Root, int]] = {frm: (frm, -1)}
    frontier = [frm]
    depth = 0
    while frontier:
        depth += 1
        if cap is not None and depth > cap:
            return None
        if len(parent) > 500_000:
            raise RuntimeError("orbit search exploded; pass a cap")
        nxt: list[Root] = []
        for g in frontier:
            for i in s:
                h = reflect_simple(d, g, i)
                if h in parent:
                    continue
                parent[h] = (g, i)
                if h == to:
                    return _path_element(d, parent, to)
                nxt.append(h)
        frontier = nxt
    return None


def _path_element(
    d: AffineDiagram, parent: dict[Root, tuple[Root, int]], to: Root
) -> WeylElement:
    letters = []
    cur = to
    while True:
        prev, i = parent[cur]
        if i < 0:
            break
        letters.append(i)
        cur = prev
    # path frm -> to via s_{i_1},..,s_{i_k} gives w = s_{i_k}...s_{i_1},
    # and the BFS distance guarantees this word is reduced.
    w = identity(d)
    for i in letters:
        nxt = w.extend(i)
        assert nxt is not None, "orbit path word was not reduced"
        w = nxt
    return w


_EXCEPTIONAL_ORDERS = {"G2": 12, "F4": 1152, "E6": 51840, "E7": 2903040, "E8": 696729600}


def weyl_group_order(d: AffineDiagram, nodes: Iterable[int]) -> int:
    """Order of the finite parabolic on a proper subset of nodes."""
    from math import factorial

    from .cartan import classify_finite

    s = sorted(set(nodes))
    if not s:
        return 1
    total = 1
    for name in classify_finite(d, s).split(" x "):
        n = int(name[1:])
        if name[0] == "A":
            total *= factorial(n + 1)
        elif name[0] in "BC":
            total *= 2**n * factorial(n)
        elif name[0] == "D":
            total *= 2 ** (n - 1) * factorial(n)
        else:
            total *= _EXCEPTIONAL_ORDERS[name]
    return total


def is_biconvex(
    d: AffineDiagram,
    roots_in: Iterable[Root],
    candidates: Optional[Iterable[Root]] = None,
) -> bool:
    """Closed under root addition, and co-closed against decompositions.

    For the co-closure direction, `candidates` must contain every positive
    real root that can appear as a summand of an element of the set; it
    defaults to the set itself, which only checks internal decompositions.
    """
    family = list(roots_in)
    members = set(family)
    for i, a in enumerate(family):
        for b in family[i + 1 :]:
            total = tuple(x + y for x, y in zip(a, b))
            kind = root_kind(d, total)
            if kind == "imaginary":
                return False
            if kind == "real" and total not in members:
                return False
    pool = list(candidates) if candidates is not None else family
    for g in family:
        for a in pool:
            if a == g or a in members:
                continue
            b = tuple(x - y for x, y in zip(g, a))
            if not is_positive(b):
                continue
            if root_kind(d, b) != "real":
                continue
            if b not in members:
                return False
    return True


def length_ball(d: AffineDiagram, radius: int) -> list[WeylElement]:
    """Every group element of length at most `radius`, in BFS order."""
    start = identity(d)
    out = [start]
    seen = {start.mat}
    frontier = [start]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for i in d.nodes:
                grown = w.extend(i)
                if grown is not None and grown.mat not in seen:
                    seen.add(grown.mat)
                    nxt.append(grown)
        out.extend(nxt)
        frontier = nxt
    return out
