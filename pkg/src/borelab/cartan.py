"""Affine Cartan matrices of twist order 1 and 2, with their numerical data.

A diagram is identified by a label like ``"E8~1"`` or ``"D5~2"``: base letter,
base rank, ``~``, twist order.  Node numbering follows the usual affine tables
(node 0 is the added node on untwisted diagrams).  The Cartan matrix convention
is ``cartan[i][j] = <alpha_j, alpha_i^vee>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Matrix = tuple[tuple[int, ...], ...]

_LABEL_RE = re.compile(r"^([A-G])(\d+)~(\d)$")


@dataclass(frozen=True)
class AffineDiagram:
    """An affine generalized Cartan matrix together with derived integer data."""

    label: str
    cartan: Matrix
    twist: int
    marks: tuple[int, ...] = field(compare=False)
    comarks: tuple[int, ...] = field(compare=False)
    symmetrizer: tuple[Fraction, ...] = field(compare=False)

    @property
    def size(self) -> int:
        """Number of nodes (affine rank + 1)."""
        return len(self.cartan)

    @property
    def nodes(self) -> range:
        return range(len(self.cartan))

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i][j] != 0

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in self.nodes if self.adjacent(i, j))

    def norm(self, i: int) -> Fraction:
        """Squared length (alpha_i, alpha_i); long roots have norm 2."""
        return 2 * self.symmetrizer[i]

    def __repr__(self) -> str:  # pragma: no cover
        return f"AffineDiagram({self.label!r})"


def _kernel_vector(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Primitive positive integer kernel vector of a corank-1 square matrix."""
    n = len(matrix)
    rows = [[Fraction(x) for x in row] for row in matrix]
    # Gaussian elimination to row echelon form.
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pivots.append(c)
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == n:
            break
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise ValueError(f"matrix has corank {len(free)}, expected 1")
    f = free[0]
    sol = [Fraction(0)] * n
    sol[f] = Fraction(1)
    for row, c in zip(rows, pivots):
        sol[c] = -row[f]
    denom = 1
    for x in sol:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ints = [int(x * denom) for x in sol]
    g = 0
    for x in ints:
        g = _gcd(g, abs(x))
    ints = [x // g for x in ints]
    if any(x < 0 for x in ints):
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        raise ValueError("kernel vector is not strictly positive")
    return tuple(ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _symmetrizer(cartan: Matrix) -> tuple[Fraction, ...]:
    """d_i with d_i * A[i][j] = d_j * A[j][i], normalized so max(d_i) = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i != j and cartan[i][j] != 0:
                dj = d[i] * Fraction(cartan[i][j], cartan[j][i])
                if d[j] is None:
                    d[j] = dj
                    stack.append(j)
                elif d[j] != dj:
                    raise ValueError("Cartan matrix is not symmetrizable")
    if any(x is None for x in d):
        raise ValueError("diagram is not connected")
    top = max(d)  # type: ignore[type-var]
    return tuple(x / top for x in d)  # type: ignore[operator]


def _bonds_to_cartan(size: int, bonds: Iterable[tuple[int, int, int, int]]) -> Matrix:
    """Build the Cartan matrix from (i, j, A[i][j], A[j][i]) bond entries."""
    a = [[2 if i == j else 0 for j in range(size)] for i in range(size)]
    for i, j, aij, aji in bonds:
        a[i][j] = aij
        a[j][i] = aji
    return tuple(tuple(row) for row in a)


def _chain(lo: int, hi: int) -> list[tuple[int, int, int, int]]:
    """Single bonds lo-(lo+1)-...-hi."""
    return [(i, i + 1, -1, -1) for i in range(lo, hi)]


def _build(label: str, letter: str, rank: int, twist: int) -> AffineDiagram:
    bonds: list[tuple[int, int, int, int]]
    if twist == 1:
        if letter == "A" and rank == 1:
            size, bonds = 2, [(0, 1, -2, -2)]
        elif letter == "A":
            size = rank + 1
            bonds = _chain(0, rank) + [(rank, 0, -1, -1)]
        elif letter == "B" and rank == 2:
            # theta of B2 meets the short simple root, so node 0 hangs there.
            size, bonds = 3, [(0, 2, -1, -2), (1, 2, -1, -2)]
        elif letter == "B" and rank >= 3:
            size = rank + 1
            bonds = [(0, 2, -1, -1), (1, 2, -1, -1)] + _chain(2, rank - 1)
            bonds += [(rank - 1, rank, -1, -2)]
        elif letter == "C" and rank >= 2:
            size = rank + 1
            bonds = [(0, 1, -1, -2)] + _chain(1, rank - 1) + [(rank - 1, rank, -2, -1)]
        elif letter == "D" and rank >= 4:
            size = rank + 1
            bonds = [(0, 2, -1, -1), (1, 2, -1, -1)] + _chain(2, rank - 2)
            bonds += [(rank - 2, rank - 1, -1, -1), (rank - 2, rank, -1, -1)]
        elif letter == "E" and rank == 6:
            size, bonds = 7, _chain(1, 5) + [(3, 6, -1, -1), (6, 0, -1, -1)]
        elif letter == "E" and rank == 7:
            size, bonds = 8, _chain(0, 6) + [(3, 7, -1, -1)]
        elif letter == "E" and rank == 8:
            size, bonds = 9, _chain(0, 7) + [(5, 8, -1, -1)]
        elif letter == "F" and rank == 4:
            size, bonds = 5, _chain(0, 2) + [(2, 3, -1, -2), (3, 4, -1, -1)]
        elif letter == "G" and rank == 2:
            size, bonds = 3, [(0, 1, -1, -1), (1, 2, -1, -3)]
        else:
            raise ValueError(f"unsupported untwisted diagram {label!r}")
    elif twist == 2:
        if letter == "A" and rank == 2:
            size, bonds = 2, [(0, 1, -4, -1)]
        elif letter == "A" and rank >= 4 and rank % 2 == 0:
            m = rank // 2
            size = m + 1
            bonds = [(0, 1, -2, -1)] + _chain(1, m - 1) + [(m - 1, m, -2, -1)]
        elif letter == "A" and rank >= 5 and rank % 2 == 1:
            m = (rank + 1) // 2
            size = m + 1
            bonds = [(0, 2, -1, -1), (1, 2, -1, -1)] + _chain(2, m - 1)
            bonds += [(m - 1, m, -2, -1)]
        elif letter == "A" and rank == 3:
            raise ValueError("A3~2 is listed as D3~2; use that label")
        elif letter == "D" and rank >= 3:
            size = rank
            bonds = [(0, 1, -2, -1)] + _chain(1, rank - 2)
            bonds += [(rank - 2, rank - 1, -1, -2)]
        elif letter == "E" and rank == 6:
            size, bonds = 5, _chain(0, 2) + [(2, 3, -2, -1), (3, 4, -1, -1)]
        else:
            raise ValueError(f"unsupported twisted diagram {label!r}")
    else:
        raise ValueError(
            f"{label!r}: twist order {twist} not supported; the grading involution"
            " has order at most 2"
        )
    cartan = _bonds_to_cartan(size, bonds)
    marks = _kernel_vector(cartan)
    comarks = _kernel_vector([list(col) for col in zip(*cartan)])
    return AffineDiagram(
        label=label,
        cartan=cartan,
        twist=twist,
        marks=marks,
        comarks=comarks,
        symmetrizer=_symmetrizer(cartan),
    )


@lru_cache(maxsize=None)
def load_diagram(label: str) -> AffineDiagram:
    """Load an affine diagram by label, e.g. "B3~1", "A4~2", "E6~2"."""
    m = _LABEL_RE.match(label)
    if not m:
        raise ValueError(f"bad diagram label {label!r}; expected e.g. 'D5~2'")
    letter, rank, twist = m.group(1), int(m.group(2)), int(m.group(3))
    return _build(label, letter, rank, twist)


def dual_coxeter_number(d: AffineDiagram) -> int:
    """Sum of comarks: the dual Coxeter number attached to the affine diagram."""
    return sum(d.comarks)


def finite_dual_coxeter(d: AffineDiagram, nodes: Iterable[int]) -> int:
    """Dual Coxeter number of the finite subsystem on a connected node subset.

    Computed as 1 + coroot height of the highest root: if theta = sum c_i a_i,
    its coroot expands with coefficients c_i * d_i / d_theta.
    """
    from . import roots  # deferred: roots depends on this module

    s = tuple(sorted(set(nodes)))
    if not s:
        raise ValueError("empty node set")
    if len(components(d, s)) != 1:
        raise ValueError(f"node set {s} is not connected")
    theta = roots.highest_root(d, s)
    d_theta = roots.norm_sq(d, theta) / 2
    total = Fraction(0)
    for i in s:
        total += theta[i] * d.symmetrizer[i] / d_theta
    if total.denominator != 1:
        raise ValueError("coroot height is not integral")
    return int(total) + 1


def components(d: AffineDiagram, nodes: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Connected components of the induced subdiagram, ordered by least node."""
    remaining = set(nodes)
    out = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        stack = [seed]
        while stack:
            i = stack.pop()
            for j in d.neighbors(i):
                if j in remaining and j not in comp:
                    comp.add(j)
                    stack.append(j)
        remaining -= comp
        out.append(tuple(sorted(comp)))
    return tuple(out)


def diagram_automorphisms(d: AffineDiagram) -> tuple[tuple[int, ...], ...]:
    """All node permutations pi with A[pi(i)][pi(j)] = A[i][j], as tuples."""
    n = d.size
    # Candidate images must share the local numeric signature.
    def signature(i: int) -> tuple:
        row = tuple(sorted((d.cartan[i][j], d.cartan[j][i]) for j in d.neighbors(i)))
        return (d.marks[i], d.comarks[i], row)

    sigs = [signature(i) for i in range(n)]
    result: list[tuple[int, ...]] = []
    perm: list[int] = [-1] * n

    def place(i: int, used: set[int]) -> None:
        if i == n:
            result.append(tuple(perm))
            return
        for img in range(n):
            if img in used or sigs[img] != sigs[i]:
                continue
            ok = all(
                d.cartan[img][perm[j]] == d.cartan[i][j]
                and d.cartan[perm[j]][img] == d.cartan[j][i]
                for j in range(i)
            )
            if ok:
                perm[i] = img
                used.add(img)
                place(i + 1, used)
                used.remove(img)
        perm[i] = -1

    place(0, set())
    return tuple(sorted(result))


def classify_finite(d: AffineDiagram, nodes: Iterable[int]) -> str:
    """Cartan type of the finite subsystem on `nodes`, e.g. "A2 x B3".

    Components are labeled in order of least node.  An empty set is "trivial".
    """
    comps = components(d, tuple(nodes))
    if not comps:
        return "trivial"
    return " x ".join(_classify_component(d, c) for c in comps)


def _classify_component(d: AffineDiagram, comp: tuple[int, ...]) -> str:
    n = len(comp)
    if n == 1:
        return "A1"
    mult = {}
    for a in comp:
        for b in comp:
            if a < b and d.adjacent(a, b):
                mult[(a, b)] = d.cartan[a][b] * d.cartan[b][a]
    if any(m == 3 for m in mult.values()):
        return "G2"
    norms = {i: d.symmetrizer[i] for i in comp}
    top = max(norms.values())
    shorts = sum(1 for v in norms.values() if v < top)
    if any(m == 2 for m in mult.values()):
        if n == 2:
            return "B2"
        if n == 4 and shorts == 2:
            return "F4"
        if shorts == 1:
            return f"B{n}"
        if shorts == n - 1:
            return f"C{n}"
        raise ValueError(f"unrecognized multiply-laced component {comp}")
    degrees = {i: sum(1 for j in comp if d.adjacent(i, j)) for i in comp}
    branch = [i for i, deg in degrees.items() if deg == 3]
    if not branch:
        return f"A{n}"
    if len(branch) != 1:
        raise ValueError(f"unrecognized branched component {comp}")
    b = branch[0]
    arms = []
    for j in d.neighbors(b):
        if j not in comp:
            continue
        length, prev, cur = 1, b, j
        while True:
            nxt = [x for x in d.neighbors(cur) if x in comp and x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    if arms == [1, 2, 2]:
        return "E6"
    if arms == [1, 2, 3]:
        return "E7"
    if arms == [1, 2, 4]:
        return "E8"
    raise ValueError(f"unrecognized branched component {comp}")
