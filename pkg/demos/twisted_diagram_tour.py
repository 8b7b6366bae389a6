"""Tour of a twisted case: the order-2 folding of D5 with node 1 odd.

Twisted diagrams have k = 2, so the bounding level doubles and some wall
candidates drop out.  The poset here is small enough to print in full,
level by level.
"""

from collections import defaultdict

from borelab import context_for, enumerate_poset, verify_all
from borelab.minuscule import family_minimum, special_involution
from borelab.roots import norm_sq

ctx = context_for("D5~2", [1])
print(ctx.spec.describe(), f"(k = {ctx.k})")
print()

print("odd-height-1 roots by squared length and complexity:")
groups = defaultdict(int)
for g in sorted(ctx.odd_height_one_roots):
    groups[(norm_sq(ctx.d, g), ctx.is_complex(g))] += 1
for (nrm, cx), count in sorted(groups.items()):
    tag = "complex" if cx else "noncomplex"
    print(f"  norm^2 {nrm}: {count} {tag}")
print()

for wall in ctx.walls:
    fam = ctx.family_indices(wall)
    print(f"wall {wall.index} ({wall.kind}, type {wall.wall_type}): root {wall.root}, "
          f"family heads {fam}, blocked {ctx.blocked_nodes(wall)}")
print()

poset = enumerate_poset(ctx)
levels = defaultdict(list)
for w in poset.elements:
    levels[w.length].append(w)
print(f"all {len(poset)} elements by length:")
for ln in sorted(levels):
    words = [".".join(map(str, w.word)) or "e" for w in levels[ln]]
    print(f"  {ln}: {'  '.join(words)}")
print()

print("family minima (words as spelled in the level listing above):")
for wall in ctx.walls:
    for a in ctx.family_indices(wall):
        m = poset.elements[poset.position(family_minimum(ctx, a, wall))]
        size = len(poset.family(a, wall))
        print(f"  (alpha{a}, wall {wall.index}): size {size}, "
              f"minimum {'.'.join(map(str, m.word))}")
print()

comp = ctx.components[0]
s = special_involution(ctx, comp)
print(f"special involution for component {comp.nodes}: "
      f"word {'.'.join(map(str, s.word))}, length {s.length}, "
      f"squares to identity: {(s * s).length == 0}")
print()

bad = [r for r in verify_all(poset) if not r.passed]
print("verification:", "all checks pass" if not bad else bad[0].line())
