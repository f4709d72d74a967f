#!/usr/bin/env python3
"""Tour of the two small digraphs that motivate everything here.

Both live on a handful of vertices.  The first looks harmless (a 4-cycle
with one digon and a chord) yet has no semi-strict di-simplicial vertex at
all; the second carries three digons arranged so that the greedy
elimination peels it apart.  Along the way we print their knotting graphs,
whose splitting-class degrees tell the same story.
"""

from dichordal import (
    Variant,
    build,
    elimination_ordering,
    group_max_degree,
    is_chordal,
    is_di_simplicial,
    knotting_graph,
    serialize,
    verify_ordering,
    witness,
)

NAMES1 = {0: "a", 1: "b", 2: "c", 3: "d"}
NAMES2 = {0: "a", 1: "b", 2: "c", 3: "d", 4: "e"}


def show_knotting(d, names):
    k = knotting_graph(d)
    print(f"  {len(k.classes)} splitting classes, {len(k.edges)} edges")
    for c in k.classes:
        members = ", ".join(f"{names[u]}{names[v]}" for u, v in sorted(c.members))
        print(f"    {names[c.owner]}^{c.index} = {{{members}}}")
    for e in k.edges:
        print(
            f"    {names[e.a[0]]}^{e.a[1]} -- {names[e.b[0]]}^{e.b[1]}"
            f"   (arc {names[e.arc[0]]}{names[e.arc[1]]})"
        )
    for v in range(d.n):
        print(f"    max degree in {names[v]}'s group: {group_max_degree(k, v)}")


# ----------------------------------------------------------------------------
# Example 1: not semi-strict chordal.
# a -> b -> c <-> d -> a, plus d -> b.

ex1 = build(4, [(0, 1), (1, 2), (3, 0), (3, 1), (3, 2), (2, 3)])
print("example 1:")
print(serialize(ex1, NAMES1))

print("semi-strict chordal?", is_chordal(ex1, Variant.SEMI_STRICT))
for v in range(4):
    w = witness(ex1, v, Variant.SEMI_STRICT)
    print(f"  vertex {NAMES1[v]}: di-simplicial={w is None}", end="")
    if w:
        print(f"  violating triple ({NAMES1[w.u]}, {NAMES1[w.v]}, {NAMES1[w.w]})")
    else:
        print()

# Every vertex fails, so no elimination ordering can even start.  The
# knotting graph shows it: every splitting group owns a class of degree 2+.
show_knotting(ex1, NAMES1)

# Interestingly the *plain* chordal variant is satisfied: arcs (not digons)
# between in/out neighbour pairs are enough there.
print("plain chordal?", is_chordal(ex1, Variant.CHORDAL))
print()

# ----------------------------------------------------------------------------
# Example 2: semi-strict chordal.
# digons b<->e, c<->d, c<->e; arcs a->b, e->a, c->b, e->d.

ex2 = build(
    5,
    [(0, 1), (4, 0), (2, 1), (1, 4), (4, 1), (3, 2), (2, 3), (4, 2), (2, 4), (4, 3)],
)
print("example 2:")
print(serialize(ex2, NAMES2))

ordering = elimination_ordering(ex2, Variant.SEMI_STRICT)
print("semi-strict chordal?", ordering is not None)
print("greedy ordering:", " ".join(NAMES2[v] for v in ordering.order))
print("certificate verifies?", verify_ordering(ex2, ordering))

# vertex a is the entry point: its in-neighbour e and out-neighbour b are
# joined by a digon
print("a is semi-strict di-simplicial?", is_di_simplicial(ex2, 0, Variant.SEMI_STRICT))

show_knotting(ex2, NAMES2)
print("a's splitting classes all have degree <= 1, matching the recognizer.")
