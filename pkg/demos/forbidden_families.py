#!/usr/bin/env python3
"""The forbidden induced subdigraphs, expanded and detected.

Four small obstructions (fig1a..fig1d) plus the lollipop family: a
directed path of non-symmetric arcs fed by one digon pair and feeding
another.  Every concrete member is rejected by the recognizer, and the
detectors find them wherever they hide as induced subdigraphs.
"""

from dichordal import (
    Variant,
    build,
    expand_template,
    fig1_templates,
    find_any_fig1,
    find_induced,
    find_lollipop,
    find_nonsym_induced_dicycle,
    is_chordal,
    is_di_simplicial,
    is_locally_semicomplete,
    lollipop_template,
    substitute,
    theorem4_rhs,
    theorem5_rhs,
)

# ----------------------------------------------------------------------------
# Expansion: each template fixes digons and directed arcs, but leaves
# "either direction" and "any adjacency" pairs free.

for t in fig1_templates():
    hosts = expand_template(t)
    print(f"{t.name}: {t.k} vertices, {len(hosts)} concretizations")
print()

# Every concretization fails semi-strict chordality in the strongest way:
# not a single vertex is semi-strict di-simplicial.
for t in fig1_templates():
    for host in expand_template(t):
        assert not is_chordal(host, Variant.SEMI_STRICT)
        assert not any(
            is_di_simplicial(host, v, Variant.SEMI_STRICT) for v in range(host.n)
        )
print("all fig1 concretizations rejected, none has a di-simplicial vertex")

for k in range(1, 5):
    (host,) = expand_template(lollipop_template(k))
    assert not is_chordal(host, Variant.SEMI_STRICT)
    assert is_locally_semicomplete(host)
print("lollipops k=1..4 rejected; each one is locally semicomplete\n")

# ----------------------------------------------------------------------------
# Detection.  The directed triangle is its own witness:

triangle = build(3, [(0, 1), (1, 2), (2, 0)])
print("triangle:", find_any_fig1(triangle))
print("triangle dicycle:", find_nonsym_induced_dicycle(triangle))

# Planting a lollipop inside a larger digraph: substitute it into one end
# of an arc, padding with extra structure around it.

(lolly,) = expand_template(lollipop_template(2))
padded = substitute(build(2, [(0, 1)]), [lolly, build(2, [(0, 1), (1, 0)])])
print("padded host on", padded.n, "vertices:", find_lollipop(padded))

# A directed 4-cycle with a chord: the 4-cycle itself is not induced, but
# the chord closes an induced non-symmetric triangle.
chord = build(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
print("chorded 4-cycle induced dicycle:", find_nonsym_induced_dicycle(chord))
print()

# ----------------------------------------------------------------------------
# The combined right-hand sides used by the characterization checks:

ex2 = build(
    5,
    [(0, 1), (4, 0), (2, 1), (1, 4), (4, 1), (3, 2), (2, 3), (4, 2), (2, 4), (4, 3)],
)
print("example2: rhs(wqt) =", theorem4_rhs(ex2), " rhs(lsc) =", theorem5_rhs(ex2))
print("triangle: rhs(wqt) =", theorem4_rhs(triangle), " rhs(lsc) =", theorem5_rhs(triangle))
