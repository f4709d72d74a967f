#!/usr/bin/env python3
"""Digraph class predicates and the generators behind the big scans.

Weakly quasi-transitive digraphs are exactly what you get by repeatedly
substituting transitive oriented graphs, semicomplete digraphs, and
symmetric digraphs into each other; generate_wqt samples that closure.
Locally semicomplete instances come from a round construction with a
repair pass.
"""

from dichordal import (
    build,
    classify,
    generate_locally_semicomplete,
    generate_wqt,
    is_locally_semicomplete,
    is_weakly_quasi_transitive,
    serialize,
    substitute,
)

zoo = {
    "path a->b->c": build(3, [(0, 1), (1, 2)]),
    "directed triangle": build(3, [(0, 1), (1, 2), (2, 0)]),
    "transitive triangle": build(3, [(0, 1), (1, 2), (0, 2)]),
    "complete symmetric K3": build(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]),
    "independent set": build(3, []),
    "blown-up triangle": substitute(
        build(3, [(0, 1), (1, 2), (2, 0)]),
        [build(2, []), build(1, []), build(1, [])],
    ),
}

flags = None
for name, d in zoo.items():
    report = classify(d)
    if flags is None:
        flags = list(report.flags)
        print(f"{'':24}" + "  ".join(f"{f[:12]:>12}" for f in flags))
    row = "  ".join(f"{str(report.flags[f]):>12}" for f in flags)
    print(f"{name:24}{row}")
print()

# The path fails weak quasi-transitivity at its middle vertex: a and c are
# asynchronous neighbours of b but not adjacent.
print("path witness:", classify(zoo["path a->b->c"]).witnesses["weakly_quasi_transitive"])
print()

# ----------------------------------------------------------------------------
# Generators.  Deterministic per seed; predicates hold by construction.

for seed in range(4):
    d = generate_wqt(seed, depth=2, width=3)
    assert is_weakly_quasi_transitive(d)
    print(f"generate_wqt(seed={seed}) -> n={d.n}, arcs={d.arc_count}")

print()
for seed in range(4):
    d = generate_locally_semicomplete(seed, 7)
    assert is_locally_semicomplete(d)
    print(f"generate_locally_semicomplete(seed={seed}, n=7) -> arcs={d.arc_count}")

print()
print("one deeper weakly quasi-transitive sample:")
print(serialize(generate_wqt(42, depth=3, width=3)))
