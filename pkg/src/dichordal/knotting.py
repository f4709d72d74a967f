"""Knotting graphs of digraphs.

The arcs incident with a vertex v are partitioned into splitting classes:
two arcs are directly compatible when their far endpoints differ, one arc
enters v while the other leaves it, and the far endpoints are not joined
by a digon; classes are the connected components of that relation.  The
knotting graph has one node per splitting class and one edge per arc of
the digraph, joining the two classes that contain the arc.

Edges are keyed by their arc.  Two arcs of a digon can land in the same
pair of classes, which makes the knotting graph a multigraph; keeping the
arc on the edge preserves the one-to-one arc/edge correspondence.

A vertex is semi-strict di-simplicial exactly when all of its splitting
classes have degree at most one, which yields a second recognition route
for semi-strict chordality alongside the elimination-ordering one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .digraph import Digraph, PairKind, bits, induced

Arc = tuple[int, int]
ClassId = tuple[int, int]  # (owner vertex, 1-based index within the owner's group)


@dataclass(frozen=True)
class SplittingClass:
    owner: int
    index: int
    members: frozenset[Arc]

    @property
    def id(self) -> ClassId:
        return (self.owner, self.index)


@dataclass(frozen=True)
class KnottingEdge:
    arc: Arc
    a: ClassId  # class at the tail vertex
    b: ClassId  # class at the head vertex


@dataclass(frozen=True)
class KnottingGraph:
    n: int
    classes: tuple[SplittingClass, ...]
    edges: tuple[KnottingEdge, ...]
    arc_to_edge: Mapping[Arc, KnottingEdge] = field(compare=False)

    def group(self, v: int) -> tuple[SplittingClass, ...]:
        if not 0 <= v < self.n:
            raise ValueError(f"unknown vertex {v}")
        return tuple(c for c in self.classes if c.owner == v)

    def degree(self, class_id: ClassId) -> int:
        return sum(1 for e in self.edges if class_id in (e.a, e.b))

    def degrees(self) -> dict[ClassId, int]:
        out = {c.id: 0 for c in self.classes}
        for e in self.edges:
            out[e.a] += 1
            out[e.b] += 1
        return out


def _incident_arcs(d: Digraph, v: int) -> list[Arc]:
    arcs = [(u, v) for u in bits(d.in_masks[v])]
    arcs += [(v, w) for w in bits(d.out_masks[v])]
    return sorted(arcs)


def _compatible(d: Digraph, v: int, e: Arc, f: Arc) -> bool:
    e_out = e[0] == v
    f_out = f[0] == v
    if e_out == f_out:
        return False
    fe = e[1] if e_out else e[0]
    ff = f[1] if f_out else f[0]
    if fe == ff:
        return False
    return d.pair_kind(fe, ff) is not PairKind.DIGON


def knot_classes(d: Digraph, v: int) -> list[SplittingClass]:
    """Splitting classes of v, indexed by their smallest member arc.

    An isolated vertex owns a single empty class.
    """
    d._check_vertex(v)
    arcs = _incident_arcs(d, v)
    if not arcs:
        return [SplittingClass(v, 1, frozenset())]
    # union-find over the direct compatibility relation
    parent = list(range(len(arcs)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            if _compatible(d, v, arcs[i], arcs[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
    groups: dict[int, list[Arc]] = {}
    for i, arc in enumerate(arcs):
        groups.setdefault(find(i), []).append(arc)
    members = sorted(groups.values(), key=min)
    return [
        SplittingClass(v, idx, frozenset(g)) for idx, g in enumerate(members, start=1)
    ]


def knotting_graph(d: Digraph) -> KnottingGraph:
    classes: list[SplittingClass] = []
    arc_class: dict[tuple[int, Arc], ClassId] = {}
    for v in range(d.n):
        for cls in knot_classes(d, v):
            classes.append(cls)
            for arc in cls.members:
                arc_class[(v, arc)] = cls.id
    edges = []
    for arc in sorted(d.arcs()):
        u, w = arc
        edges.append(KnottingEdge(arc, arc_class[(u, arc)], arc_class[(w, arc)]))
    return KnottingGraph(
        n=d.n,
        classes=tuple(classes),
        edges=tuple(edges),
        arc_to_edge={e.arc: e for e in edges},
    )


def group_max_degree(k: KnottingGraph, v: int) -> int:
    """Largest degree among v's splitting classes (0 for an isolated vertex)."""
    degrees = k.degrees()
    return max(degrees[c.id] for c in k.group(v))


def lemma1_check(d: Digraph, v: int) -> bool:
    """Knotting-side di-simpliciality test: all of v's classes have degree <= 1.

    Agrees with the semi-strict di-simplicial test pointwise.
    """
    return group_max_degree(knotting_graph(d), v) <= 1


def ss_chordal_via_knotting(d: Digraph) -> bool:
    """Iteratively delete vertices whose splitting group has max degree <= 1.

    The splitting group is recomputed from the surviving induced subdigraph
    at every step (deleting splitting vertices from the old graph can refine
    classes at the survivors, so recomputation is the safe semantics).
    """
    current = d
    while current.n:
        k = knotting_graph(current)
        degrees = k.degrees()
        for v in range(current.n):
            if all(degrees[c.id] <= 1 for c in k.group(v)):
                current = induced(current, set(range(current.n)) - {v})
                break
        else:
            return False
    return True


def theorem2_oracle(d: Digraph, cap: int = 12) -> bool:
    """Subset-quantified knotting criterion for semi-strict chordality.

    True iff for every nonempty vertex subset, the induced subdigraph's
    knotting graph has some splitting group with all degrees <= 1.
    """
    if d.n > cap:
        raise ValueError(f"subset enumeration cap exceeded: n={d.n} > {cap}")
    for mask in range(1, 1 << d.n):
        sub = induced(d, bits(mask))
        k = knotting_graph(sub)
        degrees = k.degrees()
        if not any(
            all(degrees[c.id] <= 1 for c in k.group(v)) for v in range(sub.n)
        ):
            return False
    return True


def to_dot(
    k: KnottingGraph, names: Mapping[int, str] | None = None
) -> str:
    """DOT export: one node per splitting class, groups clustered, edges undirected."""

    def vname(v: int) -> str:
        return names[v] if names and v in names else str(v)

    def node(cid: ClassId) -> str:
        return f"c{cid[0]}_{cid[1]}"

    lines = ["graph K {"]
    for v in range(k.n):
        lines.append(f"  subgraph cluster_{v} {{")
        lines.append(f'    label="{vname(v)}";')
        for cls in k.group(v):
            lines.append(f'    {node(cls.id)} [label="{vname(v)}^{cls.index}"];')
        lines.append("  }")
    for e in k.edges:
        lines.append(f"  {node(e.a)} -- {node(e.b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
