"""Di-simplicial vertex tests and elimination-ordering recognizers.

A vertex v is di-simplicial when every in-neighbour u and out-neighbour w
(u != w) are joined the right way; the three variants differ in what "the
right way" means:

  CHORDAL      an arc u->w suffices
  SEMI_STRICT  u and w must be joined by a digon
  STRICT       digons are required between *all* pairs of neighbours of v,
               in-neighbours and out-neighbours alike

A digraph is (variant-)chordal when every induced subdigraph contains such
a vertex, equivalently when greedily deleting di-simplicial vertices
empties it.  Greedy choice does not matter because chordality is
hereditary; we always delete the lowest-indexed eligible vertex so runs
are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Sequence

from .digraph import Digraph, bits, induced, induced_mask, symmetric_subdigraph


class Variant(str, Enum):
    CHORDAL = "chordal"
    STRICT = "strict"
    SEMI_STRICT = "semi-strict"


class Witness(NamedTuple):
    """A triple certifying that v is not di-simplicial: the required
    adjacency between u and w is missing."""

    u: int
    v: int
    w: int


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]
    variant: Variant


def _di_simplicial_in(d: Digraph, v: int, variant: Variant, alive: int) -> bool:
    """Di-simplicial test for v inside the subdigraph induced by `alive`."""
    if variant is Variant.STRICT:
        nb = (d.in_masks[v] | d.out_masks[v]) & alive
        for u in bits(nb):
            if (nb & ~(1 << u)) & ~d.digon_masks[u]:
                return False
        return True
    outv = d.out_masks[v] & alive
    if not outv:
        return True
    required = d.digon_masks if variant is Variant.SEMI_STRICT else d.out_masks
    for u in bits(d.in_masks[v] & alive):
        if (outv & ~(1 << u)) & ~required[u]:
            return False
    return True


def is_di_simplicial(d: Digraph, v: int, variant: Variant) -> bool:
    d._check_vertex(v)
    return _di_simplicial_in(d, v, variant, (1 << d.n) - 1)


def witness(d: Digraph, v: int, variant: Variant) -> Optional[Witness]:
    """Lexicographically smallest failing (u, w), or None if v is di-simplicial.

    For STRICT the pair ranges over all neighbours of v and is reported
    with u < w; otherwise u is an in-neighbour and w an out-neighbour.
    """
    d._check_vertex(v)
    if variant is Variant.STRICT:
        nb = sorted(bits(d.in_masks[v] | d.out_masks[v]))
        for a in range(len(nb)):
            for b in range(a + 1, len(nb)):
                u, w = nb[a], nb[b]
                if not d.digon_masks[u] >> w & 1:
                    return Witness(u, v, w)
        return None
    for u in bits(d.in_masks[v]):
        for w in bits(d.out_masks[v]):
            if u == w:
                continue
            if variant is Variant.SEMI_STRICT:
                ok = bool(d.digon_masks[u] >> w & 1)
            else:
                ok = d.has_arc(u, w)
            if not ok:
                return Witness(u, v, w)
    return None


def elimination_ordering(d: Digraph, variant: Variant) -> Optional[EliminationOrdering]:
    """Greedy perfect elimination ordering, or None when the digraph has none.

    Repeatedly removes the lowest-indexed vertex that is di-simplicial in
    the remaining induced subdigraph.
    """
    alive = (1 << d.n) - 1
    order = []
    for _ in range(d.n):
        for v in bits(alive):
            if _di_simplicial_in(d, v, variant, alive):
                order.append(v)
                alive &= ~(1 << v)
                break
        else:
            return None
    return EliminationOrdering(tuple(order), variant)


def is_chordal(d: Digraph, variant: Variant) -> bool:
    return elimination_ordering(d, variant) is not None


def stalled_subdigraph(d: Digraph, variant: Variant) -> Optional[tuple[int, ...]]:
    """Vertices left when the greedy elimination gets stuck (None if it never does)."""
    alive = (1 << d.n) - 1
    while alive:
        for v in bits(alive):
            if _di_simplicial_in(d, v, variant, alive):
                alive &= ~(1 << v)
                break
        else:
            return tuple(bits(alive))
    return None


def verify_ordering(d: Digraph, ordering: EliminationOrdering) -> bool:
    """Certificate check: each vertex must be di-simplicial among its suffix.

    Deliberately recomputes true suffix-induced subdigraphs instead of
    reusing the recognizer's incremental state.
    """
    if sorted(ordering.order) != list(range(d.n)):
        raise ValueError("ordering is not a permutation of the vertex set")
    for i, v in enumerate(ordering.order):
        suffix = sorted(ordering.order[i:])
        sub = induced(d, suffix)
        if not is_di_simplicial(sub, suffix.index(v), ordering.variant):
            return False
    return True


# -- brute-force oracle --------------------------------------------------------


def _plain_di_simplicial(d: Digraph, v: int, variant: Variant) -> bool:
    # definition spelled out over neighbour sets, no bitmask shortcuts
    if variant is Variant.STRICT:
        nb = d.in_neighbors(v) | d.out_neighbors(v)
        return all(
            d.has_arc(u, w) and d.has_arc(w, u)
            for u in nb
            for w in nb
            if u != w
        )
    for u in d.in_neighbors(v):
        for w in d.out_neighbors(v):
            if u == w:
                continue
            if not d.has_arc(u, w):
                return False
            if variant is Variant.SEMI_STRICT and not d.has_arc(w, u):
                return False
    return True


def oracle_is_chordal(d: Digraph, variant: Variant, cap: int = 12) -> bool:
    """Literal definition: every nonempty induced subdigraph has a
    di-simplicial vertex.  Exponential; capped at `cap` vertices."""
    if d.n > cap:
        raise ValueError(f"subset enumeration cap exceeded: n={d.n} > {cap}")
    for mask in range(1, 1 << d.n):
        sub = induced_mask(d, mask)
        if not any(_plain_di_simplicial(sub, v, variant) for v in range(sub.n)):
            return False
    return True


# -- undirected chordality of the symmetric part --------------------------------


def underlying_SD_is_chordal(d: Digraph) -> bool:
    """Is the underlying undirected graph of the symmetric subdigraph chordal?

    Repeated simplicial-vertex deletion; quadratic-ish but instances are tiny.
    """
    adj = list(symmetric_subdigraph(d).digon_masks)
    alive = (1 << d.n) - 1
    while alive:
        for v in bits(alive):
            nb = adj[v] & alive
            if all((nb & ~(1 << u)) & ~adj[u] == 0 for u in bits(nb)):
                alive &= ~(1 << v)
                break
        else:
            return False
    return True
