"""Forbidden induced-subdigraph families and their detectors.

Patterns are constraint-labelled templates: every unordered pair of
template vertices carries one of six constraints (non-adjacent, a
non-symmetric arc in a fixed direction, a non-symmetric arc in either
direction, a digon, or any adjacency).  Unlisted pairs default to
non-adjacent, so matches are always induced.

Two families matter for semi-strict chordality:

* four small obstructions on 3-4 vertices ("fig1a".."fig1d", where fig1d
  is the directed triangle of non-symmetric arcs), and
* the lollipop family: a non-symmetric directed path whose two ends
  attach to digon pairs, one feeding the path and one fed by it.

Combined with chordality of the symmetric part these characterize
semi-strict chordality inside the weakly quasi-transitive and locally
semicomplete classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .chordality import Variant, is_chordal
from .digraph import Digraph, PairKind, pair_slots, symmetric_subdigraph


class EdgeConstraint(Enum):
    NON_ADJACENT = "non-adjacent"
    ARC_FORWARD = "arc-forward"        # non-symmetric arc i->j for pair (i, j)
    ARC_BACKWARD = "arc-backward"      # non-symmetric arc j->i
    NONSYM_EITHER = "nonsym-either"    # non-symmetric arc, direction free
    DIGON = "digon"
    ANY_ADJACENT = "any-adjacent"


_ALLOWED_KINDS = {
    EdgeConstraint.NON_ADJACENT: (PairKind.NONE,),
    EdgeConstraint.ARC_FORWARD: (PairKind.FORWARD,),
    EdgeConstraint.ARC_BACKWARD: (PairKind.BACKWARD,),
    EdgeConstraint.NONSYM_EITHER: (PairKind.FORWARD, PairKind.BACKWARD),
    EdgeConstraint.DIGON: (PairKind.DIGON,),
    EdgeConstraint.ANY_ADJACENT: (PairKind.FORWARD, PairKind.BACKWARD, PairKind.DIGON),
}


@dataclass(frozen=True)
class PatternTemplate:
    name: str
    k: int
    constraints: dict[tuple[int, int], EdgeConstraint]

    def constraint(self, i: int, j: int) -> EdgeConstraint:
        if i > j:
            i, j = j, i
        return self.constraints.get((i, j), EdgeConstraint.NON_ADJACENT)


@dataclass(frozen=True)
class Embedding:
    name: str
    mapping: tuple[int, ...]  # mapping[t] = host vertex for template vertex t

    def __str__(self) -> str:
        assigns = ", ".join(f"t{t}→h{h}" for t, h in enumerate(self.mapping))
        return f"{self.name}: {assigns}"


def fig1_templates() -> tuple[PatternTemplate, ...]:
    """The four small obstructions, on vertices 0..3 (0..2 for the triangle)."""
    a = PatternTemplate(
        "fig1a",
        4,
        {
            (0, 2): EdgeConstraint.DIGON,
            (1, 3): EdgeConstraint.DIGON,
            (0, 1): EdgeConstraint.NONSYM_EITHER,
            (2, 3): EdgeConstraint.NONSYM_EITHER,
            (1, 2): EdgeConstraint.ANY_ADJACENT,
            (0, 3): EdgeConstraint.ANY_ADJACENT,
        },
    )
    b = PatternTemplate(
        "fig1b",
        4,
        {
            (0, 1): EdgeConstraint.NONSYM_EITHER,
            (1, 2): EdgeConstraint.ARC_FORWARD,   # 1->2
            (2, 3): EdgeConstraint.ARC_BACKWARD,  # 3->2
            (0, 3): EdgeConstraint.DIGON,
            (0, 2): EdgeConstraint.DIGON,
            (1, 3): EdgeConstraint.ARC_BACKWARD,  # 3->1
        },
    )
    c = PatternTemplate(
        "fig1c",
        4,
        {
            (0, 1): EdgeConstraint.NONSYM_EITHER,
            (1, 2): EdgeConstraint.ARC_FORWARD,   # 1->2
            (2, 3): EdgeConstraint.DIGON,
            (0, 3): EdgeConstraint.ARC_BACKWARD,  # 3->0
            (0, 2): EdgeConstraint.ARC_FORWARD,   # 0->2
            (1, 3): EdgeConstraint.ARC_BACKWARD,  # 3->1
        },
    )
    d = PatternTemplate(
        "fig1d",
        3,
        {
            (0, 1): EdgeConstraint.ARC_FORWARD,
            (1, 2): EdgeConstraint.ARC_FORWARD,
            (0, 2): EdgeConstraint.ARC_BACKWARD,  # 2->0 closes the triangle
        },
    )
    return (a, b, c, d)


def lollipop_template(k: int) -> PatternTemplate:
    """Digon pair -> directed path of k non-symmetric arcs' vertices -> digon pair.

    Vertices: 0,1 are the feeding digon pair, 2..k+1 the path, k+2,k+3 the
    fed digon pair.  All unlisted pairs are non-adjacent.
    """
    if k < 1:
        raise ValueError("lollipop path length k must be at least 1")
    cons = {
        (0, 1): EdgeConstraint.DIGON,
        (k + 2, k + 3): EdgeConstraint.DIGON,
        (0, 2): EdgeConstraint.ARC_FORWARD,
        (1, 2): EdgeConstraint.ARC_FORWARD,
    }
    for i in range(2, k + 1):
        cons[(i, i + 1)] = EdgeConstraint.ARC_FORWARD
    cons[(k + 1, k + 2)] = EdgeConstraint.ARC_FORWARD
    cons[(k + 1, k + 3)] = EdgeConstraint.ARC_FORWARD
    return PatternTemplate(f"lollipop{k}", k + 4, cons)


def expand_template(t: PatternTemplate) -> list[Digraph]:
    """All labeled digraphs that satisfy the template exactly."""
    slots = pair_slots(t.k)
    options = [[int(kind) for kind in _ALLOWED_KINDS[t.constraint(i, j)]] for i, j in slots]
    out = []

    def fill(s: int, codes: list[int]) -> None:
        if s == len(slots):
            out.append(Digraph(t.k, codes))
            return
        for code in options[s]:
            codes.append(code)
            fill(s + 1, codes)
            codes.pop()

    fill(0, [])
    return out


def find_induced(d: Digraph, t: PatternTemplate) -> Optional[Embedding]:
    """Lexicographically smallest injective embedding of t into d, if any."""
    if t.k > d.n:
        return None
    # cheap per-template-vertex lower bounds for pruning
    req_in = [0] * t.k
    req_out = [0] * t.k
    req_digon = [0] * t.k
    req_nbr = [0] * t.k
    for (i, j), con in t.constraints.items():
        if con is EdgeConstraint.NON_ADJACENT:
            continue
        req_nbr[i] += 1
        req_nbr[j] += 1
        if con is EdgeConstraint.DIGON:
            req_digon[i] += 1
            req_digon[j] += 1
            req_in[i] += 1
            req_out[i] += 1
            req_in[j] += 1
            req_out[j] += 1
        elif con is EdgeConstraint.ARC_FORWARD:
            req_out[i] += 1
            req_in[j] += 1
        elif con is EdgeConstraint.ARC_BACKWARD:
            req_in[i] += 1
            req_out[j] += 1

    indeg = [d.in_masks[v].bit_count() for v in range(d.n)]
    outdeg = [d.out_masks[v].bit_count() for v in range(d.n)]
    digdeg = [d.digon_masks[v].bit_count() for v in range(d.n)]
    nbrdeg = [d.neighbor_mask(v).bit_count() for v in range(d.n)]

    mapping = [-1] * t.k
    used = [False] * d.n

    def extend(i: int) -> bool:
        if i == t.k:
            return True
        for h in range(d.n):
            if used[h]:
                continue
            if (
                indeg[h] < req_in[i]
                or outdeg[h] < req_out[i]
                or digdeg[h] < req_digon[i]
                or nbrdeg[h] < req_nbr[i]
            ):
                continue
            ok = True
            for p in range(i):
                kind = d.pair_kind(mapping[p], h)
                if kind not in _ALLOWED_KINDS[t.constraint(p, i)]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[i] = h
            used[h] = True
            if extend(i + 1):
                return True
            used[h] = False
        return False

    if extend(0):
        return Embedding(t.name, tuple(mapping))
    return None


# fixed-direction templates first: cheapest and most constrained
_FIG1_SEARCH_ORDER = ("fig1d", "fig1b", "fig1c", "fig1a")


def find_any_fig1(d: Digraph) -> Optional[Embedding]:
    by_name = {t.name: t for t in fig1_templates()}
    for name in _FIG1_SEARCH_ORDER:
        hit = find_induced(d, by_name[name])
        if hit is not None:
            return hit
    return None


def find_lollipop(d: Digraph, k_max: Optional[int] = None) -> Optional[Embedding]:
    """First lollipop embedding over k = 1..k_max (default n-4)."""
    if k_max is None:
        k_max = d.n - 4
    for k in range(1, k_max + 1):
        if k + 4 > d.n:
            break
        hit = find_induced(d, lollipop_template(k))
        if hit is not None:
            return hit
    return None


def find_nonsym_induced_dicycle(
    d: Digraph, min_len: int = 3
) -> Optional[tuple[int, ...]]:
    """An induced directed cycle of non-symmetric arcs, length >= min_len.

    The cycle vertices must induce exactly the cycle: consecutive pairs are
    single arcs in the cycle direction, everything else is non-adjacent.
    The cycle is reported starting from its smallest vertex; the first hit
    in depth-first order is returned.
    """
    if min_len < 3:
        raise ValueError("directed cycles need at least 3 vertices")

    def extend(path: list[int]) -> Optional[tuple[int, ...]]:
        last = path[-1]
        first = path[0]
        for w in range(first + 1, d.n):
            if w in path:
                continue
            if d.pair_kind(last, w) is not PairKind.FORWARD:
                continue
            # w may touch nothing on the path except its predecessor and,
            # when closing, the start
            if any(d.adjacent(w, x) for x in path[1:-1]):
                continue
            if len(path) == 1:
                # second vertex: its relation to the start is the path arc
                path.append(w)
                found = extend(path)
                path.pop()
                if found is not None:
                    return found
                continue
            back = d.pair_kind(w, first)
            if back is PairKind.FORWARD and len(path) + 1 >= min_len:
                return tuple(path) + (w,)
            if back is PairKind.NONE:
                path.append(w)
                found = extend(path)
                path.pop()
                if found is not None:
                    return found
        return None

    for start in range(d.n):
        found = extend([start])
        if found is not None:
            return found
    return None


def theorem4_rhs(d: Digraph) -> bool:
    """Symmetric part semi-strict chordal, and none of the four small
    obstructions present."""
    return (
        is_chordal(symmetric_subdigraph(d), Variant.SEMI_STRICT)
        and find_any_fig1(d) is None
    )


def theorem5_rhs(d: Digraph) -> bool:
    """Like theorem4_rhs, plus no induced non-symmetric directed cycle and
    no lollipop."""
    return (
        is_chordal(symmetric_subdigraph(d), Variant.SEMI_STRICT)
        and find_nonsym_induced_dicycle(d, 3) is None
        and find_any_fig1(d) is None
        and find_lollipop(d) is None
    )
