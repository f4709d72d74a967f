"""Loop-free digraphs with digons, stored as 2-bit codes per unordered pair.

Every unordered pair {i, j} (i < j) carries exactly one of four codes:
0 = non-adjacent, 1 = arc i->j, 2 = arc j->i, 3 = digon (both arcs).
Pairs are ordered (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),... so a digraph on
n vertices is a base-4 number with n(n-1)/2 digits.  That makes exhaustive
enumeration a counter, sharding a range split, and equality structural.

Neighbourhoods are kept as int bitmasks; all operations are pure and
Digraph values are immutable, so they can be shared freely.
"""

from __future__ import annotations

import itertools
import random
from enum import IntEnum
from typing import Iterable, Iterator, Mapping, Sequence


class PairKind(IntEnum):
    """Adjacency kind of an ordered vertex pair (u, v)."""

    NONE = 0
    FORWARD = 1   # arc u->v only
    BACKWARD = 2  # arc v->u only
    DIGON = 3     # both arcs


# kind seen from (v, u) given the kind seen from (u, v)
_FLIP = (PairKind.NONE, PairKind.BACKWARD, PairKind.FORWARD, PairKind.DIGON)


def pair_slots(n: int) -> list[tuple[int, int]]:
    """Unordered pairs in enumeration order: (0,1),(0,2),(1,2),(0,3),..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def slot_index(i: int, j: int) -> int:
    """Position of pair (i, j), i < j, in the enumeration order."""
    return j * (j - 1) // 2 + i


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Digraph:
    """Immutable digraph on vertices 0..n-1 without loops or multi-arcs."""

    __slots__ = ("n", "codes", "out_masks", "in_masks", "digon_masks", "_hash")

    def __init__(self, n: int, codes: Sequence[int]):
        m = n * (n - 1) // 2
        if len(codes) != m:
            raise ValueError(f"expected {m} pair codes for n={n}, got {len(codes)}")
        self.n = n
        self.codes = tuple(codes)
        out = [0] * n
        inn = [0] * n
        for (i, j), c in zip(pair_slots(n), self.codes):
            if c & 1:  # arc i->j
                out[i] |= 1 << j
                inn[j] |= 1 << i
            if c & 2:  # arc j->i
                out[j] |= 1 << i
                inn[i] |= 1 << j
        self.out_masks = tuple(out)
        self.in_masks = tuple(inn)
        self.digon_masks = tuple(a & b for a, b in zip(out, inn))
        self._hash = hash((n, self.codes))

    # -- structural equality ------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.codes == other.codes
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs())})"

    # -- queries ------------------------------------------------------------

    def pair_kind(self, u: int, v: int) -> PairKind:
        """Adjacency kind of {u, v} oriented as (u, v)."""
        if u == v:
            raise ValueError("pair_kind needs two distinct vertices")
        if u < v:
            return PairKind(self.codes[slot_index(u, v)])
        return _FLIP[self.codes[slot_index(v, u)]]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.out_masks[u] | self.in_masks[u]) >> v & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.out_masks[u]):
                yield (u, v)

    @property
    def arc_count(self) -> int:
        return sum(m.bit_count() for m in self.out_masks)

    def neighbor_mask(self, v: int) -> int:
        return self.out_masks[v] | self.in_masks[v]

    def in_neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(bits(self.in_masks[v]))

    def out_neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(bits(self.out_masks[v]))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")


def build(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Digraph with exactly the given arcs; duplicates collapse.

    Raises ValueError on a loop or an out-of-range endpoint.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    codes = [0] * (n * (n - 1) // 2)
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop arc ({u},{v}) not allowed")
        if u < v:
            codes[slot_index(u, v)] |= 1
        else:
            codes[slot_index(v, u)] |= 2
    return Digraph(n, codes)


def asynchronous(d: Digraph, v: int, u: int, w: int) -> bool:
    """True iff u and w sit in different cells of {in-only, out-only, both} at v.

    Both u and w must be neighbours of v, and distinct.
    """
    d._check_vertex(v)
    if u == w:
        raise ValueError("u and w must be distinct")
    cells = []
    for x in (u, w):
        if not d.adjacent(v, x):
            raise ValueError(f"vertex {x} is not a neighbour of {v}")
        cells.append((d.has_arc(x, v), d.has_arc(v, x)))
    return cells[0] != cells[1]


def symmetric_subdigraph(d: Digraph) -> Digraph:
    """Spanning subdigraph keeping exactly the arcs that lie in digons."""
    return Digraph(d.n, [c if c == 3 else 0 for c in d.codes])


def induced(d: Digraph, vertices: Iterable[int]) -> Digraph:
    """Subdigraph induced by `vertices`, relabelled by their sorted order.

    New vertex i corresponds to the i-th smallest member of `vertices`,
    so the index remap is simply tuple(sorted(vertices)).
    """
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < d.n):
        raise ValueError("induced set must be a subset of the vertex range")
    k = len(vs)
    codes = [0] * (k * (k - 1) // 2)
    for j in range(1, k):
        for i in range(j):
            codes[slot_index(i, j)] = d.codes[slot_index(vs[i], vs[j])]
    return Digraph(k, codes)


def induced_mask(d: Digraph, mask: int) -> Digraph:
    """induced() over a vertex bitmask."""
    return induced(d, bits(mask))


def substitute(d: Digraph, parts: Sequence[Digraph] | Mapping[int, Digraph]) -> Digraph:
    """Replace each vertex v of d by the digraph parts[v].

    Inside a part, arcs are the part's own; between the parts for u and v,
    every cross pair gets an arc x->y exactly when d has the arc u->v.
    Every part must be nonempty.
    """
    blocks = [parts[v] for v in range(d.n)]
    if any(p.n == 0 for p in blocks):
        raise ValueError("substitution parts must be nonempty")
    offsets = [0] * d.n
    total = 0
    for v, p in enumerate(blocks):
        offsets[v] = total
        total += p.n
    arcs: list[tuple[int, int]] = []
    for v, p in enumerate(blocks):
        base = offsets[v]
        arcs.extend((base + x, base + y) for x, y in p.arcs())
    for u, v in d.arcs():
        for x in range(blocks[u].n):
            for y in range(blocks[v].n):
                arcs.append((offsets[u] + x, offsets[v] + y))
    return build(total, arcs)


# -- isomorphism -------------------------------------------------------------


def _invariant(d: Digraph, v: int) -> tuple[int, int, int]:
    return (
        d.in_masks[v].bit_count(),
        d.out_masks[v].bit_count(),
        d.digon_masks[v].bit_count(),
    )


def are_isomorphic(d1: Digraph, d2: Digraph) -> bool:
    """Arc-kind-preserving bijection test; intended for small orders."""
    if d1.n != d2.n:
        return False
    if d1.codes == d2.codes:
        return True
    inv1 = [_invariant(d1, v) for v in range(d1.n)]
    inv2 = [_invariant(d2, v) for v in range(d2.n)]
    if sorted(inv1) != sorted(inv2):
        return False
    n = d1.n
    mapping = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or inv1[v] != inv2[w]:
                continue
            ok = True
            for p in range(v):
                if d1.pair_kind(p, v) != d2.pair_kind(mapping[p], w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        return False

    return extend(0)


def canonical_form(d: Digraph) -> tuple[int, ...]:
    """Lexicographically smallest code tuple over all vertex relabellings.

    Brute force over permutations; fine for the n <= 6 uses it has.
    """
    best = None
    m = pair_slots(d.n)
    for perm in itertools.permutations(range(d.n)):
        inv = [0] * d.n
        for old, new in enumerate(perm):
            inv[new] = old
        # kind of the pre-image pair, oriented as the new (i, j)
        t = tuple(int(d.pair_kind(inv[i], inv[j])) for i, j in m)
        if best is None or t < best:
            best = t
    return best if best is not None else ()


# -- enumeration and random generation ----------------------------------------


def digraph_count(n: int) -> int:
    """Number of labeled digraphs on n vertices: 4^(n(n-1)/2)."""
    return 4 ** (n * (n - 1) // 2)


def digraph_from_index(n: int, index: int) -> Digraph:
    """Digraph whose pair codes are the base-4 digits of `index`.

    The first pair (0,1) is the most significant digit, so enumeration by
    ascending index is lexicographic on the code tuple.
    """
    m = n * (n - 1) // 2
    if not 0 <= index < digraph_count(n):
        raise ValueError("digraph index out of range")
    codes = [0] * m
    for s in range(m - 1, -1, -1):
        codes[s] = index & 3
        index >>= 2
    return Digraph(n, codes)


def digraph_to_index(d: Digraph) -> int:
    index = 0
    for c in d.codes:
        index = (index << 2) | c
    return index


def enumerate_digraphs(n: int, cap: int = 5) -> Iterator[Digraph]:
    """Yield every labeled digraph on n vertices exactly once.

    Refuses n above `cap` (4^(n(n-1)/2) grows brutally fast).
    """
    if n > cap:
        raise ValueError(f"enumeration cap exceeded: n={n} > cap={cap}")
    for codes in itertools.product(range(4), repeat=n * (n - 1) // 2):
        yield Digraph(n, codes)


def random_digraph(
    n: int, kind_weights: Sequence[float] = (1, 1, 1, 1), seed: int = 0
) -> Digraph:
    """Each unordered pair drawn independently with the given kind weights.

    Weights are (non-adjacent, forward, backward, digon); they must be
    nonnegative with a positive sum.  Deterministic for a fixed seed.
    """
    if len(kind_weights) != 4 or any(w < 0 for w in kind_weights):
        raise ValueError("kind_weights must be 4 nonnegative numbers")
    total = float(sum(kind_weights))
    if total <= 0:
        raise ValueError("kind_weights must have positive sum")
    cum = list(itertools.accumulate(w / total for w in kind_weights))
    rng = random.Random(seed)
    codes = []
    for _ in range(n * (n - 1) // 2):
        r = rng.random()
        k = 0
        while k < 3 and r >= cum[k]:
            k += 1
        codes.append(k)
    return Digraph(n, codes)


# -- text format ---------------------------------------------------------------
#
# First line "n m"; then m lines "u v", one per arc (a digon is two lines);
# optionally trailing "# v name" label lines.  serialize() emits arcs sorted,
# so parse(serialize(d)) == d byte-for-byte on the way back out as well.


def serialize(d: Digraph, names: Mapping[int, str] | None = None) -> str:
    lines = [f"{d.n} {d.arc_count}"]
    lines.extend(f"{u} {v}" for u, v in sorted(d.arcs()))
    if names:
        lines.extend(f"# {v} {names[v]}" for v in sorted(names))
    return "\n".join(lines) + "\n"


def parse(text: str) -> Digraph:
    d, _ = parse_labeled(text)
    return d


def parse_labeled(text: str) -> tuple[Digraph, dict[int, str]]:
    """Parse the text format, returning the digraph and any vertex names."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty digraph text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"malformed header {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"malformed header {lines[0]!r}, expected 'n m'") from None
    if n < 0 or m < 0:
        raise ValueError("header counts must be nonnegative")
    arcs = []
    names: dict[int, str] = {}
    for ln in lines[1:]:
        if ln.startswith("#"):
            fields = ln[1:].split(None, 1)
            if len(fields) != 2:
                raise ValueError(f"malformed label line {ln!r}")
            v = int(fields[0])
            if not 0 <= v < n:
                raise ValueError(f"label line {ln!r} names vertex out of range")
            names[v] = fields[1]
            continue
        fields = ln.split()
        if len(fields) != 2:
            raise ValueError(f"malformed arc line {ln!r}")
        u, v = int(fields[0]), int(fields[1])
        arcs.append((u, v))
    if len(arcs) != m:
        raise ValueError(f"header promises {m} arcs, found {len(arcs)}")
    return build(n, arcs), names  # build() re-validates range and loops


def to_dot(d: Digraph, names: Mapping[int, str] | None = None) -> str:
    """DOT export; a digon becomes one edge with dir=both."""

    def label(v: int) -> str:
        return names[v] if names and v in names else str(v)

    lines = ["digraph D {"]
    for v in range(d.n):
        lines.append(f'  {v} [label="{label(v)}"];')
    for i, j in pair_slots(d.n):
        kind = d.pair_kind(i, j)
        if kind is PairKind.FORWARD:
            lines.append(f"  {i} -> {j};")
        elif kind is PairKind.BACKWARD:
            lines.append(f"  {j} -> {i};")
        elif kind is PairKind.DIGON:
            lines.append(f"  {i} -> {j} [dir=both];")
    lines.append("}")
    return "\n".join(lines) + "\n"
