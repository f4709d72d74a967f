import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dichordal.classes import is_extended_semicomplete
from dichordal.digraph import (
    Digraph,
    PairKind,
    are_isomorphic,
    asynchronous,
    build,
    digraph_count,
    digraph_from_index,
    digraph_to_index,
    enumerate_digraphs,
    induced,
    parse,
    parse_labeled,
    random_digraph,
    serialize,
    substitute,
    symmetric_subdigraph,
    to_dot,
)

from conftest import digraphs


def test_build_example1(ex1):
    assert ex1.n == 4
    assert sorted(ex1.arcs()) == [(0, 1), (1, 2), (2, 3), (3, 0), (3, 1), (3, 2)]
    assert ex1.pair_kind(2, 3) is PairKind.DIGON
    assert ex1.pair_kind(0, 1) is PairKind.FORWARD
    assert ex1.pair_kind(1, 0) is PairKind.BACKWARD
    assert ex1.pair_kind(0, 2) is PairKind.NONE


def test_build_single_vertex():
    d = build(1, [])
    assert d.n == 1 and d.arc_count == 0


def test_build_digon():
    d = build(2, [(0, 1), (1, 0)])
    assert d.pair_kind(0, 1) is PairKind.DIGON


def test_build_collapses_duplicates():
    assert build(2, [(0, 1), (0, 1)]) == build(2, [(0, 1)])


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 5)], [(-1, 0)]])
def test_build_rejects_bad_arcs(bad):
    with pytest.raises(ValueError):
        build(3, bad)


def test_neighbors_example1(ex1):
    assert ex1.in_neighbors(3) == {2}
    assert ex1.out_neighbors(3) == {0, 1, 2}
    assert ex1.in_neighbors(0) == {3}


def test_neighbors_isolated_and_digon():
    d = build(3, [(0, 1), (1, 0)])
    assert d.in_neighbors(2) == set() and d.out_neighbors(2) == set()
    assert 0 in d.in_neighbors(1) and 0 in d.out_neighbors(1)


def test_neighborhoods_agree_with_arc_set_pointwise():
    for d in enumerate_digraphs(3):
        arcs = set(d.arcs())
        for v in range(3):
            for u in range(3):
                if u == v:
                    continue
                assert (u in d.in_neighbors(v)) == ((u, v) in arcs)
                assert (u in d.out_neighbors(v)) == ((v, u) in arcs)


def test_asynchronous_path():
    path = build(3, [(0, 1), (1, 2)])
    assert asynchronous(path, 1, 0, 2)


def test_asynchronous_false_cases():
    two_digons = build(3, [(0, 1), (1, 0), (2, 1), (1, 2)])
    assert not asynchronous(two_digons, 1, 0, 2)
    in_star = build(3, [(0, 1), (2, 1)])
    assert not asynchronous(in_star, 1, 0, 2)


def test_asynchronous_errors():
    path = build(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        asynchronous(path, 0, 1, 2)  # 2 is not a neighbour of 0
    with pytest.raises(ValueError):
        asynchronous(path, 1, 0, 0)


def test_symmetric_subdigraph_example1(ex1):
    assert sorted(symmetric_subdigraph(ex1).arcs()) == [(2, 3), (3, 2)]


def test_symmetric_subdigraph_oriented_and_symmetric():
    oriented = build(3, [(0, 1), (1, 2), (2, 0)])
    assert symmetric_subdigraph(oriented).arc_count == 0
    sym = build(3, [(0, 1), (1, 0), (1, 2), (2, 1)])
    assert symmetric_subdigraph(sym) == sym


@given(digraphs())
def test_symmetric_subdigraph_idempotent(d):
    s = symmetric_subdigraph(d)
    assert symmetric_subdigraph(s) == s


def test_induced_example1(ex1):
    # {a, b, d} relabels to 0, 1, 2; arcs ab, da, db survive
    sub = induced(ex1, {0, 1, 3})
    assert sorted(sub.arcs()) == [(0, 1), (2, 0), (2, 1)]


def test_induced_full_and_singleton(ex1):
    assert induced(ex1, range(4)) == ex1
    assert induced(ex1, {2}).n == 1


@given(digraphs(), st.data())
def test_induced_functorial(d, data):
    s = data.draw(st.sets(st.integers(0, d.n - 1)) if d.n else st.just(set()))
    t = data.draw(st.sets(st.sampled_from(sorted(s))) if s else st.just(set()))
    svs = sorted(s)
    inner = induced(induced(d, s), [svs.index(x) for x in t])
    assert inner == induced(d, t)


def test_substitute_identity_digon():
    digon = build(2, [(0, 1), (1, 0)])
    k1 = build(1, [])
    assert substitute(digon, [k1, k1]) == digon


def test_substitute_blows_up_tail():
    arc = build(2, [(0, 1)])
    two = build(2, [])
    out = substitute(arc, [two, build(1, [])])
    assert sorted(out.arcs()) == [(0, 2), (1, 2)]
    assert out.pair_kind(0, 1) is PairKind.NONE


def test_substitute_semicomplete_blowup_is_extended_semicomplete():
    cycle = build(3, [(0, 1), (1, 2), (2, 0)])
    ind = build(2, [])
    k1 = build(1, [])
    assert is_extended_semicomplete(substitute(cycle, [ind, k1, ind]))


def test_substitute_empty_part_rejected():
    with pytest.raises(ValueError):
        substitute(build(1, []), [build(0, [])])


@given(digraphs(max_n=5))
def test_substitute_singletons_is_identity(d):
    k1 = build(1, [])
    assert substitute(d, [k1] * d.n) == d


def test_isomorphism_basics(ex1):
    assert are_isomorphic(ex1, ex1)
    cycle = build(3, [(0, 1), (1, 2), (2, 0)])
    transitive = build(3, [(0, 1), (1, 2), (0, 2)])
    assert not are_isomorphic(cycle, transitive)


def test_isomorphism_relabeled_digon_path():
    a = build(3, [(0, 1), (1, 0), (1, 2)])
    b = build(3, [(2, 1), (1, 2), (1, 0)])
    assert are_isomorphic(a, b)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 4), (3, 64), (4, 4096)])
def test_enumeration_counts(n, count):
    assert digraph_count(n) == count
    seen = set(enumerate_digraphs(n, cap=5))
    assert len(seen) == count


def test_enumeration_cap():
    with pytest.raises(ValueError):
        next(enumerate_digraphs(6))


def test_enumeration_matches_index_order():
    for i, d in enumerate(enumerate_digraphs(3)):
        assert digraph_to_index(d) == i
        assert digraph_from_index(3, i) == d


def test_random_digraph_degenerate_weights():
    assert random_digraph(5, (1, 0, 0, 0), seed=3).arc_count == 0
    full = random_digraph(4, (0, 0, 0, 1), seed=3)
    assert all(k == 3 for k in full.codes)


def test_random_digraph_deterministic():
    assert random_digraph(7, (1, 2, 2, 1), seed=42) == random_digraph(
        7, (1, 2, 2, 1), seed=42
    )


@pytest.mark.parametrize("weights", [(1, 1, 1), (-1, 1, 1, 1), (0, 0, 0, 0)])
def test_random_digraph_bad_weights(weights):
    with pytest.raises(ValueError):
        random_digraph(3, weights, seed=0)


def test_serialize_example1(ex1):
    text = serialize(ex1)
    lines = text.splitlines()
    assert lines[0] == "4 6"
    assert len(lines) == 7
    assert parse(text) == ex1


def test_parse_k1():
    assert parse("1 0\n") == build(1, [])


def test_roundtrip_all_n3():
    for d in enumerate_digraphs(3):
        assert parse(serialize(d)) == d
        assert serialize(parse(serialize(d))) == serialize(d)


def test_labels_roundtrip(ex1):
    names = {0: "a", 1: "b", 2: "c", 3: "d"}
    d, parsed = parse_labeled(serialize(ex1, names))
    assert d == ex1 and parsed == names


@pytest.mark.parametrize(
    "text",
    [
        "",
        "nonsense\n",
        "2 1\n",  # promised arc missing
        "2 1\n0 0\n",  # loop
        "2 1\n0 5\n",  # out of range
        "2 1\n0 1 2\n",  # malformed arc line
        "2 0\n# 7 z\n",  # label out of range
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse(text)


def test_to_dot_marks_digons(ex1):
    dot = to_dot(ex1, {0: "a", 1: "b", 2: "c", 3: "d"})
    assert "2 -> 3 [dir=both];" in dot
    assert "0 -> 1;" in dot


@given(digraphs(max_n=5))
@settings(max_examples=60)
def test_index_roundtrip(d):
    assert digraph_from_index(d.n, digraph_to_index(d)) == d
