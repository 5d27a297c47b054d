import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from fanostab.hypercore import (
    FormatError,
    Hypergraph3,
    Multigraph,
    bn,
    bn_parts,
    complete,
    degree_profile,
    delete_vertices,
    edges_within,
    ex_fano,
    generate,
    induced,
    is_linear,
    parse,
    parse_multigraph,
    serialize,
    serialize_multigraph,
)


def test_fano_generator():
    F = generate("fano")
    assert F.n == 7 and len(F.edges) == 7
    assert is_linear(F)
    assert all(F.codegree(u, v) == 1 for u, v in combinations(range(7), 2))
    assert all(d == 3 for d in F.degree)


def test_octahedron_and_tetrahedron():
    O = generate("octahedron")
    assert (O.n, len(O.edges)) == (6, 8)
    for a, b, c in O.edges:
        assert {a // 2, b // 2, c // 2} == {0, 1, 2}
    T = generate("tetrahedron")
    assert (T.n, len(T.edges)) == (4, 4)


def test_bn_small():
    assert len(generate("bn", 7).edges) == comb(7, 3) - 1 - 4
    p0, p1 = bn_parts(7)
    assert p0 == [0, 1, 2, 3] and p1 == [4, 5, 6]


def test_generate_rejects_small_and_unknown():
    with pytest.raises(ValueError):
        generate("complete", 2)
    with pytest.raises(ValueError):
        generate("bn", 2)
    with pytest.raises(ValueError):
        generate("bn")
    with pytest.raises(ValueError):
        generate("petersen", 5)


def test_ex_fano_values():
    assert ex_fano(8) == 48
    assert ex_fano(9) == 70
    with pytest.raises(ValueError):
        ex_fano(7)


def test_ex_fano_matches_bn_and_identity():
    for n in range(8, 201):
        assert ex_fano(n) == len(bn(n))
    for n in range(8, 501):
        assert ex_fano(n) == comb(n, 3) - comb(n // 2, 3) - comb((n + 1) // 2, 3)


def test_edges_within():
    p0, _ = bn_parts(10)
    assert edges_within(bn(10), p0) == 0
    H = complete(6)
    assert edges_within(H, range(6)) == len(H.edges)
    for four in combinations(range(6), 4):
        assert edges_within(H, four) == 4


def test_degree_profile():
    assert degree_profile(generate("fano"))["degrees"] == [3] * 7
    assert degree_profile(complete(5))["min_degree"] == 6
    assert set(degree_profile(bn(8))["degrees"]) == {comb(7, 2) - comb(3, 2)}
    prof = degree_profile(complete(5))
    assert prof["codegree"](0, 1) == 3


def test_bn_degree_formula():
    for n in range(6, 30):
        H = bn(n)
        for part in bn_parts(n):
            s = len(part)
            assert all(H.degree[v] == comb(n - 1, 2) - comb(s - 1, 2) for v in part)


def test_is_linear():
    assert not is_linear(complete(4))
    assert is_linear(Hypergraph3(5))


def test_degree_and_codegree_sums(rng):
    for _ in range(20):
        n = rng.randint(3, 12)
        H = Hypergraph3(n, [t for t in combinations(range(n), 3) if rng.random() < 0.4])
        assert sum(H.degree) == 3 * len(H.edges)
        assert sum(H.codegrees.values()) == 3 * len(H.edges)


def test_validation():
    with pytest.raises(ValueError):
        Hypergraph3(3, [(0, 1, 3)])
    with pytest.raises(ValueError):
        Hypergraph3(3, [(0, 1, 1)])
    with pytest.raises(ValueError):
        Hypergraph3(4, [(0, 1, 2), (2, 1, 0)])


def test_induced():
    H = complete(7)
    sub, relabel = induced(H, [1, 3, 4, 6])
    assert sub == complete(4)
    assert relabel == {1: 0, 3: 1, 4: 2, 6: 3}
    same, _ = induced(H, range(7))
    assert same == H
    rng = random.Random(3)
    G = Hypergraph3(9, [t for t in combinations(range(9), 3) if rng.random() < 0.5])
    A = [0, 2, 5, 7, 8]
    assert len(induced(G, A)[0].edges) == edges_within(G, A)


def test_delete_vertices_keeps_labels():
    H = delete_vertices(complete(5), [0])
    assert H.n == 5 and len(H.edges) == 4


def test_parse_examples():
    assert parse("3\n0 1 2\n") == complete(3)
    with pytest.raises(FormatError, match="vertex out of range, line 2"):
        parse("3\n0 1 5\n")
    with pytest.raises(FormatError, match="duplicate triple, line 3"):
        parse("4\n0 1 2\n2 1 0\n")
    with pytest.raises(FormatError, match="line 2"):
        parse("4\n0 1\n")
    with pytest.raises(FormatError, match="line 1"):
        parse("x\n")


def test_parse_ignores_comments_and_blank_lines():
    assert parse("# header\n4\n\n# edge\n3 2 1\n") == Hypergraph3(4, [(1, 2, 3)])


def test_serialize_is_canonical():
    text = "5\n4 3 2\n0 2 1\n"
    assert serialize(parse(text)) == "5\n0 1 2\n2 3 4\n"


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.sampled_from(list(combinations(range(n), 3))) if n >= 3 else st.nothing()))
))
def test_round_trip(data):
    n, edges = data
    H = Hypergraph3(n, edges)
    assert parse(serialize(H)) == H
    assert serialize(parse(serialize(H))) == serialize(H)


def test_multigraph_round_trip_and_checks():
    G = Multigraph(5, {(0, 1): 3, (2, 4): 1})
    assert parse_multigraph(serialize_multigraph(G)) == G
    assert G.edge_count() == 4
    assert G.degree(0) == 3
    with pytest.raises(FormatError, match="loop, line 2"):
        parse_multigraph("3\n1 1 2\n")
    with pytest.raises(FormatError, match="line 2"):
        parse_multigraph("3\n0 1 0\n")
    with pytest.raises(ValueError):
        Multigraph(3, {(0, 0): 1})
