import random
from itertools import combinations

import pytest

from conftest import brute_fano_copies, labelled_fanos, random_hypergraph
from fanostab import detect
from fanostab.detect import (
    PATTERNS,
    FanoWitness,
    WitnessError,
    contains_fano,
    count_copies,
    fano_from_apex_octahedron,
    fano_from_rainbow_k4,
    fano_through_edge,
    find_embedding,
    find_tetrahedron,
    fk_check,
    heavy_quadruple,
    is_fano_configuration,
    link_structures,
    pattern_instance,
    pattern_scan,
    scan_patterns,
    system_of_distinct_representatives,
    witness_problems,
)
from fanostab.hypercore import FANO_AUTOMORPHISMS, Hypergraph3, Multigraph, bn, bn_parts, complete, generate


def assert_valid(H, w):
    assert isinstance(w, FanoWitness)
    assert witness_problems(H, w) == []
    assert all(H.has_edge(*e) for e in w.edges)
    assert is_fano_configuration(w.edges)


# -- copies and embeddings ---------------------------------------------------------

def test_copies_in_k7():
    F = generate("fano")
    assert count_copies(complete(7), F) == 30
    assert brute_fano_copies(complete(7)) == 30
    assert detect.count_embeddings(complete(7), F) == 30 * FANO_AUTOMORPHISMS


def test_fano_is_one_copy_of_itself():
    F = generate("fano")
    assert count_copies(F, F) == 1


def test_bipartite_host_has_no_embedding():
    assert find_embedding(bn(12), generate("fano")) is None
    assert contains_fano(bn(14)) is None


def test_embedding_maps_edges_to_edges():
    H = complete(8)
    F = generate("octahedron")
    phi = find_embedding(H, F)
    assert len(set(phi.values())) == len(phi)
    assert all(H.has_edge(*(phi[v] for v in e)) for e in F.edges)


def test_octahedron_copies_in_k6():
    assert count_copies(complete(6), generate("octahedron")) == 15


def test_contains_fano_on_k7():
    H = complete(7)
    assert_valid(H, contains_fano(H))


def test_fano_minus_an_edge():
    F = generate("fano")
    for drop in F.edges:
        H = Hypergraph3(7, [e for e in F.edges if e != drop])
        assert contains_fano(H) is None
        assert brute_fano_copies(H) == 0


def test_detector_agrees_with_oracle():
    rng = random.Random(5)
    for _ in range(50):
        H = random_hypergraph(8, 0.3, rng)
        w = contains_fano(H)
        assert (w is not None) == (brute_fano_copies(H) > 0)
        assert (w is not None) == (count_copies(H, generate("fano")) > 0)
        if w is not None:
            assert_valid(H, w)


def test_detector_agrees_with_oracle_dense():
    # p = 0.3 rarely plants a Fano at n = 8; a denser sweep exercises positives
    rng = random.Random(17)
    outcomes = set()
    for _ in range(40):
        H = random_hypergraph(8, 0.6, rng)
        w = contains_fano(H)
        assert (w is not None) == (brute_fano_copies(H) > 0)
        if w is not None:
            assert_valid(H, w)
        outcomes.add(w is None)
    assert outcomes == {True, False}


def test_planted_fano_found_in_bn():
    H0 = bn(12)
    p0, _ = bn_parts(12)
    extra = [(p0[0], p0[1], p0[2])]
    H = Hypergraph3(12, list(H0.edges) + extra)
    w = contains_fano(H)
    assert_valid(H, w)
    assert extra[0] in w.edges


def test_is_fano_configuration_rejects_near_misses():
    F = generate("fano")
    assert is_fano_configuration(F.edges)
    assert not is_fano_configuration(F.edges[:6])
    assert not is_fano_configuration(list(F.edges[:6]) + [(0, 1, 3)])


def test_fano_through_edge():
    F = generate("fano")
    for line in F.edges:
        w = fano_through_edge(F, line)
        assert_valid(F, w)
        assert line in w.edges
    assert fano_through_edge(bn(12), (0, 6, 7)) is None
    assert fano_through_edge(bn(12), (0, 1, 2)) is None  # not an edge


def test_fano_through_edge_matches_brute_force(rng):
    for _ in range(25):
        H = random_hypergraph(8, 0.45, rng)
        planes = [
            {tuple(sorted(seven[i] for i in line)) for line in plane}
            for seven in combinations(range(8), 7)
            for plane in labelled_fanos()
        ]
        planes = [p for p in planes if all(H.has_edge(*e) for e in p)]
        for e in H.edges[:10]:
            w = fano_through_edge(H, e)
            assert (w is not None) == any(e in p for p in planes)
            if w is not None:
                assert_valid(H, w)
                assert e in w.edges


# -- links -------------------------------------------------------------------------

def test_link_example_bn8():
    fam = link_structures(bn(8), (0, 1, 4, 5))
    G = fam.reduced
    assert G.m(2, 3) == 2 and G.m(6, 7) == 2
    for u in (2, 3):
        for v in (6, 7):
            assert G.m(u, v) == 4
    assert all(m <= 4 for _, m in fam.combined.pairs())


def test_link_of_k5_leaves_no_pairs():
    fam = link_structures(complete(5), (0, 1, 2, 3))
    assert fam.reduced.edge_count() == 0


def test_link_invariants(rng):
    for _ in range(30):
        n = rng.randint(5, 11)
        H = random_hypergraph(n, 0.5, rng)
        S = tuple(rng.sample(range(n), 4))
        fam = link_structures(H, S)
        for x in fam.apex_set:
            for u, w in fam.links[x]:
                assert H.has_edge(x, u, w)
        for (u, w), m in fam.combined.pairs():
            assert m == sum((u, w) in fam.links[x] for x in fam.apex_set)
        touching = sum(m for (u, w), m in fam.combined.pairs() if u in fam.apex_set or w in fam.apex_set)
        assert fam.reduced.edge_count() + touching == sum(H.degree[x] for x in S)
        assert all(m <= 4 for _, m in fam.reduced.pairs())


def test_link_rejects_bad_apexes():
    with pytest.raises(ValueError):
        link_structures(complete(6), (0, 1, 2))
    with pytest.raises(ValueError):
        link_structures(complete(6), (0, 1, 2, 9))


# -- tetrahedra and heavy quadruples -------------------------------------------------

def test_find_tetrahedron():
    assert find_tetrahedron(complete(4)) == (0, 1, 2, 3)
    assert find_tetrahedron(generate("fano")) is None
    p0, p1 = bn_parts(8)
    S = find_tetrahedron(bn(8))
    assert sum(v in p0 for v in S) == 2 and sum(v in p1 for v in S) == 2


def test_find_tetrahedron_is_lexicographically_least(rng):
    for _ in range(20):
        H = random_hypergraph(9, 0.6, rng)
        want = next((q for q in combinations(range(9), 4)
                     if all(H.has_edge(*t) for t in combinations(q, 3))), None)
        assert find_tetrahedron(H) == want


def test_heavy_quadruple_examples():
    full = Multigraph(6, {p: 4 for p in combinations(range(2, 6), 2)})
    assert heavy_quadruple(full) == (2, 3, 4, 5)
    threes = Multigraph(7, {p: 3 for p in combinations(range(7), 2)})
    assert heavy_quadruple(threes) is None
    edge = dict.fromkeys(combinations(range(4), 2), 4)
    edge[(2, 3)] = 1
    assert heavy_quadruple(Multigraph(4, edge)) == (0, 1, 2, 3)
    edge[(2, 3)] = 0
    assert heavy_quadruple(Multigraph(4, edge)) is None


def test_fk_examples():
    simple = Multigraph(6, {p: 1 for p in combinations(range(6), 2)})
    r = fk_check(simple)
    assert r["cap20"] and r["bound_holds"]
    r = fk_check(Multigraph(5, {p: 3 for p in combinations(range(5), 2)}))
    assert r["cap20"] and r["bound_holds"] and (r["edges"], r["bound"]) == (30, 33)
    assert detect.fk_bound(4) == 20
    with pytest.raises(ValueError):
        fk_check(Multigraph(3))


def test_fk_reports_witness():
    G = Multigraph(5, {p: 4 for p in combinations(range(1, 5), 2)})
    r = fk_check(G)
    assert not r["cap20"] and r["witness"] == (1, 2, 3, 4)


def test_fk_property_random():
    rng = random.Random(2026)
    capped = 0
    for _ in range(10_000):
        n = rng.randint(4, 7)
        top = rng.randint(1, 6)
        G = Multigraph(n, {p: rng.randint(0, top) for p in combinations(range(n), 2)})
        r = fk_check(G)
        if r["cap20"]:
            capped += 1
            assert r["bound_holds"], G
    assert capped > 1000


# -- constructors --------------------------------------------------------------------

def _rainbow_host():
    # base edge {0,1,2}, quad {3,4,5,6}; matching i goes to apex i
    ms = (((3, 4), (5, 6)), ((3, 5), (4, 6)), ((3, 6), (4, 5)))
    edges = [(0, 1, 2)]
    for x, M in enumerate(ms):
        edges += [tuple(sorted((x,) + p)) for p in M]
    return Hypergraph3(7, edges), ms


def test_rainbow_constructor():
    H, ms = _rainbow_host()
    w = fano_from_rainbow_k4(H, (0, 1, 2), (3, 4, 5, 6), ms)
    assert_valid(H, w)
    assert contains_fano(H) is not None


def test_rainbow_constructor_names_missing_triple():
    H, ms = _rainbow_host()
    gone = (1, 3, 5)
    H2 = Hypergraph3(7, [e for e in H.edges if e != gone])
    with pytest.raises(WitnessError) as info:
        fano_from_rainbow_k4(H2, (0, 1, 2), (3, 4, 5, 6), ms)
    assert info.value.missing == gone
    assert str(gone) in str(info.value)


def test_rainbow_constructor_in_k7():
    H = complete(7)
    ms = detect.perfect_matchings((3, 4, 5, 6))
    assert_valid(H, fano_from_rainbow_k4(H, (0, 1, 2), (3, 4, 5, 6), ms))


def test_rainbow_constructor_rejects_bad_matchings():
    H = complete(7)
    with pytest.raises(WitnessError):
        fano_from_rainbow_k4(H, (0, 1, 2), (3, 4, 5, 6), (((3, 4), (5, 6)),) * 3)
    with pytest.raises(WitnessError):
        fano_from_rainbow_k4(H, (0, 1, 2), (2, 4, 5, 6), detect.perfect_matchings((2, 4, 5, 6)))


def _apex_host():
    O = generate("octahedron")
    edges = [tuple(v + 1 for v in e) for e in O.edges]
    edges += [(0, 1, 2), (0, 3, 4), (0, 5, 6)]
    return Hypergraph3(7, edges)


def test_apex_octahedron_constructor():
    H = _apex_host()
    w = fano_from_apex_octahedron(H, 0, ((1, 2), (3, 4), (5, 6)))
    assert_valid(H, w)


def test_apex_octahedron_names_missing_transversal():
    H = _apex_host()
    gone = (2, 4, 6)
    H2 = Hypergraph3(7, [e for e in H.edges if e != gone])
    with pytest.raises(WitnessError) as info:
        fano_from_apex_octahedron(H2, 0, ((1, 2), (3, 4), (5, 6)))
    assert info.value.missing == gone


def test_apex_octahedron_in_k7():
    H = complete(7)
    for apex in range(7):
        rest = [v for v in range(7) if v != apex]
        pairs = (rest[0:2], rest[2:4], rest[4:6])
        assert_valid(H, fano_from_apex_octahedron(H, apex, pairs))


# -- distinct representatives and patterns -----------------------------------------------

def test_sdr():
    assert system_of_distinct_representatives([[0, 1], [0], [1, 2]]) == [1, 0, 2]
    assert system_of_distinct_representatives([[0], [0]]) is None
    assert system_of_distinct_representatives([]) == []


@pytest.mark.parametrize("name", PATTERNS)
def test_pattern_instances_yield_witnesses(name):
    H, S, Y = pattern_instance(name)
    hit = scan_patterns(H, S)
    assert hit is not None and hit.pattern == name
    assert set(hit.vertices) <= set(Y)
    assert_valid(H, hit.witness)
    assert set(hit.witness.edges) <= set(H.edges)
    assert_valid(H, pattern_scan(H, S))


def test_cross_pattern_index_sizes():
    H, S, Y = pattern_instance("cross_44")
    _, _, J = detect.rainbow_assignment(H, S, Y)
    sizes = sorted(len(j) for j in J)
    # lower bounds 2, 1, 3 from the multiplicity arithmetic
    assert sizes[0] >= 1 and sizes[1] >= 2 and sizes[2] >= 3


def test_pattern_scan_quiet_when_multiplicities_low():
    # G(S) of B_n has multiplicities 2 and 4 only, and no pattern fires
    H = bn(10)
    S = find_tetrahedron(H)
    assert pattern_scan(H, S) is None
    # all multiplicities <= 2: S = {0,1,2,3} apexes 0, 1 only
    edges = set(combinations(range(4), 3))
    for u, v in combinations(range(4, 9), 2):
        edges.add((0, u, v))
        edges.add((1, u, v))
    H = Hypergraph3(9, sorted(edges))
    assert pattern_scan(H, (0, 1, 2, 3)) is None


def test_pattern_scan_requires_tetrahedron():
    with pytest.raises(ValueError):
        pattern_scan(bn(8), (0, 1, 2, 3))


def test_pattern_scan_on_k8():
    H = complete(8)
    assert_valid(H, pattern_scan(H, (0, 1, 2, 3)))


def test_unknown_pattern_instance():
    with pytest.raises(ValueError):
        pattern_instance("nope")
