"""Fano detection, link multigraphs and witness construction.

Every positive answer comes with a :class:`FanoWitness` that can be checked
against the host hypergraph without trusting the code that produced it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Sequence

from fanostab import kernels
from fanostab.hypercore import FANO_LINES, Hypergraph3, Multigraph, Pair, Triple, _pair


class WitnessError(ValueError):
    """A constructor precondition failed; ``missing`` names the absent triple."""

    def __init__(self, message: str, missing: Triple | None = None):
        super().__init__(message)
        self.missing = missing


class PatternDefect(RuntimeError):
    """A multiplicity pattern matched but no distinct-representative
    assignment exists.  The counting argument rules this out, so reaching it
    means a bug, not an input problem."""


# -- witnesses ---------------------------------------------------------------

@dataclass(frozen=True)
class FanoWitness:
    vertices: tuple[int, ...]
    edges: tuple[Triple, ...]
    via: str = field(default="search", compare=False)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


def is_fano_configuration(edges: Sequence[Sequence[int]]) -> bool:
    """Seven triples on seven points covering every pair exactly once.

    The Fano plane is the only Steiner triple system of order 7, so this is
    an isomorphism test.
    """
    if len(edges) != 7:
        return False
    triples = [tuple(sorted(e)) for e in edges]
    if len(set(triples)) != 7 or any(len(set(t)) != 3 for t in triples):
        return False
    points = sorted({v for t in triples for v in t})
    if len(points) != 7:
        return False
    seen: set[Pair] = set()
    for a, b, c in triples:
        for p in ((a, b), (a, c), (b, c)):
            if p in seen:
                return False
            seen.add(p)
    return len(seen) == 21


def witness_problems(H: Hypergraph3, w: FanoWitness) -> list[str]:
    """Empty list iff ``w`` is a genuine Fano copy inside ``H``."""
    problems = []
    missing = [e for e in w.edges if not H.has_edge(*e)]
    if missing:
        problems.append(f"triples not in H: {missing}")
    if sorted({v for e in w.edges for v in e}) != sorted(w.vertices):
        problems.append("vertex list does not match edge support")
    if not is_fano_configuration(w.edges):
        problems.append("triples do not form a Fano plane")
    return problems


def _witness(edges: Iterable[Sequence[int]], via: str) -> FanoWitness:
    es = tuple(sorted(tuple(sorted(e)) for e in edges))
    verts = tuple(sorted({v for e in es for v in e}))
    return FanoWitness(verts, es, via)


# -- embeddings ------------------------------------------------------------------

def _search_order(F: Hypergraph3) -> list[int]:
    """Vertices of F with edges, each next one maximally attached to the prefix."""
    active = [v for v in range(F.n) if F.degree[v] > 0]
    if not active:
        return []
    order = [max(active, key=lambda v: (F.degree[v], -v))]
    rest = set(active) - set(order)
    while rest:
        placed = set(order)

        def attach(v: int) -> tuple[int, int, int]:
            closed = sum(1 for e in F.edges if v in e and sum(u in placed for u in e) == 2)
            touch = sum(F.codegree(v, u) for u in placed)
            return (closed, touch, F.degree[v])

        nxt = max(sorted(rest), key=attach)
        order.append(nxt)
        rest.remove(nxt)
    return order


def _embeddings(H: Hypergraph3, F: Hypergraph3, limit: int | None):
    order = _search_order(F)
    pos = {v: i for i, v in enumerate(order)}
    # edges of F that become checkable once order[i] is placed
    closing: list[list[Triple]] = [[] for _ in order]
    for e in F.edges:
        closing[max(pos[v] for v in e)].append(e)
    back = [[u for u in order[:i] if F.codegree(u, order[i])] for i in range(len(order))]
    # pairs whose common link pins down the image of order[i]
    pins = [[tuple(x for x in e if x != order[i]) for e in closing[i]] for i in range(len(order))]
    need = [F.degree[v] for v in order]
    rows = H.link_bits
    shadow = [0] * H.n
    for x in range(H.n):
        for r in rows[x]:
            shadow[x] |= r
    image: dict[int, int] = {}
    used = 0
    found = 0

    def rec(i: int):
        nonlocal found, used
        if i == len(order):
            found += 1
            yield dict(image)
            return
        v = order[i]
        cand = ((1 << H.n) - 1) & ~used
        for x, y in pins[i]:
            cand &= rows[image[x]][image[y]]
        for u in back[i]:
            cand &= shadow[image[u]]
        while cand:
            low = cand & -cand
            cand ^= low
            h = low.bit_length() - 1
            if H.degree[h] < need[i]:
                continue
            if any(H.codegree(image[u], h) < F.codegree(u, v) for u in back[i]):
                continue
            image[v] = h
            used |= low
            yield from rec(i + 1)
            used ^= low
            del image[v]
            if limit is not None and found >= limit:
                return

    yield from rec(0)


def find_embedding(H: Hypergraph3, F: Hypergraph3) -> dict[int, int] | None:
    """One injective map V(F) -> V(H) carrying edges(F) into edges(H)."""
    if F.n > H.n:
        return None
    for emb in _embeddings(H, F, limit=1):
        free = (h for h in range(H.n) if h not in set(emb.values()))
        for v in range(F.n):
            if v not in emb:
                emb[v] = next(free)
        return emb
    return None


def count_embeddings(H: Hypergraph3, F: Hypergraph3) -> int:
    """Labelled embeddings of the non-isolated part of F."""
    return sum(1 for _ in _embeddings(H, F, limit=None))


def count_copies(H: Hypergraph3, F: Hypergraph3) -> int:
    """Number of edge subsets of H isomorphic to F (copies, not embeddings)."""
    if F.n > H.n:
        return 0
    aut = count_embeddings(F, F)
    return count_embeddings(H, F) // aut


def contains_fano(H: Hypergraph3) -> FanoWitness | None:
    hit = kernels.find_fano(H.n, H.edge_array())
    if hit is None:
        return None
    a, b, c, d, x, y, z = hit
    return _witness([(a, b, c), (a, d, x), (b, d, y), (c, d, z), (a, y, z), (b, x, z), (c, x, y)], "search")


def fano_through_edge(H: Hypergraph3, edge: Sequence[int]) -> FanoWitness | None:
    """A Fano copy having ``edge`` as one of its lines, or None.

    With the line abc fixed, a copy is a quad d, x, y, z whose three perfect
    matchings sit in the links of a, b and c respectively; the search runs
    over d, then x, y in the links of a and b at d, and reads off z.
    """
    a, b, c = sorted(int(v) for v in edge)
    if not H.has_edge(a, b, c):
        return None
    rows = H.link_bits
    ra, rb, rc = rows[a], rows[b], rows[c]
    off = ((1 << H.n) - 1) & ~((1 << a) | (1 << b) | (1 << c))
    for d in range(H.n):
        if not off >> d & 1:
            continue
        rest = off & ~(1 << d)
        X, Y, Z = ra[d] & rest, rb[d] & rest, rc[d] & rest
        if not (X and Y and Z):
            continue
        while X:
            low = X & -X
            X ^= low
            x = low.bit_length() - 1
            ZB = Z & rb[x]
            if not ZB:
                continue
            ys = Y & rc[x]
            while ys:
                lowy = ys & -ys
                ys ^= lowy
                y = lowy.bit_length() - 1
                cand = ZB & ra[y]
                if cand:
                    z = (cand & -cand).bit_length() - 1
                    ms = (((d, x), (y, z)), ((d, y), (x, z)), ((d, z), (x, y)))
                    return fano_from_rainbow_k4(H, (a, b, c), (d, x, y, z), ms)
    return None


# -- links -------------------------------------------------------------------------

@dataclass(frozen=True)
class LinkFamily:
    apex_set: tuple[int, ...]
    links: dict[int, frozenset[Pair]]
    combined: Multigraph
    reduced: Multigraph

    def to_json(self) -> dict:
        def mg(G: Multigraph):
            return [[u, v, m] for (u, v), m in G.pairs()]

        return {
            "apexes": list(self.apex_set),
            "links": {str(x): [list(p) for p in sorted(self.links[x])] for x in self.apex_set},
            "L": mg(self.combined),
            "G": mg(self.reduced),
        }


def link_multigraph(H: Hypergraph3, S: Iterable[int]) -> Multigraph:
    mult: dict[Pair, int] = {}
    for x in S:
        for p in H.links[x]:
            mult[p] = mult.get(p, 0) + 1
    return Multigraph(H.n, mult)


def link_structures(H: Hypergraph3, S: Sequence[int]) -> LinkFamily:
    apexes = tuple(sorted(set(S)))
    if len(apexes) != 4:
        raise ValueError("apex set must have exactly four distinct vertices")
    if any(not 0 <= x < H.n for x in apexes):
        raise ValueError("apex out of range")
    L = link_multigraph(H, apexes)
    G = L.restrict(v for v in range(H.n) if v not in apexes)
    return LinkFamily(apexes, {x: H.links[x] for x in apexes}, L, G)


def find_tetrahedron(H: Hypergraph3, within: Iterable[int] | None = None) -> tuple[int, ...] | None:
    """Lexicographically least 4-set all of whose triples are edges."""
    rows = H.link_bits
    allowed = (1 << H.n) - 1
    if within is not None:
        allowed = 0
        for v in within:
            allowed |= 1 << v
    for a, b, c in H.edges:
        if not (allowed >> a & 1 and allowed >> b & 1 and allowed >> c & 1):
            continue
        cand = rows[a][b] & rows[a][c] & rows[b][c] & allowed & ~((1 << (c + 1)) - 1)
        if cand:
            return (a, b, c, (cand & -cand).bit_length() - 1)
    return None


def heavy_quadruple(G: Multigraph, within: Iterable[int] | None = None, bound: int = 21) -> tuple[int, ...] | None:
    """Lexicographically least 4-set spanning at least ``bound`` edges."""
    verts = sorted(within) if within is not None else list(range(G.n))
    if len(verts) < 4:
        return None
    return kernels.first_heavy_quadruple(G.matrix(), verts, bound)


def fk_bound(n: int) -> int:
    return 3 * comb(n, 2) + n - 2


def fk_check(G: Multigraph) -> dict:
    """Check a multigraph against the four-vertex cap of 20 and the edge bound."""
    if G.n < 4:
        raise ValueError("fk_check needs at least four vertices")
    w = heavy_quadruple(G)
    return {
        "cap20": w is None,
        "bound_holds": G.edge_count() <= fk_bound(G.n),
        "witness": w,
        "edges": G.edge_count(),
        "bound": fk_bound(G.n),
    }


# -- constructors ------------------------------------------------------------------

def perfect_matchings(quad: Sequence[int]) -> tuple[tuple[Pair, Pair], ...]:
    a, b, c, d = quad
    return (
        (_pair(a, b), _pair(c, d)),
        (_pair(a, c), _pair(b, d)),
        (_pair(a, d), _pair(b, c)),
    )


def fano_from_rainbow_k4(
    H: Hypergraph3,
    base_edge: Sequence[int],
    quad: Sequence[int],
    assignment: Sequence[Sequence[Sequence[int]]],
) -> FanoWitness:
    """Base edge {x1,x2,x3} plus {x_i} + m for every pair m of matching M_i."""
    xs = tuple(base_edge)
    if len(set(xs)) != 3:
        raise WitnessError("base edge needs three distinct vertices")
    if not H.has_edge(*xs):
        raise WitnessError(f"base edge {tuple(sorted(xs))} is not a hyperedge", tuple(sorted(xs)))
    qs = tuple(quad)
    if len(set(qs)) != 4 or set(qs) & set(xs):
        raise WitnessError("quad must be four vertices disjoint from the base edge")
    if len(assignment) != 3:
        raise WitnessError("need exactly three matchings")
    ms = [tuple(_pair(*p) for p in M) for M in assignment]
    covered = [p for M in ms for p in M]
    if sorted(covered) != sorted(_pair(u, v) for u, v in combinations(qs, 2)):
        raise WitnessError("matchings do not partition the pairs of the quad")
    for M in ms:
        if len(M) != 2 or set(M[0]) & set(M[1]):
            raise WitnessError(f"{M} is not a perfect matching of the quad")
    edges: list[Triple] = [tuple(sorted(xs))]
    for x, M in zip(xs, ms):
        for u, v in M:
            t = tuple(sorted((x, u, v)))
            if not H.has_edge(*t):
                raise WitnessError(f"triple {t} is not a hyperedge", t)
            edges.append(t)
    return _witness(edges, "rainbow-k4")


def fano_from_apex_octahedron(H: Hypergraph3, apex: int, pairs: Sequence[Sequence[int]]) -> FanoWitness:
    """Apex triples {x} + e_i and four transversals of the octahedron e1,e2,e3."""
    if len(pairs) != 3:
        raise WitnessError("need three pairs")
    (u1, w1), (u2, w2), (u3, w3) = (tuple(p) for p in pairs)
    pts = [u1, w1, u2, w2, u3, w3]
    if len(set(pts)) != 6 or apex in pts:
        raise WitnessError("pairs must be pairwise disjoint and avoid the apex")
    edges: list[Triple] = []
    for u, w in ((u1, w1), (u2, w2), (u3, w3)):
        t = tuple(sorted((apex, u, w)))
        if not H.has_edge(*t):
            raise WitnessError(f"apex triple {t} is not a hyperedge", t)
        edges.append(t)
    for x1 in (u1, w1):
        for x2 in (u2, w2):
            for x3 in (u3, w3):
                t = tuple(sorted((x1, x2, x3)))
                if not H.has_edge(*t):
                    raise WitnessError(f"transversal {t} is not a hyperedge", t)
    for t in ((u1, u2, u3), (u1, w2, w3), (w1, u2, w3), (w1, w2, u3)):
        edges.append(tuple(sorted(t)))
    return _witness(edges, "apex-octahedron")


# -- distinct representatives --------------------------------------------------------

def system_of_distinct_representatives(options: Sequence[Sequence[int]]) -> list[int] | None:
    """Kuhn's augmenting-path matching; ``options[i]`` lists admissible picks."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for x in options[i]:
            if x in seen:
                continue
            seen.add(x)
            if x not in owner or augment(owner[x], seen):
                owner[x] = i
                return True
        return False

    for i in range(len(options)):
        if not augment(i, set()):
            return None
    pick = [0] * len(options)
    for x, i in owner.items():
        pick[i] = x
    return pick


def rainbow_assignment(H: Hypergraph3, S: Sequence[int], quad: Sequence[int]):
    """Match the three perfect matchings of ``quad`` to distinct apexes of S.

    Returns ``(apexes, matchings, J)`` where J[i] is the set of apexes whose
    link holds both pairs of matching i; apexes is None when Hall fails.
    """
    links = H.links
    ms = perfect_matchings(quad)
    J = [sorted(x for x in S if all(p in links[x] for p in M)) for M in ms]
    return system_of_distinct_representatives(J), ms, J


def rainbow_witness(H: Hypergraph3, S: Sequence[int], quad: Sequence[int]) -> FanoWitness | None:
    """Fano through three apexes of the tetrahedron S and the four vertices of ``quad``."""
    pick, ms, _ = rainbow_assignment(H, S, quad)
    if pick is None:
        return None
    return fano_from_rainbow_k4(H, pick, quad, ms)


# -- multiplicity patterns ---------------------------------------------------------

PATTERNS = ("heavy_k4", "heavy_k5", "fan_432", "cross_44", "star_444")


def _labelled_patterns(m: dict[Pair, int], y: Sequence[int]) -> list[str]:
    y1, y2, y3, y4 = y

    def mu(a: int, b: int) -> int:
        return m[_pair(a, b)]

    hits = []
    if mu(y1, y2) == 4 and mu(y1, y3) == 4 and mu(y2, y3) >= 3:
        tail = sorted((mu(y1, y4), mu(y2, y4), mu(y3, y4)), reverse=True)
        if tail[0] >= 4 and tail[1] >= 3 and tail[2] >= 2:
            hits.append("fan_432")
        if mu(y1, y4) == 4 and mu(y2, y4) >= 2 and mu(y3, y4) >= 1:
            hits.append("star_444")
    if (mu(y1, y2) == 4 and mu(y3, y4) >= 2 and mu(y1, y3) >= 2 and mu(y2, y3) == 4
            and mu(y1, y4) >= 3 and mu(y2, y4) >= 3):
        hits.append("cross_44")
    return hits


def quad_patterns(G: Multigraph, quad: Sequence[int]) -> list[str]:
    """Names of the Fano-forcing multiplicity patterns present on ``quad``."""
    m = {_pair(u, v): G.m(u, v) for u, v in combinations(quad, 2)}
    vals = list(m.values())
    found = set()
    if min(vals) >= 3 and max(vals) == 4:
        found.add("heavy_k4")
    if sum(vals) >= 18:
        for y in permutations(quad):
            found.update(_labelled_patterns(m, y))
    return [p for p in PATTERNS if p in found]


def _heavy_cliques5(G: Multigraph, verts: Sequence[int]):
    """5-sets whose pairs all have multiplicity >= 3, lexicographic order."""
    nbr = {v: 0 for v in verts}
    for (u, v), mu in G.pairs():
        if mu >= 3 and u in nbr and v in nbr:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u

    def rec(clique: list[int], cand: int):
        if len(clique) == 5:
            yield tuple(clique)
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from rec(clique + [v], cand & nbr[v])

    for v in sorted(verts):
        yield from rec([v], nbr[v] & ~((1 << (v + 1)) - 1))


@dataclass(frozen=True)
class PatternHit:
    pattern: str
    vertices: tuple[int, ...]
    witness: FanoWitness


def witness_for_quad(H: Hypergraph3, S: Sequence[int], quad: Sequence[int], pattern: str) -> FanoWitness:
    w = rainbow_witness(H, S, quad)
    if w is None:
        raise PatternDefect(f"pattern {pattern} on {tuple(quad)} admits no distinct apex assignment")
    return w


def scan_patterns(H: Hypergraph3, S: Sequence[int], quads: Iterable[Sequence[int]] | None = None) -> PatternHit | None:
    """First multiplicity pattern in G(S), with its witness."""
    fam = link_structures(H, S)
    G = fam.reduced
    rest = [v for v in range(H.n) if v not in fam.apex_set]
    if quads is None:
        quads = combinations(rest, 4)
    checked = []
    for q in quads:
        q = tuple(q)
        checked.append(q)
        pats = quad_patterns(G, q)
        if pats:
            return PatternHit(pats[0], q, witness_for_quad(H, fam.apex_set, q, pats[0]))
    for k5 in _heavy_cliques5(G, rest):
        for q in combinations(k5, 4):
            w = rainbow_witness(H, fam.apex_set, q)
            if w is not None:
                return PatternHit("heavy_k5", k5, w)
        raise PatternDefect(f"heavy K5 on {k5} yields no rainbow quad")
    return None


def pattern_scan(H: Hypergraph3, S: Sequence[int], quads: Iterable[Sequence[int]] | None = None) -> FanoWitness | None:
    """Fano witness from the first Fano-forcing multiplicity pattern in G(S).

    ``S`` must span a tetrahedron in H.
    """
    S = tuple(sorted(S))
    for t in combinations(S, 3):
        if not H.has_edge(*t):
            raise ValueError(f"S does not span a tetrahedron: {t} missing")
    hit = scan_patterns(H, S, quads)
    return None if hit is None else hit.witness


# -- minimal pattern instances -------------------------------------------------------

# pair multiplicities on y1..y4 (heavy_k5 uses five vertices, all pairs 3)
_PATTERN_MULTS = {
    "heavy_k4": {(0, 1): 4, (0, 2): 3, (0, 3): 3, (1, 2): 3, (1, 3): 3, (2, 3): 3},
    "fan_432": {(0, 1): 4, (0, 2): 4, (1, 2): 3, (0, 3): 2, (1, 3): 3, (2, 3): 4},
    "cross_44": {(0, 1): 4, (2, 3): 2, (0, 2): 2, (1, 2): 4, (0, 3): 3, (1, 3): 3},
    "star_444": {(0, 1): 4, (0, 2): 4, (1, 2): 3, (0, 3): 4, (1, 3): 2, (2, 3): 1},
}


def pattern_instance(name: str) -> tuple[Hypergraph3, tuple[int, ...], tuple[int, ...]]:
    """Smallest host realizing one multiplicity pattern: ``(H, S, Y)``.

    S = {0,1,2,3} spans a tetrahedron; Y holds the pattern in G(S).  A pair
    of multiplicity m (its k-th in lexicographic order) lies in the links
    of apexes k, k+1, ..., k+m-1 (mod 4), so the apex sets differ from pair
    to pair and the matching step has real work to do.
    """
    if name == "heavy_k5":
        size = 5
        mults = {p: 3 for p in combinations(range(5), 2)}
    elif name in _PATTERN_MULTS:
        size = 4
        mults = _PATTERN_MULTS[name]
    else:
        raise ValueError(f"unknown pattern {name!r}; expected one of {PATTERNS}")
    S = (0, 1, 2, 3)
    Y = tuple(range(4, 4 + size))
    edges = set(combinations(S, 3))
    for k, (i, j) in enumerate(sorted(mults)):
        for step in range(mults[(i, j)]):
            edges.add(tuple(sorted((S[(k + step) % 4], Y[i], Y[j]))))
    return Hypergraph3(4 + size, sorted(edges)), S, Y
