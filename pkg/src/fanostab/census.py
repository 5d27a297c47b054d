"""Octahedron census: 4-cycles in link graphs and copies of K(2,2,2).

An octahedron with pair classes {u,v}, {a,b}, {c,d} is the same thing as a
4-cycle a-c-b-d shared by the link graphs of u and v.  Summing shared
4-cycles over all vertex pairs therefore sees every octahedron three times,
once per class.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from fanostab import kernels
from fanostab.hypercore import Hypergraph3, induced

C_PRIME = Fraction(3**7, 2**11)


def binom2(y) -> Fraction:
    """Real binomial coefficient y(y-1)/2."""
    y = Fraction(y)
    return y * (y - 1) / 2


def count_c4(edges: Iterable[Sequence[int]], n: int | None = None) -> int:
    """Number of 4-cycles in a simple graph via common-neighbour pairs."""
    pairs = [tuple(sorted((int(u), int(v)))) for u, v in edges]
    if n is None:
        n = 1 + max((v for p in pairs for v in p), default=-1)
    return kernels.c4_count(n, pairs) if pairs else 0


def octahedron_triple_total(H: Hypergraph3) -> int:
    """Sum over vertex pairs of the 4-cycles their link graphs share."""
    if H.n < 6 or len(H.edges) < 8:
        return 0
    return kernels.octahedron_pair_total(H.n, H.edge_array())


def count_octahedra(H: Hypergraph3) -> int:
    total = octahedron_triple_total(H)
    q, r = divmod(total, 3)
    if r:
        raise AssertionError(f"shared 4-cycle total {total} not divisible by 3")
    return q


def _pairings(six: Sequence[int]):
    a = six[0]
    for i in range(1, 6):
        b = six[i]
        rest = [v for v in six[1:] if v != b]
        c = rest[0]
        for j in range(1, 4):
            d = rest[j]
            e, f = [v for v in rest[1:] if v != d]
            yield ((a, b), (c, d), (e, f))


def oracle_count_octahedra(H: Hypergraph3) -> int:
    """Brute force: every 6-set, each of its 15 pairings, all 8 transversals."""
    count = 0
    for six in combinations(range(H.n), 6):
        for (a, b), (c, d), (e, f) in _pairings(six):
            if all(H.has_edge(x, y, z) for x in (a, b) for y in (c, d) for z in (e, f)):
                count += 1
    return count


@dataclass(frozen=True)
class C4Census:
    """Per-apex 4-cycle counts and per-(quad, diagonal split) apex counts.

    ``by_split[(quad, ((a, b), (c, d)))]`` counts apexes whose link graph holds
    the 4-cycle a-c-b-d, i.e. with diagonals {a,b} and {c,d}.
    """

    per_apex: tuple[int, ...]
    by_split: dict

    def shared_pair_total(self) -> int:
        return sum(k * (k - 1) // 2 for k in self.by_split.values())


def _splits(q):
    a, b, c, d = q
    return (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c)))


def c4_census(H: Hypergraph3) -> C4Census:
    """Enumerate 4-cycles of every link graph directly (small n only)."""
    per_apex = []
    by_split: dict = {}
    for v in range(H.n):
        L = H.links[v]
        verts = sorted({u for p in L for u in p})
        cnt = 0
        for q in combinations(verts, 4):
            for (a, b), (c, d) in _splits(q):
                if (min(a, c), max(a, c)) in L and (min(c, b), max(c, b)) in L \
                        and (min(b, d), max(b, d)) in L and (min(a, d), max(a, d)) in L:
                    cnt += 1
                    key = (q, ((a, b), (c, d)))
                    by_split[key] = by_split.get(key, 0) + 1
        per_apex.append(cnt)
    return C4Census(tuple(per_apex), by_split)


@dataclass(frozen=True)
class PeelResult:
    survivor: Hypergraph3
    kept: tuple[int, ...]
    deleted: tuple[int, ...]


def peel_low_degree(H: Hypergraph3, threshold=None) -> PeelResult:
    """Repeatedly drop the least-indexed vertex of degree <= threshold.

    ``threshold=None`` means n**1.5 for the original n, tested exactly as
    d*d <= n**3.  Degrees are recomputed after each deletion.
    """
    n = H.n
    if threshold is None:
        n3 = n ** 3

        def low(d: int) -> bool:
            return d * d <= n3
    else:
        t = Fraction(threshold)
        if t < 0:
            raise ValueError("threshold must be non-negative")

        def low(d: int) -> bool:
            return d <= t

    deg = list(H.degree)
    alive = [True] * n
    incident: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for e in H.edges:
        for v in e:
            incident[v].append(e)
    deleted = []
    while True:
        victim = next((v for v in range(n) if alive[v] and low(deg[v])), None)
        if victim is None:
            break
        alive[victim] = False
        deleted.append(victim)
        for e in incident[victim]:
            if all(alive[u] or u == victim for u in e):
                for u in e:
                    if u != victim:
                        deg[u] -= 1
    kept = [v for v in range(n) if alive[v]]
    survivor, _ = induced(H, kept)
    return PeelResult(survivor, tuple(kept), tuple(deleted))


def octahedron_bound(alpha, n: int) -> Fraction:
    """Exact lower bound (3^7/2^11) * alpha^8 * n^6 on the octahedron count."""
    a = Fraction(alpha)
    if not 0 < a < Fraction(1, 6):
        raise ValueError("alpha must lie strictly between 0 and 1/6")
    return C_PRIME * a**8 * n**6


def empirical_check(H: Hypergraph3, count: int | None = None) -> dict:
    """Compare the octahedron count of H with the bound at alpha = |E|/n^3.

    The bound is only promised for n >= 4/alpha^2; below that guard the
    comparison is informational.
    """
    n = H.n
    alpha = Fraction(len(H.edges), n**3) if n else Fraction(0)
    applicable = 0 < alpha < Fraction(1, 6)
    if count is None:
        count = count_octahedra(H)
    out = {
        "n": n,
        "edges": len(H.edges),
        "alpha": alpha,
        "octahedra": count,
        "applicable": applicable,
    }
    if applicable:
        bound = octahedron_bound(alpha, n)
        guard = 4 / alpha**2
        out.update(
            bound=bound,
            margin=count - bound,
            holds=count >= bound,
            guard_n=guard,
            guard_met=n >= guard,
        )
    return out
