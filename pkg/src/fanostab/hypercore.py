"""Core data model: 3-uniform hypergraphs, loopless multigraphs, generators
and the plain-text file formats.

Vertices are dense 0-based integers.  Edges are stored as sorted triples; a
pair -> codegree index is built at construction time because almost every
downstream routine (links, detection, peeling) is pair-centric.
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

Triple = tuple[int, int, int]
Pair = tuple[int, int]

FANO_LINES: tuple[Triple, ...] = (
    (0, 1, 2), (0, 3, 4), (0, 5, 6),
    (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5),
)
FANO_AUTOMORPHISMS = 168


class FormatError(ValueError):
    """Malformed hypergraph or multigraph text; carries the 1-based line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"{message}, line {line}")
        self.line = line


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def _edge_rows(edges) -> np.ndarray:
    if isinstance(edges, np.ndarray):
        rows = np.array(edges, dtype=np.int64)
    else:
        items = [tuple(e) for e in edges]
        for e in items:
            if len(e) != 3:
                raise ValueError(f"not a 3-set of distinct vertices: {e!r}")
        rows = np.array(items, dtype=np.int64)
    return rows.reshape(-1, 3)


def _triples(n: int) -> np.ndarray:
    """All 3-subsets of range(n) as sorted rows, lexicographic."""
    i, j, k = np.ogrid[:n, :n, :n]
    return np.argwhere((i < j) & (j < k)).astype(np.int64)


class Hypergraph3:
    """A 3-uniform hypergraph on vertices ``0 .. n-1``.

    Instances are treated as immutable.  ``degree`` and ``codegree`` are
    computed eagerly; link graphs lazily.
    """

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        raw = _edge_rows(edges)
        arr = raw
        if not ((raw[:, 0] < raw[:, 1]) & (raw[:, 1] < raw[:, 2])).all():
            arr = np.sort(raw, axis=1)
        bad = (arr[:, 0] == arr[:, 1]) | (arr[:, 1] == arr[:, 2])
        if bad.any():
            raise ValueError(f"not a 3-set of distinct vertices: {tuple(raw[bad.argmax()].tolist())!r}")
        bad = (arr[:, 0] < 0) | (arr[:, 2] >= n)
        if bad.any():
            raise ValueError(f"vertex out of range in {tuple(raw[bad.argmax()].tolist())!r}")
        keys = (arr[:, 0] * n + arr[:, 1]) * n + arr[:, 2]
        if not (keys[1:] > keys[:-1]).all():
            order = np.argsort(keys, kind="stable")
            keys = keys[order]
            arr = arr[order]
            dup = keys[1:] == keys[:-1]
            if dup.any():
                raise ValueError(f"duplicate triple {tuple(arr[dup.argmax()].tolist())}")
        self._arr = arr
        self.degree: tuple[int, ...] = tuple(np.bincount(arr.ravel(), minlength=n).tolist()) if n else ()
        cnt = np.zeros(n * n, dtype=np.int64)
        for i, j in ((0, 1), (0, 2), (1, 2)):
            cnt += np.bincount(arr[:, i] * n + arr[:, j], minlength=n * n)
        nz = np.flatnonzero(cnt)
        self._codeg: dict[Pair, int] = {divmod(k, n): c for k, c in zip(nz.tolist(), cnt[nz].tolist())}

    @cached_property
    def edges(self) -> tuple[Triple, ...]:
        """Sorted tuple of sorted triples."""
        return tuple(map(tuple, self._arr.tolist()))

    @cached_property
    def _edge_set(self) -> frozenset[Triple]:
        return frozenset(self.edges)

    def __repr__(self) -> str:
        return f"Hypergraph3(n={self.n}, edges={len(self.edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph3):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._arr, other._arr)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __len__(self) -> int:
        return len(self._arr)

    def __contains__(self, triple: Sequence[int]) -> bool:
        return tuple(sorted(triple)) in self._edge_set

    def has_edge(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self._edge_set

    def codegree(self, u: int, v: int) -> int:
        return self._codeg.get(_pair(u, v), 0)

    @property
    def codegrees(self) -> dict[Pair, int]:
        return dict(self._codeg)

    @cached_property
    def links(self) -> tuple[frozenset[Pair], ...]:
        """``links[x]`` is the edge set of the link graph L(x)."""
        out: list[set[Pair]] = [set() for _ in range(self.n)]
        for a, b, c in self.edges:
            out[a].add((b, c))
            out[b].add((a, c))
            out[c].add((a, b))
        return tuple(frozenset(s) for s in out)

    @cached_property
    def link_bits(self) -> tuple[tuple[int, ...], ...]:
        """``link_bits[x][u]`` is the neighbourhood of u in L(x) as a bitmask."""
        rows = [[0] * self.n for _ in range(self.n)]
        for a, b, c in self.edges:
            rows[a][b] |= 1 << c
            rows[a][c] |= 1 << b
            rows[b][a] |= 1 << c
            rows[b][c] |= 1 << a
            rows[c][a] |= 1 << b
            rows[c][b] |= 1 << a
        return tuple(tuple(r) for r in rows)

    def edge_array(self) -> np.ndarray:
        return self._arr.copy()

    def vertices(self) -> range:
        return range(self.n)


class Multigraph:
    """Loopless multigraph; only pairs with positive multiplicity are stored."""

    __slots__ = ("n", "_mult")

    def __init__(self, n: int, mult: dict[Pair, int] | Iterable[tuple[int, int, int]] = ()):
        self.n = n
        items = mult.items() if isinstance(mult, dict) else (((u, v), m) for u, v, m in mult)
        store: dict[Pair, int] = {}
        for (u, v), m in items:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"vertex out of range in pair {(u, v)}")
            if m < 0:
                raise ValueError("negative multiplicity")
            if m:
                p = _pair(u, v)
                store[p] = store.get(p, 0) + m
        self._mult = store

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, e={self.edge_count()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self._mult == other._mult

    def m(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self._mult.get(_pair(u, v), 0)

    @property
    def mult(self) -> dict[Pair, int]:
        return dict(self._mult)

    def pairs(self) -> Iterator[tuple[Pair, int]]:
        yield from sorted(self._mult.items())

    def edge_count(self) -> int:
        return sum(self._mult.values())

    def degree(self, v: int) -> int:
        return sum(m for (a, b), m in self._mult.items() if a == v or b == v)

    def degrees(self) -> list[int]:
        out = [0] * self.n
        for (a, b), m in self._mult.items():
            out[a] += m
            out[b] += m
        return out

    def span(self, vs: Sequence[int]) -> int:
        """Total multiplicity of the pairs inside ``vs``."""
        return sum(self.m(u, v) for u, v in combinations(vs, 2))

    def matrix(self) -> np.ndarray:
        M = np.zeros((self.n, self.n), dtype=np.int64)
        for (a, b), m in self._mult.items():
            M[a, b] = M[b, a] = m
        return M

    def restrict(self, keep: Iterable[int]) -> "Multigraph":
        """Same labels, pairs touching vertices outside ``keep`` dropped."""
        ks = set(keep)
        return Multigraph(self.n, {p: m for p, m in self._mult.items() if p[0] in ks and p[1] in ks})


# -- generators --------------------------------------------------------------

def fano() -> Hypergraph3:
    return Hypergraph3(7, FANO_LINES)


def complete(n: int) -> Hypergraph3:
    if n < 3:
        raise ValueError("complete(n) needs n >= 3")
    return Hypergraph3(n, _triples(n))


def bn_parts(n: int) -> tuple[list[int], list[int]]:
    """Part 0 takes the low labels ``0 .. ceil(n/2)-1``."""
    h = (n + 1) // 2
    return list(range(h)), list(range(h, n))


def bn(n: int) -> Hypergraph3:
    """Balanced complete bipartite 3-graph: every triple meeting both parts."""
    if n < 3:
        raise ValueError("bn(n) needs n >= 3")
    h = (n + 1) // 2
    T = _triples(n)
    return Hypergraph3(n, T[(T[:, 0] < h) & (T[:, 2] >= h)])


def tetrahedron() -> Hypergraph3:
    return complete(4)


def octahedron() -> Hypergraph3:
    return Hypergraph3(6, ((i, j, k) for i in (0, 1) for j in (2, 3) for k in (4, 5)))


GENERATORS = {
    "fano": (fano, False),
    "complete": (complete, True),
    "bn": (bn, True),
    "tetrahedron": (tetrahedron, False),
    "octahedron": (octahedron, False),
}


def generate(kind: str, n: int | None = None) -> Hypergraph3:
    """Canonical labelled instance of ``kind``; sized kinds need ``n``."""
    try:
        fn, sized = GENERATORS[kind]
    except KeyError:
        raise ValueError(f"unknown kind {kind!r}; expected one of {sorted(GENERATORS)}") from None
    if sized:
        if n is None:
            raise ValueError(f"{kind} needs a vertex count")
        return fn(n)
    return fn()


# -- basic statistics ----------------------------------------------------------

def ex_fano(n: int) -> int:
    """Exact Turan number of the Fano plane; only asserted for n >= 8."""
    if n < 8:
        raise ValueError("ex_fano is only valid for n >= 8")
    lo, hi = n // 2, (n + 1) // 2
    return comb(lo, 2) * hi + comb(hi, 2) * lo


def edges_within(H: Hypergraph3, A: Iterable[int]) -> int:
    inside = set(A)
    return sum(1 for a, b, c in H.edges if a in inside and b in inside and c in inside)


def degree_profile(H: Hypergraph3) -> dict:
    degs = list(H.degree)
    return {
        "degrees": degs,
        "min_degree": min(degs) if degs else 0,
        "codegree": H.codegree,
    }


def is_linear(H: Hypergraph3) -> bool:
    return all(c <= 1 for c in H._codeg.values())


def induced(H: Hypergraph3, A: Iterable[int]) -> tuple[Hypergraph3, dict[int, int]]:
    """Induced subhypergraph relabelled to ``0 .. |A|-1`` plus the old->new map."""
    verts = sorted(set(A))
    for v in verts:
        if not 0 <= v < H.n:
            raise ValueError(f"vertex {v} out of range")
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [
        (relabel[a], relabel[b], relabel[c])
        for a, b, c in H.edges
        if a in relabel and b in relabel and c in relabel
    ]
    return Hypergraph3(len(verts), edges), relabel


def delete_vertices(H: Hypergraph3, drop: Iterable[int]) -> Hypergraph3:
    """Remove every edge touching ``drop`` but keep the labels."""
    d = set(drop)
    return Hypergraph3(H.n, (e for e in H.edges if not (e[0] in d or e[1] in d or e[2] in d)))


# -- text formats ----------------------------------------------------------------

def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield lineno, s.split()


def _read_count(lines: Iterator[tuple[int, list[str]]]) -> int:
    try:
        lineno, head = next(lines)
    except StopIteration:
        raise FormatError("missing vertex count", 1) from None
    if len(head) != 1 or not head[0].isdigit():
        raise FormatError("expected a single non-negative vertex count", lineno)
    return int(head[0])


def parse(text: str) -> Hypergraph3:
    lines = _content_lines(text)
    n = _read_count(lines)
    seen: set[Triple] = set()
    for lineno, tok in lines:
        if len(tok) != 3:
            raise FormatError("expected three vertex indices", lineno)
        try:
            t = tuple(int(x) for x in tok)
        except ValueError:
            raise FormatError("non-integer vertex index", lineno) from None
        if any(v < 0 or v >= n for v in t):
            raise FormatError("vertex out of range", lineno)
        if len(set(t)) != 3:
            raise FormatError("repeated vertex in triple", lineno)
        key = tuple(sorted(t))
        if key in seen:
            raise FormatError("duplicate triple", lineno)
        seen.add(key)
    return Hypergraph3(n, seen)


def serialize(H: Hypergraph3) -> str:
    out = [str(H.n)]
    out.extend(f"{a} {b} {c}" for a, b, c in H.edges)
    return "\n".join(out) + "\n"


def parse_multigraph(text: str) -> Multigraph:
    lines = _content_lines(text)
    n = _read_count(lines)
    mult: dict[Pair, int] = {}
    for lineno, tok in lines:
        if len(tok) != 3:
            raise FormatError("expected 'u v m'", lineno)
        try:
            u, v, m = (int(x) for x in tok)
        except ValueError:
            raise FormatError("non-integer field", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError("vertex out of range", lineno)
        if u == v:
            raise FormatError("loop", lineno)
        if m < 1:
            raise FormatError("multiplicity must be >= 1", lineno)
        p = _pair(u, v)
        if p in mult:
            raise FormatError("duplicate pair", lineno)
        mult[p] = m
    return Multigraph(n, mult)


def serialize_multigraph(G: Multigraph) -> str:
    out = [str(G.n)]
    out.extend(f"{u} {v} {m}" for (u, v), m in G.pairs())
    return "\n".join(out) + "\n"
