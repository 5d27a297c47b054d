"""Pure-Python kernels.  Same signatures as the compiled ``_ckernels``.

Neighbourhoods are Python ints used as bitsets; ``int.bit_count`` does the
popcounts.
"""
from __future__ import annotations

from itertools import combinations


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _link_rows(n, edges):
    rows = [[0] * n for _ in range(n)]
    for a, b, c in edges:
        a, b, c = int(a), int(b), int(c)
        rows[a][b] |= 1 << c
        rows[a][c] |= 1 << b
        rows[b][a] |= 1 << c
        rows[b][c] |= 1 << a
        rows[c][a] |= 1 << b
        rows[c][b] |= 1 << a
    return rows


def _c4_from_rows(nbr):
    total = 0
    active = [v for v, x in enumerate(nbr) if x]
    for i, a in enumerate(active):
        na = nbr[a]
        for b in active[i + 1:]:
            k = (na & nbr[b]).bit_count()
            total += k * (k - 1) // 2
    return total // 2


def c4_count(n, pairs, threads=1):
    nbr = [0] * n
    for u, v in pairs:
        u, v = int(u), int(v)
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    return _c4_from_rows(nbr)


def octahedron_pair_total(n, edges, threads=1):
    """Sum over vertex pairs {u, v} of the 4-cycles shared by L(u) and L(v).

    Each octahedron is seen once from each of its three pair classes.
    """
    rows = _link_rows(n, edges)
    total = 0
    for u in range(n):
        ru = rows[u]
        if not any(ru):
            continue
        for v in range(u + 1, n):
            rv = rows[v]
            mask = ~((1 << u) | (1 << v))
            common = [(ru[a] & rv[a] & mask) if a != u and a != v else 0 for a in range(n)]
            total += _c4_from_rows(common)
    return total


def find_fano(n, edges):
    """First Fano copy as (a, b, c, d, x, y, z), lines
    abc, adx, bdy, cdz, ayz, bxz, cxy; or None.

    Every copy is reached from exactly the lines abc through its least
    vertex a, with d the least point off that line; x, y, z are then forced
    and all exceed d.  So the search is exhaustive while skipping the other
    27 (line, point) choices per copy.
    """
    rows = _link_rows(n, edges)
    for a, b, c in sorted(tuple(sorted(map(int, e))) for e in edges):
        ra, rb, rc = rows[a], rows[b], rows[c]
        base = (1 << a) | (1 << b) | (1 << c)
        for d in range(a + 1, n):
            if base >> d & 1:
                continue
            keep = ~(base | ((1 << (d + 1)) - 1))
            X = ra[d] & keep
            Y = rb[d] & keep
            Z = rc[d] & keep
            if not (X and Y and Z):
                continue
            for x in _bits(X):
                ZB = Z & rb[x]
                if not ZB:
                    continue
                for y in _bits(Y & rc[x]):
                    cand = ZB & ra[y]
                    if cand:
                        z = (cand & -cand).bit_length() - 1
                        return (a, b, c, d, x, y, z)
    return None


def first_heavy_triple(M, vertices, bound):
    vs = [int(v) for v in vertices]
    for p, q, r in combinations(vs, 3):
        if M[p][q] + M[p][r] + M[q][r] >= bound:
            return (p, q, r)
    return None


def first_heavy_quadruple(M, vertices, bound):
    vs = [int(v) for v in vertices]
    rows = [[int(M[a][b]) for b in range(len(M))] for a in range(len(M))]
    top = 3 * max((max(r) for r in rows), default=0)
    for i, a in enumerate(vs):
        ra = rows[a]
        for j in range(i + 1, len(vs)):
            b = vs[j]
            s1 = ra[b]
            rb = rows[b]
            for k in range(j + 1, len(vs)):
                c = vs[k]
                rc = rows[c]
                s2 = s1 + ra[c] + rb[c]
                if s2 + top < bound:
                    continue
                for l in range(k + 1, len(vs)):
                    d = vs[l]
                    if s2 + ra[d] + rb[d] + rc[d] >= bound:
                        return (a, b, c, d)
    return None
