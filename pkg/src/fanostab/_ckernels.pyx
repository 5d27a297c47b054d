# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""
import numpy as np
cimport numpy as cnp
from cython.parallel cimport prange
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _words(Py_ssize_t n) nogil:
    return <int>((n + 63) >> 6)


cdef inline void _setbit(uint64_t* row, Py_ssize_t v) nogil:
    row[v >> 6] |= (<uint64_t>1) << (v & 63)


cdef inline bint _getbit(const uint64_t* row, Py_ssize_t v) nogil:
    return (row[v >> 6] >> (v & 63)) & 1


cdef inline int64_t _pop_and(const uint64_t* x, const uint64_t* y, int w) nogil:
    cdef int64_t s = 0
    cdef int i
    for i in range(w):
        s += __builtin_popcountll(x[i] & y[i])
    return s


cdef inline bint _nonzero(const uint64_t* x, int w) nogil:
    cdef int i
    for i in range(w):
        if x[i]:
            return True
    return False


cdef int64_t _c4_rows(const uint64_t* nbr, Py_ssize_t n, int w) nogil:
    cdef Py_ssize_t a, b
    cdef int64_t k, total = 0
    for a in range(n):
        if not _nonzero(nbr + a * w, w):
            continue
        for b in range(a + 1, n):
            k = _pop_and(nbr + a * w, nbr + b * w, w)
            total += k * (k - 1) // 2
    return total // 2


cdef uint64_t* _link_rows(Py_ssize_t n, int w, const int64_t[:, ::1] E) nogil:
    """rows[(x*n + u)*w ...] = neighbourhood of u in L(x)."""
    cdef uint64_t* rows = <uint64_t*>malloc(n * n * w * sizeof(uint64_t))
    cdef Py_ssize_t i, a, b, c
    if rows == NULL:
        return NULL
    for i in range(n * n * w):
        rows[i] = 0
    for i in range(E.shape[0]):
        a = E[i, 0]; b = E[i, 1]; c = E[i, 2]
        _setbit(rows + (a * n + b) * w, c)
        _setbit(rows + (a * n + c) * w, b)
        _setbit(rows + (b * n + a) * w, c)
        _setbit(rows + (b * n + c) * w, a)
        _setbit(rows + (c * n + a) * w, b)
        _setbit(rows + (c * n + b) * w, a)
    return rows


def c4_count(Py_ssize_t n, pairs, int threads=1):
    cdef int64_t[:, ::1] P = np.ascontiguousarray(pairs, dtype=np.int64).reshape(-1, 2)
    cdef int w = _words(n)
    cdef uint64_t* nbr = <uint64_t*>malloc((n * w + 1) * sizeof(uint64_t))
    cdef Py_ssize_t i, u, v
    cdef int64_t total
    if nbr == NULL:
        raise MemoryError()
    for i in range(n * w):
        nbr[i] = 0
    for i in range(P.shape[0]):
        u = P[i, 0]; v = P[i, 1]
        _setbit(nbr + u * w, v)
        _setbit(nbr + v * w, u)
    with nogil:
        total = _c4_rows(nbr, n, w)
    free(nbr)
    return int(total)


cdef int64_t _pair_c4(const uint64_t* rows, Py_ssize_t n, int w, Py_ssize_t u) nogil:
    """Sum over v > u of the 4-cycles common to L(u) and L(v)."""
    cdef uint64_t* common = <uint64_t*>malloc((n * w + 1) * sizeof(uint64_t))
    cdef Py_ssize_t v, a, i
    cdef int64_t total = 0
    cdef const uint64_t* ru
    cdef const uint64_t* rv
    if common == NULL:
        return -1
    for v in range(u + 1, n):
        for a in range(n):
            ru = rows + (u * n + a) * w
            rv = rows + (v * n + a) * w
            for i in range(w):
                common[a * w + i] = ru[i] & rv[i]
            common[a * w + (u >> 6)] &= ~((<uint64_t>1) << (u & 63))
            common[a * w + (v >> 6)] &= ~((<uint64_t>1) << (v & 63))
        for i in range(w):
            common[u * w + i] = 0
            common[v * w + i] = 0
        total += _c4_rows(common, n, w)
    free(common)
    return total


def octahedron_pair_total(Py_ssize_t n, edges, int threads=1):
    cdef int64_t[:, ::1] E = np.ascontiguousarray(edges, dtype=np.int64).reshape(-1, 3)
    cdef int w = _words(n)
    cdef uint64_t* rows
    cdef Py_ssize_t u
    cdef int64_t total = 0, part
    cdef bint failed = False
    if n < 6:
        return 0
    with nogil:
        rows = _link_rows(n, w, E)
    if rows == NULL:
        raise MemoryError()
    with nogil:
        for u in prange(n, schedule="dynamic", num_threads=max(threads, 1)):
            part = _pair_c4(rows, n, w, u)
            if part < 0:
                failed = True
            else:
                total += part
    free(rows)
    if failed:
        raise MemoryError()
    return int(total)


cdef bint _fano_search(const uint64_t* rows, Py_ssize_t n, int w, const int64_t[:, ::1] E,
                       uint64_t* scratch, Py_ssize_t* out) nogil:
    """Search order and symmetry breaking as in ``_pykernels.find_fano``."""
    cdef uint64_t* X = scratch
    cdef uint64_t* Y = scratch + w
    cdef uint64_t* Z = scratch + 2 * w
    cdef uint64_t* ZB = scratch + 3 * w
    cdef uint64_t* keep = scratch + 4 * w
    cdef uint64_t bx, by, cand, any_x, any_y, any_z
    cdef Py_ssize_t i, j, a, b, c, d, x, y, wx, wy
    for i in range(E.shape[0]):
        a = E[i, 0]; b = E[i, 1]; c = E[i, 2]
        for d in range(a + 1, n):
            if d == b or d == c:
                continue
            any_x = 0
            any_y = 0
            any_z = 0
            for j in range(w):
                if (j + 1) * 64 <= d + 1:
                    keep[j] = 0
                elif j * 64 > d:
                    keep[j] = ~(<uint64_t>0)
                else:
                    keep[j] = ~(<uint64_t>0) << ((d + 1) - j * 64)
            keep[b >> 6] &= ~((<uint64_t>1) << (b & 63))
            keep[c >> 6] &= ~((<uint64_t>1) << (c & 63))
            for j in range(w):
                X[j] = rows[(a * n + d) * w + j] & keep[j]
                Y[j] = rows[(b * n + d) * w + j] & keep[j]
                Z[j] = rows[(c * n + d) * w + j] & keep[j]
                any_x |= X[j]
                any_y |= Y[j]
                any_z |= Z[j]
            if not (any_x and any_y and any_z):
                continue
            for wx in range(w):
                bx = X[wx]
                while bx:
                    x = wx * 64 + __builtin_ctzll(bx)
                    bx &= bx - 1
                    any_x = 0
                    for j in range(w):
                        ZB[j] = Z[j] & rows[(b * n + x) * w + j]
                        any_x |= ZB[j]
                    if not any_x:
                        continue
                    for wy in range(w):
                        by = Y[wy] & rows[(c * n + x) * w + wy]
                        while by:
                            y = wy * 64 + __builtin_ctzll(by)
                            by &= by - 1
                            for j in range(w):
                                cand = ZB[j] & rows[(a * n + y) * w + j]
                                if cand:
                                    out[0] = a; out[1] = b; out[2] = c; out[3] = d
                                    out[4] = x; out[5] = y; out[6] = j * 64 + __builtin_ctzll(cand)
                                    return True
    return False


def find_fano(Py_ssize_t n, edges):
    cdef int64_t[:, ::1] E = np.ascontiguousarray(
        sorted(tuple(sorted(int(x) for x in e)) for e in np.asarray(edges).reshape(-1, 3).tolist()),
        dtype=np.int64).reshape(-1, 3)
    cdef int w = _words(n)
    cdef uint64_t* rows
    cdef uint64_t* scratch
    cdef Py_ssize_t out[7]
    cdef bint found
    if n < 7:
        return None
    rows = _link_rows(n, w, E)
    scratch = <uint64_t*>malloc(5 * w * sizeof(uint64_t))
    if rows == NULL or scratch == NULL:
        free(rows)
        free(scratch)
        raise MemoryError()
    with nogil:
        found = _fano_search(rows, n, w, E, scratch, out)
    free(rows)
    free(scratch)
    if not found:
        return None
    return tuple(int(out[k]) for k in range(7))


def first_heavy_triple(M, vertices, int64_t bound):
    cdef int64_t[:, ::1] A = np.ascontiguousarray(M, dtype=np.int64)
    cdef int64_t[::1] vs = np.ascontiguousarray(vertices, dtype=np.int64)
    cdef Py_ssize_t i, j, k, m = vs.shape[0]
    cdef int64_t s
    for i in range(m):
        for j in range(i + 1, m):
            s = A[vs[i], vs[j]]
            for k in range(j + 1, m):
                if s + A[vs[i], vs[k]] + A[vs[j], vs[k]] >= bound:
                    return (int(vs[i]), int(vs[j]), int(vs[k]))
    return None


def first_heavy_quadruple(M, vertices, int64_t bound):
    cdef int64_t[:, ::1] A = np.ascontiguousarray(M, dtype=np.int64)
    cdef int64_t[::1] vs = np.ascontiguousarray(vertices, dtype=np.int64)
    cdef Py_ssize_t i, j, k, l, m = vs.shape[0]
    cdef int64_t s1, s2, top = 0
    if A.shape[0]:
        top = 3 * int(np.max(M))
    for i in range(m):
        for j in range(i + 1, m):
            s1 = A[vs[i], vs[j]]
            for k in range(j + 1, m):
                s2 = s1 + A[vs[i], vs[k]] + A[vs[j], vs[k]]
                if s2 + top < bound:
                    continue
                for l in range(k + 1, m):
                    if s2 + A[vs[i], vs[l]] + A[vs[j], vs[l]] + A[vs[k], vs[l]] >= bound:
                        return (int(vs[i]), int(vs[j]), int(vs[k]), int(vs[l]))
    return None
