# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exponent-vector kernels. Same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, realloc, free, qsort
from libc.string cimport memcmp

BACKEND = "cython"

# qsort has no context argument; the GIL serialises access to these
cdef int *_sort_buf
cdef long *_sort_deg
cdef int _sort_n


cdef int _cmp_grlex(const void *pa, const void *pb) noexcept nogil:
    cdef int ia = (<const int *>pa)[0]
    cdef int ib = (<const int *>pb)[0]
    cdef long da = _sort_deg[ia]
    cdef long db = _sort_deg[ib]
    cdef int *ra
    cdef int *rb
    cdef int i
    if da != db:
        return -1 if da < db else 1
    ra = _sort_buf + <long>ia * _sort_n
    rb = _sort_buf + <long>ib * _sort_n
    for i in range(_sort_n):
        if ra[i] != rb[i]:
            return -1 if ra[i] > rb[i] else 1
    return 0


cdef inline bint _divides(const int *g, const int *u, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        if g[i] > u[i]:
            return False
    return True


cdef int *_alloc(long count) except NULL:
    cdef int *p = <int *>malloc(sizeof(int) * (count if count > 0 else 1))
    if p == NULL:
        raise MemoryError()
    return p


cdef int *_grow(int *p, long count) except NULL:
    cdef int *q = <int *>realloc(p, sizeof(int) * (count if count > 0 else 1))
    if q == NULL:
        raise MemoryError()  # p is still owned by the caller
    return q


cdef int *_pack(gens, int n, long *count) except NULL:
    cdef long N = len(gens)
    cdef int *buf = _alloc(N * n)
    cdef long j = 0
    cdef int i
    try:
        for g in gens:
            if len(g) != n:
                raise ValueError("exponent vectors of different lengths")
            for i in range(n):
                buf[j * n + i] = g[i]
            j += 1
    except BaseException:
        free(buf)
        raise
    count[0] = N
    return buf


cdef list _minimize_buf(int *buf, long N, int n):
    """Sort rows of ``buf`` in grlex order and keep the divisibility antichain."""
    global _sort_buf, _sort_deg, _sort_n
    cdef list out = []
    if N == 0:
        return out
    cdef int *order = _alloc(N)
    cdef int *kept = _alloc(N)
    cdef long *deg = <long *>malloc(sizeof(long) * N)
    cdef long j, t, nkept = 0, prev = -1
    cdef int i
    cdef int *row
    cdef bint redundant
    if deg == NULL:
        free(order)
        free(kept)
        raise MemoryError()
    try:
        for j in range(N):
            order[j] = <int>j
            deg[j] = 0
            for i in range(n):
                deg[j] += buf[j * n + i]
        _sort_buf = buf
        _sort_deg = deg
        _sort_n = n
        qsort(order, N, sizeof(int), _cmp_grlex)
        for t in range(N):
            j = order[t]
            row = buf + j * n
            if prev >= 0 and memcmp(row, buf + prev * n, sizeof(int) * n) == 0:
                continue
            prev = j
            redundant = False
            for i in range(nkept):
                if _divides(buf + <long>kept[i] * n, row, n):
                    redundant = True
                    break
            if not redundant:
                kept[nkept] = <int>j
                nkept += 1
        for t in range(nkept):
            row = buf + <long>kept[t] * n
            out.append(tuple([row[i] for i in range(n)]))
    finally:
        free(order)
        free(kept)
        free(deg)
    return out


def grlex_key(m):
    return (sum(m), tuple(-e for e in m))


def minimize(gens):
    gens = list(gens)
    if not gens:
        return []
    cdef int n = len(gens[0])
    cdef long N
    cdef int *buf = _pack(gens, n, &N)
    try:
        return _minimize_buf(buf, N, n)
    finally:
        free(buf)


def product(A, B):
    A = list(A)
    B = list(B)
    if not A or not B:
        return []
    cdef int n = len(A[0])
    cdef long NA, NB, ia, ib, j
    cdef int i
    cdef int *a = _pack(A, n, &NA)
    cdef int *b = NULL
    cdef int *c = NULL
    try:
        b = _pack(B, n, &NB)
        c = _alloc(NA * NB * n)
        for ia in range(NA):
            for ib in range(NB):
                j = (ia * NB + ib) * n
                for i in range(n):
                    c[j + i] = a[ia * n + i] + b[ib * n + i]
        return _minimize_buf(c, NA * NB, n)
    finally:
        free(a)
        free(b)
        free(c)


def contains(gens, u):
    gens = list(gens)
    if not gens:
        return False
    cdef int n = len(u)
    cdef long N, j
    cdef long one
    cdef int *buf = _pack(gens, n, &N)
    cdef int *ub = NULL
    try:
        ub = _pack([u], n, &one)
        for j in range(N):
            if _divides(buf + j * n, ub, n):
                return True
        return False
    finally:
        free(buf)
        free(ub)


def colon_monomial(gens, u):
    gens = list(gens)
    if not gens:
        return []
    cdef int n = len(u)
    cdef long N, j, one
    cdef int i
    cdef int *buf = _pack(gens, n, &N)
    cdef int *ub = NULL
    try:
        ub = _pack([u], n, &one)
        for j in range(N):
            for i in range(n):
                buf[j * n + i] = buf[j * n + i] - ub[i] if buf[j * n + i] > ub[i] else 0
        return _minimize_buf(buf, N, n)
    finally:
        free(buf)
        free(ub)


cdef bint _member(const int *gens, long N, const int *u, int n) noexcept nogil:
    cdef long j
    for j in range(N):
        if _divides(gens + j * n, u, n):
            return True
    return False


def intersect(A, B):
    A = list(A)
    B = list(B)
    if not A or not B:
        return []
    cdef int n = len(A[0])
    cdef long NA, NB, ia, ib, na_out = 0, nb_out = 0, ncand = 0
    cdef int i, x, y
    cdef int *a = _pack(A, n, &NA)
    cdef int *b = NULL
    cdef int *a_out = NULL
    cdef int *b_out = NULL
    cdef int *c = NULL
    try:
        b = _pack(B, n, &NB)
        a_out = _alloc(NA)
        b_out = _alloc(NB)
        c = _alloc((NA + NB) * n)
        # members of the other ideal are generators of the intersection as-is
        for ia in range(NA):
            if _member(b, NB, a + ia * n, n):
                for i in range(n):
                    c[ncand * n + i] = a[ia * n + i]
                ncand += 1
            else:
                a_out[na_out] = <int>ia
                na_out += 1
        for ib in range(NB):
            if _member(a, NA, b + ib * n, n):
                for i in range(n):
                    c[ncand * n + i] = b[ib * n + i]
                ncand += 1
            else:
                b_out[nb_out] = <int>ib
                nb_out += 1
        if na_out and nb_out:
            c = _grow(c, (ncand + na_out * nb_out) * n)
            for ia in range(na_out):
                for ib in range(nb_out):
                    for i in range(n):
                        x = a[<long>a_out[ia] * n + i]
                        y = b[<long>b_out[ib] * n + i]
                        c[ncand * n + i] = x if x > y else y
                    ncand += 1
        return _minimize_buf(c, ncand, n)
    finally:
        free(a)
        free(b)
        free(a_out)
        free(b_out)
        free(c)


def witness_scan(gens, int n):
    gens = list(gens)
    if not gens:
        return {}
    if n > 16:
        raise ValueError("witness_scan supports at most 16 variables")
    cdef long N, j, d
    cdef int i, unit, mask
    cdef bint inside, ok
    cdef int *g = _pack(gens, n, &N)
    cdef int *bound = _alloc(n)
    cdef int *u = _alloc(n)
    cdef int *q = _alloc(N * n)
    cdef long *best = <long *>malloc(sizeof(long) * (1 << n))
    cdef long qdeg
    cdef int qmask
    result = {}
    if best == NULL:
        free(g); free(bound); free(u); free(q)
        raise MemoryError()
    try:
        for mask in range(1 << n):
            best[mask] = -1
        for i in range(n):
            bound[i] = 0
            u[i] = 0
            for j in range(N):
                if g[j * n + i] > bound[i]:
                    bound[i] = g[j * n + i]
        while True:
            inside = False
            unit = 0
            for j in range(N):
                qdeg = 0
                for i in range(n):
                    q[j * n + i] = g[j * n + i] - u[i] if g[j * n + i] > u[i] else 0
                    qdeg += q[j * n + i]
                if qdeg == 0:
                    inside = True
                    break
                if qdeg == 1:
                    for i in range(n):
                        if q[j * n + i]:
                            unit |= 1 << i
            if not inside and unit:
                ok = True
                for j in range(N):
                    qmask = 0
                    for i in range(n):
                        if q[j * n + i]:
                            qmask |= 1 << i
                    if not (qmask & unit):
                        ok = False
                        break
                if ok:
                    d = 0
                    for i in range(n):
                        d += u[i]
                    if best[unit] < 0 or d < best[unit]:
                        best[unit] = d
            # odometer step
            i = 0
            while i < n:
                if u[i] < bound[i]:
                    u[i] += 1
                    break
                u[i] = 0
                i += 1
            if i == n:
                break
        for mask in range(1, 1 << n):
            if best[mask] >= 0:
                result[tuple([i for i in range(n) if mask & (1 << i)])] = best[mask]
        return result
    finally:
        free(g)
        free(bound)
        free(u)
        free(q)
        free(best)
