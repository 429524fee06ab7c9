# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled enumeration core; interface-identical to csfkit._pykernel.

The coloring walk is the package's hot loop (the oracle side of the
benchmark visits up to n^n colorings per graph), so it runs on flat C
arrays: counts are accumulated in a dense (composition rank) x (ascent)
matrix and converted back to dicts only once at the end.
"""

from libc.stdlib cimport calloc, free, malloc

BACKEND = "compiled"


cdef long long* _binomial_table(int dim):
    # row-major Pascal triangle, binom[a*dim + b] = C(a, b)
    cdef long long* binom = <long long*> calloc(dim * dim, sizeof(long long))
    if binom == NULL:
        raise MemoryError()
    cdef int a, b
    for a in range(dim):
        binom[a * dim] = 1
        for b in range(1, a + 1):
            binom[a * dim + b] = binom[(a - 1) * dim + b - 1] + (
                binom[(a - 1) * dim + b] if b <= a - 1 else 0
            )
    return binom


cdef inline long long _comp_count(long long* binom, int dim, int total, int parts):
    # number of length-`parts` nonnegative vectors summing to `total`
    if parts == 0:
        return 1 if total == 0 else 0
    return binom[(total + parts - 1) * dim + (parts - 1)]


cdef struct _Walk:
    int n
    int k
    int max_asc
    int bdim
    int* nbr_off
    int* nbr
    int* colors
    int* content
    long long* counts
    long long* binom


cdef long long _content_rank(_Walk* w) noexcept:
    # rank of the current content vector in ascending lex order
    cdef long long r = 0
    cdef int pos, v, rem = w.n
    for pos in range(w.k - 1):
        for v in range(w.content[pos]):
            r += _comp_count(w.binom, w.bdim, rem - v, w.k - pos - 1)
        rem -= w.content[pos]
    return r


cdef void _walk(_Walk* w, int i, int asc) noexcept:
    cdef int c, jj, j, up, ok
    cdef long long r
    if i == w.n:
        r = _content_rank(w)
        w.counts[r * (w.max_asc + 1) + asc] += 1
        return
    for c in range(w.k):
        up = 0
        ok = 1
        for jj in range(w.nbr_off[i], w.nbr_off[i + 1]):
            j = w.nbr[jj]
            if w.colors[j] == c:
                ok = 0
                break
            if w.colors[j] < c:
                up += 1
        if not ok:
            continue
        w.colors[i] = c
        w.content[c] += 1
        _walk(w, i + 1, asc + up)
        w.content[c] -= 1


cdef long long _count_walk(int i, int n, int k, int* nbr_off, int* nbr,
                           int* colors) noexcept:
    cdef int c, jj, ok
    cdef long long total = 0
    if i == n:
        return 1
    for c in range(k):
        ok = 1
        for jj in range(nbr_off[i], nbr_off[i + 1]):
            if colors[nbr[jj]] == c:
                ok = 0
                break
        if ok:
            colors[i] = c
            total += _count_walk(i + 1, n, k, nbr_off, nbr, colors)
    return total


def _build_neighbors(hvec):
    n = len(hvec)
    flat = []
    offsets = [0]
    for i in range(n):
        flat.extend(j for j in range(i) if hvec[j] >= i + 1)
        offsets.append(len(flat))
    return offsets, flat


def _compositions(int n, int k):
    # ascending lex, matching _content_rank
    if k == 1:
        yield (n,)
        return
    cdef int first
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def coloring_table(hvec, int k):
    """Tally proper colorings by (content vector, ascent count); see
    csfkit._pykernel.coloring_table for the exact contract."""
    hvec = tuple(hvec)
    cdef int n = len(hvec)
    cdef int max_asc = sum(hvec[i] - (i + 1) for i in range(n))
    offsets, flat = _build_neighbors(hvec)

    cdef int bdim = n + k + 2
    cdef long long ncomp
    cdef _Walk w
    w.n = n
    w.k = k
    w.max_asc = max_asc
    w.bdim = bdim
    w.binom = _binomial_table(bdim)
    ncomp = _comp_count(w.binom, bdim, n, k)
    if ncomp * (max_asc + 1) > 50_000_000:
        free(w.binom)
        raise MemoryError("tally matrix too large; use the python backend")

    w.nbr_off = <int*> malloc((n + 1) * sizeof(int))
    w.nbr = <int*> malloc(max(len(flat), 1) * sizeof(int))
    w.colors = <int*> malloc(n * sizeof(int))
    w.content = <int*> calloc(k, sizeof(int))
    w.counts = <long long*> calloc(ncomp * (max_asc + 1), sizeof(long long))
    if (w.nbr_off == NULL or w.nbr == NULL or w.colors == NULL
            or w.content == NULL or w.counts == NULL):
        raise MemoryError()
    cdef int idx
    for idx in range(n + 1):
        w.nbr_off[idx] = offsets[idx]
    for idx in range(len(flat)):
        w.nbr[idx] = flat[idx]

    try:
        _walk(&w, 0, 0)
        table = {}
        rank = 0
        for comp in _compositions(n, k):
            row = None
            for asc in range(max_asc + 1):
                cnt = w.counts[rank * (max_asc + 1) + asc]
                if cnt:
                    if row is None:
                        row = {}
                        table[comp] = row
                    row[asc] = cnt
            rank += 1
        return table
    finally:
        free(w.binom)
        free(w.nbr_off)
        free(w.nbr)
        free(w.colors)
        free(w.content)
        free(w.counts)


def count_colorings(hvec, int k):
    """Number of proper colorings with k colors (no tallying)."""
    hvec = tuple(hvec)
    cdef int n = len(hvec)
    offsets, flat = _build_neighbors(hvec)
    cdef int* nbr_off = <int*> malloc((n + 1) * sizeof(int))
    cdef int* nbr = <int*> malloc(max(len(flat), 1) * sizeof(int))
    cdef int* colors = <int*> malloc(n * sizeof(int))
    if nbr_off == NULL or nbr == NULL or colors == NULL:
        raise MemoryError()
    cdef int idx
    for idx in range(n + 1):
        nbr_off[idx] = offsets[idx]
    for idx in range(len(flat)):
        nbr[idx] = flat[idx]
    try:
        return _count_walk(0, n, k, nbr_off, nbr, colors)
    finally:
        free(nbr_off)
        free(nbr)
        free(colors)
