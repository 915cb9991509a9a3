# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Littlewood-Richardson tableau kernel.

Same row-by-row search as ``_lrpy.row_fillings`` over flat C arrays; only the
counting entry points are compiled.
"""

from libc.stdlib cimport malloc, calloc, free

NAME = "cython"

cdef long BIG = 1 << 60


cdef struct Search:
    int nrows
    int letters
    int stride
    long total
    int n_inner
    int skew
    int *mu
    int *targets
    int *content
    long *cnt
    int *a
    long *L


cdef inline long lmin(long x, long y) nogil:
    return x if x < y else y


cdef void emit(Search *s, int last_row, dict out):
    cdef int r, k
    cdef long v
    cdef list key = []
    if s.skew:
        for k in range(1, s.letters + 1):
            v = s.cnt[k]
            if v:
                key.append(v)
    else:
        for r in range(s.nrows):
            if r <= last_row:
                v = s.L[r * s.stride + s.letters]
            else:
                v = s.mu[r]
            if v:
                key.append(v)
    t = tuple(key)
    out[t] = out.get(t, 0) + 1


cdef void rec(Search *s, int r, int k, long placed, dict out):
    cdef int kk
    cdef long hi, x, rowsum
    cdef int st = s.stride
    cdef long *Lr = s.L + r * st
    cdef int *ar = s.a + r * st
    if k > s.letters or (k >= 2 and s.cnt[k - 1] == 0):
        rowsum = Lr[k - 1] - s.mu[r]
        if s.skew and rowsum != s.targets[r]:
            return
        for kk in range(k, s.letters + 1):
            Lr[kk] = Lr[k - 1]
        for kk in range(1, s.letters + 1):
            s.cnt[kk] += ar[kk]
        if placed == s.total:
            emit(s, r, out)
        elif r + 1 < s.nrows and (s.skew or rowsum > 0 or r < s.n_inner):
            rec(s, r + 1, 1, placed, out)
        for kk in range(1, s.letters + 1):
            s.cnt[kk] -= ar[kk]
        return
    hi = BIG
    if not s.skew:
        hi = s.content[k - 1] - s.cnt[k]
    if k >= 2:
        hi = lmin(hi, s.cnt[k - 1] - s.cnt[k])
    if r > 0:
        hi = lmin(hi, s.L[(r - 1) * st + k - 1] - Lr[k - 1])
    if s.skew:
        hi = lmin(hi, s.targets[r] - (Lr[k - 1] - s.mu[r]))
    else:
        hi = lmin(hi, s.total - placed)
    x = hi
    while x >= 0:
        ar[k] = <int>x
        Lr[k] = Lr[k - 1] + x
        rec(s, r, k + 1, placed + x, out)
        x -= 1
    ar[k] = 0


cdef dict run(tuple inner, int nrows, int letters, object targets, object content):
    cdef Search s
    cdef int r
    cdef dict out = {}
    s.nrows = nrows
    s.letters = letters
    s.stride = letters + 1
    s.n_inner = len(inner)
    s.skew = targets is not None
    s.mu = <int *> calloc(nrows + 1, sizeof(int))
    s.targets = <int *> calloc(nrows + 1, sizeof(int))
    s.content = <int *> calloc(letters + 1, sizeof(int))
    s.cnt = <long *> calloc(letters + 1, sizeof(long))
    s.a = <int *> calloc((nrows + 1) * s.stride, sizeof(int))
    s.L = <long *> calloc((nrows + 1) * s.stride, sizeof(long))
    if not (s.mu and s.targets and s.content and s.cnt and s.a and s.L):
        free(s.mu); free(s.targets); free(s.content); free(s.cnt); free(s.a); free(s.L)
        raise MemoryError()
    try:
        s.total = 0
        for r in range(len(inner)):
            s.mu[r] = inner[r]
        if s.skew:
            for r in range(len(targets)):
                s.targets[r] = targets[r]
                s.total += targets[r]
        else:
            for r in range(len(content)):
                s.content[r] = content[r]
                s.total += content[r]
        s.cnt[0] = BIG
        for r in range(nrows):
            s.L[r * s.stride] = s.mu[r]
        if s.total == 0:
            if s.skew:
                out[()] = 1
            else:
                out[tuple(inner)] = 1
        else:
            rec(&s, 0, 1, 0, out)
    finally:
        free(s.mu); free(s.targets); free(s.content); free(s.cnt); free(s.a); free(s.L)
    return out


def lr_mult(mu, nu):
    """``{lambda: c^lambda_{mu,nu}}`` for all nonzero coefficients."""
    mu, nu = tuple(mu), tuple(nu)
    if not nu:
        return {tuple(mu): 1}
    return run(mu, len(mu) + len(nu), len(nu), None, nu)


def lr_skew(outer, inner):
    """``{nu: c^outer_{inner,nu}}``."""
    outer, inner = tuple(outer), tuple(inner)
    cdef int nrows = len(outer)
    targets = [outer[r] - (inner[r] if r < len(inner) else 0) for r in range(nrows)]
    return run(inner, nrows, nrows, targets, None)
