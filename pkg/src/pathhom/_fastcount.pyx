# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels.

C-integer mirrors of `pathhom._purecount`. Exactness holds only inside the
bounds enforced by `pathhom.backend` (every intermediate fits in 64 bits);
outside those bounds the dispatcher stays on the pure-Python kernels.
"""

from libc.stdlib cimport calloc, free


def dp_start_counts(int n, int k):
    """Walk counts by start vertex; entries are bounded by 2**(n-1)."""
    if n < 1 or k < 1:
        raise ValueError("dp_start_counts needs n >= 1, k >= 1")
    if n > 64:
        raise ValueError("dp_start_counts fast kernel is exact only for n <= 64")
    cdef unsigned long long *v = <unsigned long long *> calloc(k, sizeof(unsigned long long))
    cdef unsigned long long *w = <unsigned long long *> calloc(k, sizeof(unsigned long long))
    cdef unsigned long long *tmp
    if v == NULL or w == NULL:
        free(v)
        free(w)
        raise MemoryError()
    cdef int step, j
    cdef unsigned long long acc
    for j in range(k):
        v[j] = 1
    for step in range(n - 1):
        for j in range(k):
            acc = 0
            if j > 0:
                acc += v[j - 1]
            if j + 1 < k:
                acc += v[j + 1]
            w[j] = acc
        tmp = v
        v = w
        w = tmp
    out = [v[j] for j in range(k)]
    free(v)
    free(w)
    return out


cdef long long _count_surj(int depth, int v, unsigned long long seen,
                           int n, int k, unsigned long long full) noexcept:
    if depth == n:
        return 1 if seen == full else 0
    cdef long long acc = 0
    if v > 1:
        acc += _count_surj(depth + 1, v - 1, seen | (1ULL << (v - 2)), n, k, full)
    if v < k:
        acc += _count_surj(depth + 1, v + 1, seen | (1ULL << v), n, k, full)
    return acc


def count_surjective(int n, int k):
    """Image sequences covering the whole k-path, by exhaustive walk."""
    if k > n or k < 1:
        return 0
    if n > 25:
        raise ValueError("count_surjective fast kernel is capped at n <= 25")
    cdef unsigned long long full = (1ULL << k) - 1
    cdef long long total = 0
    cdef int s
    for s in range(1, k + 1):
        total += _count_surj(1, s, 1ULL << (s - 1), n, k, full)
    return total


cdef _census(int depth, int v, int next_label, int n,
             int *label_of, char *rgs, set out):
    cdef int lbl = label_of[v]
    cdef bint fresh = lbl == 0
    if fresh:
        lbl = next_label
        label_of[v] = lbl
        next_label += 1
    rgs[depth - 1] = <char> (lbl - 1)
    if depth == n:
        out.add(rgs[:n])
    else:
        if v > 1:
            _census(depth + 1, v - 1, next_label, n, label_of, rgs, out)
        if v < n:
            _census(depth + 1, v + 1, next_label, n, label_of, rgs, out)
    if fresh:
        label_of[v] = 0


def kernel_census(int n):
    """Distinct endomorphism kernel partitions as restricted-growth bytes."""
    if n < 1:
        raise ValueError("kernel_census needs n >= 1")
    if n > 24:
        raise ValueError("kernel_census fast kernel is capped at n <= 24")
    cdef int *label_of = <int *> calloc(n + 2, sizeof(int))
    cdef char *rgs = <char *> calloc(n, sizeof(char))
    if label_of == NULL or rgs == NULL:
        free(label_of)
        free(rgs)
        raise MemoryError()
    out = set()
    cdef int s
    try:
        for s in range(1, n + 1):
            _census(1, s, 1, n, label_of, rgs, out)
    finally:
        free(label_of)
        free(rgs)
    return out


def banded_dp(int e, int nn, int t, int s):
    """East/north paths to (e, nn) keeping x - s <= y <= x + t throughout."""
    if e < 0 or nn < 0 or t < 0 or s < 0:
        raise ValueError("banded_dp arguments must be nonnegative")
    if e + nn > 64:
        raise ValueError("banded_dp fast kernel is exact only for e + nn <= 64")
    if not (e + t >= nn >= e - s):
        return 0
    cdef unsigned long long *prev = <unsigned long long *> calloc(nn + 1, sizeof(unsigned long long))
    cdef unsigned long long *cur = <unsigned long long *> calloc(nn + 1, sizeof(unsigned long long))
    cdef unsigned long long *tmp
    if prev == NULL or cur == NULL:
        free(prev)
        free(cur)
        raise MemoryError()
    cdef int x, y, ylo, yhi
    cdef unsigned long long acc
    for x in range(e + 1):
        for y in range(nn + 1):
            cur[y] = 0
        ylo = x - s
        if ylo < 0:
            ylo = 0
        yhi = x + t
        if yhi > nn:
            yhi = nn
        for y in range(ylo, yhi + 1):
            if x == 0 and y == 0:
                cur[y] = 1
                continue
            acc = prev[y]
            if y > 0:
                acc += cur[y - 1]
            cur[y] = acc
        tmp = prev
        prev = cur
        cur = tmp
    result = prev[nn]
    free(prev)
    free(cur)
    return result
