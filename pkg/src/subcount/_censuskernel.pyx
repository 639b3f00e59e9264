# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled closure worklist used by the subgroup census."""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy


def closure_census(mods, int p):
    """Count subgroups of the direct sum of Z/mods[i], bucketed by order.

    mods are the cyclic factor orders (powers of p).  Returns a list whose
    entry e is the number of subgroups of size p**e.
    """
    cdef int d = len(mods)
    cdef long long nll = 1
    cdef int c, i, j, n
    for c in range(d):
        nll *= <long long> mods[c]
    if nll > 65535:
        raise ValueError("group too large for the compiled kernel")
    n = <int> nll
    if n == 1:
        return [1]

    cdef int words = (n + 63) >> 6
    cdef unsigned short *add = <unsigned short *> malloc(<size_t> n * n * sizeof(unsigned short))
    cdef int *mv = <int *> malloc(d * sizeof(int))
    cdef int *di = <int *> malloc(d * sizeof(int))
    cdef unsigned long long *km = <unsigned long long *> malloc(words * sizeof(unsigned long long))
    cdef unsigned short *ke = <unsigned short *> malloc(n * sizeof(unsigned short))
    if add == NULL or mv == NULL or di == NULL or km == NULL or ke == NULL:
        free(add); free(mv); free(di); free(km); free(ke)
        raise MemoryError()

    cdef list counts = []
    cdef set seen
    cdef list work
    cdef long long base, rowbase
    cdef int s, w, x, dj, g, cur, size, e, hcount, kcount, idx
    cdef const unsigned long long *hmask
    cdef const unsigned short *helems
    cdef object mask_b, el_b, kmask_b

    try:
        for c in range(d):
            mv[c] = mods[c]
        # addition table of the mixed-radix element encoding
        for i in range(n):
            x = i
            for c in range(d):
                di[c] = x % mv[c]
                x //= mv[c]
            base = <long long> i * n
            for j in range(n):
                x = j
                s = 0
                w = 1
                for c in range(d):
                    dj = x % mv[c]
                    x //= mv[c]
                    s += ((di[c] + dj) % mv[c]) * w
                    w *= mv[c]
                add[base + j] = <unsigned short> s

        for i in range(64):
            counts.append(0)

        for i in range(words):
            km[i] = 0
        km[0] = 1
        ke[0] = 0
        mask_b = PyBytes_FromStringAndSize(<char *> km, words * 8)
        el_b = PyBytes_FromStringAndSize(<char *> ke, sizeof(unsigned short))
        seen = {mask_b}
        work = [(mask_b, el_b)]

        while work:
            mask_b, el_b = work.pop()
            hmask = <const unsigned long long *> PyBytes_AS_STRING(mask_b)
            helems = <const unsigned short *> PyBytes_AS_STRING(el_b)
            hcount = len(<bytes> el_b) >> 1
            size = hcount
            e = 0
            while size > 1:
                size //= p
                e += 1
            counts[e] = counts[e] + 1
            for g in range(1, n):
                if (hmask[g >> 6] >> (g & 63)) & 1:
                    continue
                # K = H + <g>, built by translating H through multiples of g
                memcpy(km, hmask, words * 8)
                memcpy(ke, helems, hcount * sizeof(unsigned short))
                kcount = hcount
                cur = g
                while not ((km[cur >> 6] >> (cur & 63)) & 1):
                    rowbase = <long long> cur * n
                    for idx in range(hcount):
                        x = add[rowbase + helems[idx]]
                        if not ((km[x >> 6] >> (x & 63)) & 1):
                            km[x >> 6] |= (<unsigned long long> 1) << (x & 63)
                            ke[kcount] = <unsigned short> x
                            kcount += 1
                    cur = add[rowbase + g]
                kmask_b = PyBytes_FromStringAndSize(<char *> km, words * 8)
                if kmask_b not in seen:
                    seen.add(kmask_b)
                    work.append((kmask_b, PyBytes_FromStringAndSize(<char *> ke, kcount * sizeof(unsigned short))))
    finally:
        free(add); free(mv); free(di); free(km); free(ke)

    while len(counts) > 1 and counts[len(counts) - 1] == 0:
        counts.pop()
    return counts
