# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the loops in ``_pykernels``.

Bitmasks are held in ``unsigned long long``; callers keep carriers within
the size guard, so masks never exceed 64 bits here.
"""

from libc.stdlib cimport malloc, free


ctypedef unsigned long long u64


def or_zeta(seed, int n_bits):
    cdef Py_ssize_t size = 1 << n_bits
    cdef u64 *buf = <u64 *> malloc(size * sizeof(u64))
    cdef Py_ssize_t a, bit
    if buf == NULL:
        raise MemoryError()
    try:
        for a in range(size):
            buf[a] = seed[a]
        bit = 1
        while bit < size:
            for a in range(size):
                if a & bit:
                    buf[a] |= buf[a ^ bit]
            bit <<= 1
        return [buf[a] for a in range(size)]
    finally:
        free(buf)


def join_below(int n_bits, keys, values):
    cdef Py_ssize_t size = 1 << n_bits
    cdef u64 *buf = <u64 *> malloc(size * sizeof(u64))
    cdef Py_ssize_t a, bit, i, n = len(keys)
    if buf == NULL:
        raise MemoryError()
    try:
        for a in range(size):
            buf[a] = 0
        for i in range(n):
            buf[<Py_ssize_t> keys[i]] |= <u64> values[i]
        bit = 1
        while bit < size:
            for a in range(size):
                if a & bit:
                    buf[a] |= buf[a ^ bit]
            bit <<= 1
        return [buf[a] for a in range(size)]
    finally:
        free(buf)


def compose_tables(outer, inner):
    return [outer[x] for x in inner]


cdef u64 *_load(table, Py_ssize_t size) except NULL:
    cdef u64 *buf = <u64 *> malloc(size * sizeof(u64))
    cdef Py_ssize_t a
    if buf == NULL:
        raise MemoryError()
    for a in range(size):
        buf[a] = table[a]
    return buf


def meet_failure(table):
    cdef Py_ssize_t size = len(table)
    cdef u64 *t = _load(table, size)
    cdef Py_ssize_t a, b
    try:
        for a in range(size):
            for b in range(a + 1, size):
                if t[a & b] != (t[a] & t[b]):
                    return a, b
        return -1, -1
    finally:
        free(t)


def join_failure(table):
    cdef Py_ssize_t size = len(table)
    cdef u64 *t = _load(table, size)
    cdef Py_ssize_t a, b
    try:
        for a in range(size):
            for b in range(a + 1, size):
                if t[a | b] != (t[a] | t[b]):
                    return a, b
        return -1, -1
    finally:
        free(t)


def closed_families(int n_points):
    cdef int size = 1 << n_points
    cdef int full = size - 1
    cdef int m, i, j, k, u, v
    cdef u64 choice, fam, limit
    cdef int members[64]
    cdef bint ok
    if n_points == 0:
        return [1]
    if n_points > 4:
        raise ValueError("closed_families is limited to 4 points")
    m = full - 1
    limit = (<u64> 1) << m
    found = []
    choice = 0
    while choice < limit:
        members[0] = 0
        members[1] = full
        k = 2
        fam = 1 | ((<u64> 1) << full)
        for i in range(m):
            if (choice >> i) & 1:
                members[k] = i + 1
                k += 1
                fam |= (<u64> 1) << (i + 1)
        ok = True
        for i in range(k):
            u = members[i]
            for j in range(i + 1, k):
                v = members[j]
                if not ((fam >> (u | v)) & 1) or not ((fam >> (u & v)) & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(int(fam))
        choice += 1
    return found
