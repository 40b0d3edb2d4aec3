# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled path-count kernel.

Same contract as gapwords._kernel_py.path_count_kernel. The fast path runs
the triple loop in C uint64 arithmetic with explicit overflow checks; as soon
as any product or sum would not fit, the whole computation restarts on Python
integers, so results are always exact.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

cdef uint64_t U64_MAX = <uint64_t>0xFFFFFFFFFFFFFFFF


def path_count_kernel(list rows):
    """Path counts for a strictly upper triangular 0/1 adjacency, as fresh lists."""
    cdef Py_ssize_t n = len(rows)
    try:
        return _paths_u64(rows, n)
    except OverflowError:
        return _paths_object(rows, n)


cdef list _paths_u64(list rows, Py_ssize_t n):
    cdef uint64_t *w = <uint64_t *>malloc(n * n * sizeof(uint64_t))
    if w == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, k
    cdef uint64_t wik, wkj, prod, cur
    cdef list row, out
    try:
        for i in range(n):
            row = <list>rows[i]
            for j in range(n):
                # raises OverflowError for entries outside uint64
                w[i * n + j] = <uint64_t>row[j]
        for k in range(n):
            for i in range(k):
                wik = w[i * n + k]
                if wik == 0:
                    continue
                for j in range(k + 1, n):
                    wkj = w[k * n + j]
                    if wkj == 0:
                        continue
                    if wik > U64_MAX // wkj:
                        raise OverflowError()
                    prod = wik * wkj
                    cur = w[i * n + j]
                    if cur > U64_MAX - prod:
                        raise OverflowError()
                    w[i * n + j] = cur + prod
        out = []
        for i in range(n):
            out.append([w[i * n + j] for j in range(n)])
        return out
    finally:
        free(w)


cdef list _paths_object(list rows, Py_ssize_t n):
    # Arbitrary-precision fallback: same loops, Python integer entries.
    cdef list w = [list(row) for row in rows]
    cdef list wi, wk
    cdef Py_ssize_t i, j, k
    for k in range(n):
        wk = <list>w[k]
        for i in range(k):
            wi = <list>w[i]
            wik = wi[k]
            if wik != 0:
                for j in range(k + 1, n):
                    wkj = wk[j]
                    if wkj != 0:
                        wi[j] = wi[j] + wik * wkj
    return w
