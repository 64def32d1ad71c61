# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled row/column reduction kernel.

Same contract and pivot rule as tracehom._snf_py.diagonalize, with the
arithmetic done on a flat int64 buffer.  Every multiply and subtract is
overflow-checked; the moment a value would leave the int64 range the
whole matrix is redone by the pure-Python kernel, which is exact at any
size.  Results therefore never depend on which kernel ran.
"""

from libc.stdlib cimport free, malloc
from libc.stdint cimport INT64_MIN, int64_t

from tracehom._snf_py import diagonalize as _object_diagonalize

KERNEL_NAME = "compiled"

cdef extern from *:
    bint __builtin_mul_overflow(int64_t, int64_t, int64_t*)
    bint __builtin_sub_overflow(int64_t, int64_t, int64_t*)


cdef inline int64_t _checked_abs(int64_t v) except? -1:
    if v == INT64_MIN:
        raise OverflowError
    return -v if v < 0 else v


cdef list _reduce(int64_t* m, Py_ssize_t nr, Py_ssize_t nc):
    cdef Py_ssize_t t = 0, i, j, bi, bj
    cdef int64_t a, v, q, r, best, prod, res
    cdef bint dirty
    diag = []
    while t < nr and t < nc:
        # pivot: min |entry|, ties to the lowest (row, col)
        best = 0
        bi = bj = -1
        for i in range(t, nr):
            if best == 1:
                break
            for j in range(t, nc):
                v = m[i * nc + j]
                if v != 0:
                    v = _checked_abs(v)
                    if best == 0 or v < best:
                        best = v
                        bi = i
                        bj = j
                        if best == 1:
                            break
        if best == 0:
            break
        if bi != t:
            for j in range(t, nc):
                v = m[t * nc + j]
                m[t * nc + j] = m[bi * nc + j]
                m[bi * nc + j] = v
        if bj != t:
            for i in range(0, nr):
                v = m[i * nc + t]
                m[i * nc + t] = m[i * nc + bj]
                m[i * nc + bj] = v
        if m[t * nc + t] < 0:
            for j in range(t, nc):
                v = m[t * nc + j]
                if __builtin_sub_overflow(0, v, &res):
                    raise OverflowError
                m[t * nc + j] = res
        a = m[t * nc + t]
        dirty = False
        for i in range(t + 1, nr):
            v = m[i * nc + t]
            if v == 0:
                continue
            q = v / a
            r = v % a
            if q != 0:
                for j in range(t, nc):
                    if __builtin_mul_overflow(q, m[t * nc + j], &prod):
                        raise OverflowError
                    if __builtin_sub_overflow(m[i * nc + j], prod, &res):
                        raise OverflowError
                    m[i * nc + j] = res
            if r != 0:
                dirty = True
        if dirty:
            continue
        for j in range(t + 1, nc):
            # the column below the pivot is clear, so the shear only
            # touches the pivot row
            r = m[t * nc + j] % a
            m[t * nc + j] = r
            if r != 0:
                dirty = True
        if dirty:
            continue
        diag.append(a)
        t += 1
    return diag


cdef list _diagonalize_fast(rows):
    cdef Py_ssize_t nr = len(rows)
    cdef Py_ssize_t nc = len(rows[0]) if nr else 0
    cdef Py_ssize_t i, j
    cdef int64_t* m
    if nr == 0 or nc == 0:
        return []
    m = <int64_t*> malloc(nr * nc * sizeof(int64_t))
    if m == NULL:
        raise MemoryError
    try:
        for i in range(nr):
            row = rows[i]
            for j in range(nc):
                m[i * nc + j] = row[j]  # raises OverflowError past int64
        return _reduce(m, nr, nc)
    finally:
        free(m)


def diagonalize(rows):
    """See tracehom._snf_py.diagonalize; identical contract."""
    try:
        return _diagonalize_fast(rows)
    except OverflowError:
        return _object_diagonalize(rows)
