# cython: language_level=3
"""Row reduction over exact integer rows (compiled kernel).

Same contract as ``_rowreduce_py.reduce_int_rows``; the arithmetic stays on
arbitrary-precision Python integers, Cython only removes the interpreter
overhead of the inner loops.
"""

from math import gcd

BACKEND = "c"


def reduce_int_rows(list rows):
    """Jordan-reduce a list of integer rows in place; return pivot columns.

    See the pure-Python twin for the full contract: reduced rows are
    primitive with positive pivots, non-pivot rows end up zero.
    """
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return []
    cdef Py_ssize_t ncols = len(<list> rows[0])
    cdef Py_ssize_t r = 0, c, k, i, j
    cdef list pivots = []
    cdef list prow, row, new
    cdef object g, g2, p, a, x
    for c in range(ncols):
        k = r
        while k < nrows and (<list> rows[k])[c] == 0:
            k += 1
        if k == nrows:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        prow = <list> rows[r]
        g = 0
        for j in range(ncols):
            g = gcd(g, prow[j])
        if prow[c] < 0:
            g = -g
        if g != 1:
            prow = [x // g for x in prow]
            rows[r] = prow
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = <list> rows[i]
            a = row[c]
            if a == 0:
                continue
            new = [p * row[j] - a * prow[j] for j in range(ncols)]
            g2 = 0
            for j in range(ncols):
                g2 = gcd(g2, new[j])
                if g2 == 1:
                    break
            if g2 > 1:
                new = [x // g2 for x in new]
            rows[i] = new
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots
