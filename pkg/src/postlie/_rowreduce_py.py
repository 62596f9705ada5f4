"""Row reduction over exact integer rows (pure-Python kernel).

This is the reference implementation of the one hot loop in the package.
``_rowreduce.pyx`` is the compiled twin; both expose the same
``reduce_int_rows`` contract and must produce identical output.
"""

from math import gcd

BACKEND = "python"


def reduce_int_rows(rows):
    """Jordan-reduce a list of integer rows in place.

    After the call the first ``len(pivots)`` rows form the reduced system:
    every row is primitive (content 1) with a positive pivot entry, and each
    pivot column is zero in all other rows.  Remaining rows are zero.
    Returns the list of pivot column indices.

    Dividing row ``r`` by its pivot entry yields the reduced row-echelon
    form over the rationals; keeping integer rows primitive bounds entry
    growth during elimination.
    """
    nrows = len(rows)
    if nrows == 0:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        k = r
        while k < nrows and rows[k][c] == 0:
            k += 1
        if k == nrows:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        prow = rows[r]
        g = 0
        for x in prow:
            g = gcd(g, x)
        if prow[c] < 0:
            g = -g
        if g != 1:
            rows[r] = prow = [x // g for x in prow]
        p = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            a = row[c]
            if a == 0:
                continue
            new = [p * row[j] - a * prow[j] for j in range(ncols)]
            g2 = 0
            for x in new:
                g2 = gcd(g2, x)
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
