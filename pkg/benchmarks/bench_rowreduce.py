"""Benchmark the compiled row-reduction kernel against the pure-Python twin.

Workloads are the systems the package actually solves: derivation-space and
generalized-derivation constraints for the rank-two special linear algebra,
in its standard basis and after a random integer change of basis (the change
of basis densifies the structure constants, which is the expensive case).
A dense random square system is included as a synthetic worst case.

Run:  python benchmarks/bench_rowreduce.py
"""

import random
import time
from fractions import Fraction

from postlie import catalog
from postlie._rowreduce_py import reduce_int_rows as reduce_py
from postlie.lie import change_basis
from postlie.linalg import Matrix, _scale_row_to_ints

try:
    from postlie._rowreduce import reduce_int_rows as reduce_c
except ImportError:
    reduce_c = None


def _gder_rows(alg):
    n = alg.dim
    nn = n * n
    rows = []
    for i in range(n):
        for j in range(n):
            cij = alg.c[i][j]
            for k in range(n):
                row = [Fraction(0)] * (3 * nn)
                for m in range(n):
                    if cij[m]:
                        row[2 * nn + k * n + m] += cij[m]
                    v = alg.c[m][j][k]
                    if v:
                        row[m * n + i] -= v
                    v = alg.c[i][m][k]
                    if v:
                        row[nn + m * n + j] -= v
                rows.append(row)
    return [_scale_row_to_ints(r) for r in rows]


def _random_shear_basis(alg, seed):
    rng = random.Random(seed)
    n = alg.dim
    t = Matrix.identity(n)
    for _ in range(2 * n):
        i, j = rng.sample(range(n), 2)
        entries = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
        entries[i][j] = Fraction(rng.choice([-2, -1, 1, 2]))
        t = t * Matrix.from_rows(entries)
    return change_basis(alg, t)


def _dense_random(rows, cols, seed):
    rng = random.Random(seed)
    return [
        [rng.choice([-2, -1, 0, 1, 2]) if rng.random() < 0.3 else 0 for _ in range(cols)]
        for _ in range(rows)
    ]


def _time(kernel, rows, repeat=3):
    best = None
    for _ in range(repeat):
        work = [r[:] for r in rows]
        t0 = time.perf_counter()
        kernel(work)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    sl3 = catalog.get("sl3").algebra
    sheared = _random_shear_basis(sl3, seed=11)
    workloads = [
        ("gder system, standard basis (512x192)", _gder_rows(sl3)),
        ("gder system, sheared basis (512x192)", _gder_rows(sheared)),
        ("dense random system (224x192)", _dense_random(224, 192, seed=5)),
    ]
    print(f"{'workload':45s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for label, rows in workloads:
        t_py = _time(reduce_py, rows)
        if reduce_c is None:
            print(f"{label:45s} {t_py:9.3f}s {'n/a':>10s}")
            continue
        t_c = _time(reduce_c, rows)
        print(f"{label:45s} {t_py:9.3f}s {t_c:9.3f}s {t_py / t_c:7.2f}x")
    if reduce_c is None:
        print("compiled kernel not built; install with Cython available to compare")


if __name__ == "__main__":
    main()
