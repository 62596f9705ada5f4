"""Exact linear algebra over the rationals.

Scalars are ``fractions.Fraction`` throughout: always in lowest terms with a
positive denominator, so every value is canonical and no rounding can occur.
``Matrix`` is a dense immutable matrix of such scalars; ``Subspace`` is a row
span stored through its reduced row-echelon basis, which makes equality of
subspaces a plain entrywise comparison.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .kernel import reduce_int_rows

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DimensionMismatch(ValueError):
    """Operands live in spaces of different dimensions."""


def rat(value) -> Fraction:
    """Coerce an int, string or Fraction to an exact rational.

    Floats are rejected: admitting them would smuggle rounding error into a
    system that promises exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact rational: {value!r}")


def parse_rational(value) -> Fraction:
    """Parse the serialized form: a bare integer or a 'p/q' string."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, _, den = text.partition("/")
                d = int(den)
                if d == 0:
                    raise ValueError(f"zero denominator in {value!r}")
                return Fraction(int(num), d)
            return Fraction(int(text))
        except ValueError as exc:
            raise ValueError(f"malformed rational {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


def rational_to_json(q: Fraction):
    """Serialize: bare int when the denominator is 1, else a 'p/q' string."""
    if q.denominator == 1:
        return int(q)
    return f"{q.numerator}/{q.denominator}"


def _as_fraction_row(row: Iterable) -> tuple[Fraction, ...]:
    return tuple(rat(x) for x in row)


class Matrix:
    """Immutable dense matrix of exact rationals, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(rat(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, "
                f"got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [_ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [_ONE if i == j else _ZERO for i in range(n) for j in range(n)])

    @classmethod
    def stack(cls, matrices: Sequence["Matrix"]) -> "Matrix":
        """Stack matrices with equal column counts vertically."""
        if not matrices:
            raise ValueError("nothing to stack")
        cols = matrices[0].cols
        for m in matrices:
            if m.cols != cols:
                raise DimensionMismatch("column counts differ")
        entries = [x for m in matrices for x in m.entries]
        return cls(sum(m.rows for m in matrices), cols, entries)

    # -- access ------------------------------------------------------------

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    # -- algebra -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            n, m, k = self.rows, self.cols, other.cols
            out = [_ZERO] * (n * k)
            for i in range(n):
                base = i * m
                for l in range(m):
                    a = self.entries[base + l]
                    if a:
                        obase = l * k
                        for j in range(k):
                            b = other.entries[obase + j]
                            if b:
                                out[i * k + j] += a * b
            return Matrix(n, k, out)
        scalar = rat(other)
        return Matrix(self.rows, self.cols, [scalar * a for a in self.entries])

    def __rmul__(self, other):
        return self.__mul__(other)

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product."""
        v = _as_fraction_row(vec)
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.cols} columns")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            out.append(sum((self.entries[base + j] * v[j] for j in range(self.cols)), _ZERO))
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.at(i, i) for i in range(self.rows)), _ZERO)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def flatten(self) -> tuple[Fraction, ...]:
        return self.entries

    def rank(self) -> int:
        return rref(self)[1]

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices can be inverted")
        n = self.rows
        aug = Matrix.from_rows(
            [list(self.row(i)) + [_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        )
        frac_rows, pivots = _rref_rows(aug)
        if list(pivots) != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix.from_rows([list(row)[n:] for row in frac_rows])

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {rows})"


def _scale_row_to_ints(row: Sequence[Fraction]) -> list[int]:
    """Clear denominators: multiply by the lcm so every entry is an integer."""
    l = 1
    for x in row:
        if x:
            d = x.denominator
            l = l * d // gcd(l, d)
    return [int(x.numerator * (l // x.denominator)) for x in row]


def _reduced_int_rows(m: Matrix) -> tuple[list[list[int]], list[int]]:
    rows = [_scale_row_to_ints(m.row(i)) for i in range(m.rows)]
    pivots = reduce_int_rows(rows)
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form and rank.

    The result has the same shape as the input, with zero rows collected at
    the bottom; pivot entries are 1 and are the only nonzero entries in
    their columns.
    """
    rows, pivots = _reduced_int_rows(m)
    out: list[Fraction] = []
    for idx, c in enumerate(pivots):
        p = rows[idx][c]
        out.extend(Fraction(x, p) for x in rows[idx])
    out.extend([_ZERO] * ((m.rows - len(pivots)) * m.cols))
    return Matrix(m.rows, m.cols, out), len(pivots)


def _rref_rows(m: Matrix) -> tuple[list[tuple[Fraction, ...]], list[int]]:
    """Nonzero RREF rows plus their pivot columns."""
    rows, pivots = _reduced_int_rows(m)
    frac_rows = []
    for idx, c in enumerate(pivots):
        p = rows[idx][c]
        frac_rows.append(tuple(Fraction(x, p) for x in rows[idx]))
    return frac_rows, pivots


def nullspace(m: Matrix) -> "Subspace":
    """Kernel of ``m`` as a canonical subspace of the column space."""
    frac_rows, pivots = _rref_rows(m)
    n = m.cols
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    basis = []
    for f in free_cols:
        v = [_ZERO] * n
        v[f] = _ONE
        for ridx, p in enumerate(pivots):
            coeff = frac_rows[ridx][f]
            if coeff:
                v[p] = -coeff
        basis.append(v)
    return Subspace.span(basis, n)


def solve(a: Matrix, b: Sequence) -> tuple[Fraction, ...] | None:
    """One solution ``x`` of ``a @ x = b``, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    bvec = _as_fraction_row(b)
    if len(bvec) != a.rows:
        raise DimensionMismatch(f"rhs of length {len(bvec)} against {a.rows} rows")
    aug = Matrix.from_rows([list(a.row(i)) + [bvec[i]] for i in range(a.rows)])
    frac_rows, pivots = _rref_rows(aug)
    if a.cols in pivots:
        return None
    x = [_ZERO] * a.cols
    for ridx, p in enumerate(pivots):
        x[p] = frac_rows[ridx][a.cols]
    return tuple(x)


class Subspace:
    """A linear subspace of Q^n in canonical form.

    The basis matrix is in reduced row-echelon form with no zero rows, so two
    subspaces of the same ambient space are equal exactly when their basis
    matrices are entrywise equal.
    """

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, basis: Matrix, _pivots: tuple[int, ...] | None = None):
        if basis.cols != ambient_dim:
            raise DimensionMismatch("basis columns must match the ambient dimension")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        if _pivots is None:
            _pivots = tuple(self._find_pivots(basis))
        object.__setattr__(self, "_pivots", _pivots)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @staticmethod
    def _find_pivots(basis: Matrix) -> list[int]:
        pivots = []
        for i in range(basis.rows):
            row = basis.row(i)
            for j, x in enumerate(row):
                if x:
                    pivots.append(j)
                    break
        return pivots

    # -- construction ------------------------------------------------------

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vecs = [_as_fraction_row(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(
                    f"vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
        if not vecs:
            return cls(ambient_dim, Matrix(0, ambient_dim, []))
        frac_rows, pivots = _rref_rows(Matrix.from_rows(vecs))
        return cls(
            ambient_dim,
            Matrix.from_rows(frac_rows) if frac_rows else Matrix(0, ambient_dim, []),
            tuple(pivots),
        )

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix(0, ambient_dim, []))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim), tuple(range(ambient_dim)))

    # -- basic queries -----------------------------------------------------

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self) -> list[tuple[Fraction, ...]]:
        return [self.basis.row(i) for i in range(self.basis.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def _residual(self, vec: Sequence) -> list[Fraction]:
        v = list(_as_fraction_row(vec))
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector of length {len(v)} in ambient dimension {self.ambient_dim}"
            )
        for ridx, p in enumerate(self._pivots):
            coeff = v[p]
            if coeff:
                row = self.basis.row(ridx)
                for j in range(self.ambient_dim):
                    if row[j]:
                        v[j] -= coeff * row[j]
        return v

    def contains(self, vec: Sequence) -> bool:
        return all(x == 0 for x in self._residual(vec))

    def coordinates(self, vec: Sequence) -> tuple[Fraction, ...] | None:
        """Coefficients of ``vec`` in the canonical basis, or None if outside."""
        v = _as_fraction_row(vec)
        if not self.contains(v):
            return None
        return tuple(v[p] for p in self._pivots)

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return all(self.contains(row) for row in other.basis_vectors())

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    # -- lattice operations ------------------------------------------------

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return Subspace.span(
            self.basis_vectors() + other.basis_vectors(), self.ambient_dim
        )

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked coefficient system."""
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        p, q = self.dim, other.dim
        if p == 0 or q == 0:
            return Subspace.zero(self.ambient_dim)
        # columns: coefficients (u, v) with sum(u_i a_i) + sum(v_j b_j) = 0
        stacked = Matrix.stack([self.basis, other.basis]).transpose()
        combos = nullspace(stacked)
        vectors = []
        for w in combos.basis_vectors():
            vec = [_ZERO] * self.ambient_dim
            for i in range(p):
                if w[i]:
                    row = self.basis.row(i)
                    for j in range(self.ambient_dim):
                        if row[j]:
                            vec[j] += w[i] * row[j]
            vectors.append(vec)
        return Subspace.span(vectors, self.ambient_dim)

    def project_block(self, start: int, stop: int) -> "Subspace":
        """Image of the basis under restriction to coordinates [start, stop)."""
        if not (0 <= start <= stop <= self.ambient_dim):
            raise DimensionMismatch(f"bad coordinate range [{start}, {stop})")
        width = stop - start
        return Subspace.span(
            [row[start:stop] for row in self.basis_vectors()], width
        )
