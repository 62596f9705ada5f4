"""Ground-truth algebra fixtures in frozen basis orders.

The bracket tables of the small fixtures are transcribed constants, not
generated; a test compares the transcribed special linear tables against the
matrix-unit construction so transcription drift is caught on either side.
Basis orders are frozen because the block maps and derivation-space bases
elsewhere in the package are order-sensitive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .lie import LieAlgebra, direct_sum
from .linalg import Matrix, Subspace

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LieAlgebra
    params: tuple | None = None
    subspaces: Mapping[str, Subspace] = field(default_factory=dict)


def _unit_span(indices, dim) -> Subspace:
    vectors = []
    for i in indices:
        v = [_ZERO] * dim
        v[i] = _ONE
        vectors.append(v)
    return Subspace.span(vectors, dim)


# sl2 in the basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
_SL2_BRACKETS = {
    (0, 1): {2: 1},
    (0, 2): {0: -2},
    (1, 2): {1: 2},
}

# sl3 in the matrix-unit basis
#   e1=E12, e2=E13, e3=E21, e4=E23, e5=E31, e6=E32, e7=E11-E22, e8=E22-E33
_SL3_BRACKETS = {
    (0, 2): {6: 1},
    (0, 3): {1: 1},
    (0, 4): {5: -1},
    (0, 6): {0: -2},
    (0, 7): {0: 1},
    (1, 2): {3: -1},
    (1, 4): {6: 1, 7: 1},
    (1, 5): {0: 1},
    (1, 6): {1: -1},
    (1, 7): {1: -1},
    (2, 5): {4: -1},
    (2, 6): {2: 2},
    (2, 7): {2: -1},
    (3, 4): {2: 1},
    (3, 5): {7: 1},
    (3, 6): {3: 1},
    (3, 7): {3: -2},
    (4, 6): {4: 1},
    (4, 7): {4: 1},
    (5, 6): {5: -1},
    (5, 7): {5: 2},
}


def _special_linear(n: int) -> tuple[LieAlgebra, dict[str, Subspace], list[str]]:
    """Traceless matrices from matrix-unit arithmetic.

    Basis order: all off-diagonal units E_ij with (i, j) lexicographic,
    followed by the Cartan differences E_ii - E_{i+1,i+1}.
    """
    if n < 2:
        raise ValueError("special linear algebra needs n >= 2")
    positions = [(i, j) for i in range(n) for j in range(n) if i != j]
    dim = n * n - 1

    def unit_product(a, b, c, d):
        # E_ab E_cd = delta_bc E_ad
        return (a, d) if b == c else None

    def commutator_coords(x: dict, y: dict) -> list[Fraction]:
        acc: dict[tuple[int, int], Fraction] = {}
        for (a, b), va in x.items():
            for (c, d), vb in y.items():
                if b == c:
                    acc[(a, d)] = acc.get((a, d), _ZERO) + va * vb
                if d == a:
                    acc[(c, b)] = acc.get((c, b), _ZERO) - va * vb
        coords = [_ZERO] * dim
        for idx, (i, j) in enumerate(positions):
            coords[idx] = acc.get((i, j), _ZERO)
        running = _ZERO
        for i in range(n - 1):
            running += acc.get((i, i), _ZERO)
            coords[len(positions) + i] = running
        return coords

    basis: list[dict] = [{pos: _ONE} for pos in positions]
    labels = [f"E{i + 1}{j + 1}" for i, j in positions]
    for i in range(n - 1):
        basis.append({(i, i): _ONE, (i + 1, i + 1): -_ONE})
        labels.append(f"h{i + 1}")
    c = [[commutator_coords(basis[i], basis[j]) for j in range(dim)] for i in range(dim)]
    upper = [idx for idx, (i, j) in enumerate(positions) if i < j]
    lower = [idx for idx, (i, j) in enumerate(positions) if i > j]
    cartan = list(range(len(positions), dim))
    subspaces = {
        "n+": _unit_span(upper, dim),
        "n-": _unit_span(lower, dim),
        "h": _unit_span(cartan, dim),
        "b+": _unit_span(cartan + upper, dim),
        "b-": _unit_span(cartan + lower, dim),
    }
    return LieAlgebra(c, labels), subspaces, labels


def _sl3_subspaces() -> dict[str, Subspace]:
    dim = 8
    return {
        "n+": _unit_span([0, 1, 3], dim),
        "n-": _unit_span([2, 4, 5], dim),
        "h": _unit_span([6, 7], dim),
        "b+": _unit_span([6, 7, 0, 1, 3], dim),
        "b-": _unit_span([6, 7, 2, 4, 5], dim),
    }


def get(name: str, n: int | None = None) -> CatalogEntry:
    """Return a validated fixture by name.

    Known names: sl2, sl3, sln (with n), sl2+sl2, r31, heisenberg,
    abelian (with n).
    """
    if name == "sl2":
        alg = LieAlgebra.from_brackets(3, _SL2_BRACKETS, labels=("e", "f", "h"))
        subspaces = {
            "n+": _unit_span([0], 3),
            "n-": _unit_span([1], 3),
            "h": _unit_span([2], 3),
            "b+": _unit_span([2, 0], 3),
            "b-": _unit_span([2, 1], 3),
        }
        return CatalogEntry(name, alg, subspaces=subspaces)
    if name == "sl3":
        labels = tuple(f"e{i}" for i in range(1, 9))
        alg = LieAlgebra.from_brackets(8, _SL3_BRACKETS, labels=labels)
        return CatalogEntry(name, alg, subspaces=_sl3_subspaces())
    if name == "sln":
        if n is None:
            raise ValueError("sln needs the parameter n")
        alg, subspaces, _ = _special_linear(n)
        return CatalogEntry(name, alg, params=(n,), subspaces=subspaces)
    if name == "sl2+sl2":
        half = get("sl2").algebra
        alg = direct_sum(half, half)
        alg = LieAlgebra(alg.c, labels=("e1", "f1", "h1", "e2", "f2", "h2"))
        return CatalogEntry(name, alg)
    if name == "r31":
        alg = LieAlgebra.from_brackets(
            3, {(0, 1): {1: 1}, (0, 2): {2: 1}}, labels=("e1", "e2", "e3")
        )
        return CatalogEntry(name, alg)
    if name == "heisenberg":
        alg = LieAlgebra.from_brackets(3, {(0, 1): {2: 1}}, labels=("e1", "e2", "e3"))
        return CatalogEntry(name, alg)
    if name == "abelian":
        if n is None:
            raise ValueError("abelian needs the parameter n")
        if n < 0:
            raise ValueError("dimension must be nonnegative")
        c = [[[_ZERO] * n for _ in range(n)] for _ in range(n)]
        return CatalogEntry(name, LieAlgebra(c), params=(n,))
    raise ValueError(f"unknown catalog entry {name!r}")


CATALOG_NAMES = ("sl2", "sl3", "sln", "sl2+sl2", "r31", "heisenberg", "abelian")


# The distinguished factor-mixing map on sl2+sl2: zero except for a lower-left
# block sending the first factor into the second.
_CROSS_BLOCK = (
    (4, -1, -4),
    (-1, 1, 2),
    (-2, 1, 3),
)


def cross_factor_phi() -> Matrix:
    """The 6x6 block map behind the nontrivial structure on sl2+sl2."""
    entries = []
    for i in range(6):
        for j in range(6):
            if i >= 3 and j < 3:
                entries.append(Fraction(_CROSS_BLOCK[i - 3][j]))
            else:
                entries.append(_ZERO)
    return Matrix(6, 6, entries)


def cross_factor_example():
    """The verified post-Lie structure on sl2+sl2 induced by the block map.

    Returns the pair of the map and the induced structure; importing lazily
    keeps this module a leaf for the products machinery.
    """
    from .products import phi_induced

    entry = get("sl2+sl2")
    phi = cross_factor_phi()
    result = phi_induced(entry.algebra, phi)
    return phi, result.pair


_SPLIT_CHOICES = {
    "b+|n-": ("b+", "n-"),
    "n-|b+": ("n-", "b+"),
    "b-|n+": ("b-", "n+"),
    "n+|b-": ("n+", "b-"),
}


def triangular_split(n: int, choice: str) -> tuple[Subspace, Subspace]:
    """Complementary subalgebra pair from the triangular decomposition of sln.

    ``choice`` picks which side is the Borel part and which the opposite
    nilpotent part, e.g. "b+|n-" returns (upper Borel, strictly lower part).
    """
    if choice not in _SPLIT_CHOICES:
        raise ValueError(f"unknown split choice {choice!r}; options: {sorted(_SPLIT_CHOICES)}")
    entry = get("sln", n)
    left, right = _SPLIT_CHOICES[choice]
    return entry.subspaces[left], entry.subspaces[right]
