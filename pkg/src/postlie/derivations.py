"""Weighted derivation spaces of a Lie algebra, computed as exact nullspaces.

For weights (alpha, beta, gamma) the space D(alpha, beta, gamma) collects the
endomorphisms phi with

    alpha phi([x,y]) = beta [phi(x), y] + gamma [x, phi(y)]   for all x, y.

Quasiderivations pair phi with a closing map tau, generalized derivations a
triple (phi, sigma, tau); those spaces live in doubled and tripled coordinate
blocks and their phi parts are block projections.  Constraint rows are
enumerated over *all ordered* basis pairs including the diagonal: for
beta != gamma the two orientations of a pair are genuinely different
equations, and dropping them would make the computed space depend on the
chosen basis.

Every space constructor has a matching residual function that substitutes a
candidate back into the defining identity with plain matrix arithmetic; the
residual path never touches the nullspace solver, so it serves as an
independent membership oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lie import LieAlgebra
from .linalg import Matrix, Subspace, nullspace, rat

_ZERO = Fraction(0)


@dataclass(frozen=True)
class DerivationWeights:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    @classmethod
    def of(cls, alpha, beta, gamma) -> "DerivationWeights":
        return cls(rat(alpha), rat(beta), rat(gamma))

    def scaled(self, c) -> "DerivationWeights":
        c = rat(c)
        return DerivationWeights(c * self.alpha, c * self.beta, c * self.gamma)


def matrix_from_flat(vec: Sequence, n: int) -> Matrix:
    """Reshape a row-major flattened endomorphism back into a matrix."""
    return Matrix(n, n, list(vec))


def _canonical_rows(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Drop zero rows, scale each row to leading coefficient 1, deduplicate."""
    seen = set()
    out = []
    for row in rows:
        lead = next((x for x in row if x), None)
        if lead is None:
            continue
        scaled = tuple(x / lead for x in row)
        if scaled not in seen:
            seen.add(scaled)
            out.append(list(scaled))
    return out


def _constraint_matrix(rows: list[list[Fraction]], width: int) -> Matrix:
    rows = _canonical_rows(rows)
    if not rows:
        return Matrix(0, width, [])
    return Matrix.from_rows(rows)


def dspace(l: LieAlgebra, weights: DerivationWeights) -> Subspace:
    """The weighted derivation space as a subspace of flattened endomorphisms."""
    l.require_valid()
    n = l.dim
    nn = n * n
    a, b, g = weights.alpha, weights.beta, weights.gamma
    rows = []
    for i in range(n):
        for j in range(n):
            cij = l.c[i][j]
            for k in range(n):
                row = [_ZERO] * nn
                if a:
                    for m in range(n):
                        if cij[m]:
                            row[k * n + m] += a * cij[m]
                if b:
                    for m in range(n):
                        v = l.c[m][j][k]
                        if v:
                            row[m * n + i] -= b * v
                if g:
                    for m in range(n):
                        v = l.c[i][m][k]
                        if v:
                            row[m * n + j] -= g * v
                rows.append(row)
    return nullspace(_constraint_matrix(rows, nn))


def weighted_residuals(
    l: LieAlgebra, weights: DerivationWeights, phi: Matrix
) -> list[tuple[tuple[int, int], tuple[Fraction, ...]]]:
    """Direct substitution of a candidate into the defining identity.

    Returns the nonzero residual vectors over all ordered basis pairs; empty
    means membership.  Deliberately routed through bracket evaluation, not
    the solver.
    """
    n = l.dim
    out = []
    for i in range(n):
        ei = tuple(Fraction(int(t == i)) for t in range(n))
        for j in range(n):
            ej = tuple(Fraction(int(t == j)) for t in range(n))
            lhs = tuple(weights.alpha * x for x in phi.apply(l.c[i][j]))
            rhs_b = l.bracket(phi.column(i), ej)
            rhs_g = l.bracket(ei, phi.column(j))
            res = tuple(
                lhs[k] - weights.beta * rhs_b[k] - weights.gamma * rhs_g[k]
                for k in range(n)
            )
            if any(res):
                out.append(((i, j), res))
    return out


def ad_span(l: LieAlgebra) -> Subspace:
    """Span of the flattened adjoint matrices."""
    n = l.dim
    return Subspace.span([l.ad_basis(i).flatten() for i in range(n)], n * n)


def identity_span(n: int) -> Subspace:
    return Subspace.span([Matrix.identity(n).flatten()], n * n)


@dataclass(frozen=True)
class NamedSpaces:
    derivations: Subspace
    centroid: Subspace
    quasicentroid: Subspace
    ad_space: Subspace
    centroid_matches_commutant: bool


def _commutant_space(l: LieAlgebra) -> Subspace:
    """Maps commuting with every adjoint operator; must equal the centroid."""
    n = l.dim
    nn = n * n
    rows = []
    for t in range(n):
        a = l.ad_basis(t)
        for r in range(n):
            for c in range(n):
                row = [_ZERO] * nn
                for m in range(n):
                    amc = a.at(m, c)
                    if amc:
                        row[r * n + m] += amc
                    arm = a.at(r, m)
                    if arm:
                        row[m * n + c] -= arm
                rows.append(row)
    return nullspace(_constraint_matrix(rows, nn))


def named_spaces(l: LieAlgebra) -> NamedSpaces:
    centroid = dspace(l, DerivationWeights.of(1, 1, 0))
    return NamedSpaces(
        derivations=dspace(l, DerivationWeights.of(1, 1, 1)),
        centroid=centroid,
        quasicentroid=dspace(l, DerivationWeights.of(0, 1, -1)),
        ad_space=ad_span(l),
        centroid_matches_commutant=centroid == _commutant_space(l),
    )


@dataclass(frozen=True)
class QuasiDerivationResult:
    pair_space: Subspace
    phi_projection: Subspace


def qder_pairs(l: LieAlgebra) -> QuasiDerivationResult:
    """Pairs (phi, tau) with tau([x,y]) = [phi x, y] + [x, phi y].

    The quasiderivations are the phi-block projection of the pair space.
    """
    l.require_valid()
    n = l.dim
    nn = n * n
    rows = []
    for i in range(n):
        for j in range(n):
            cij = l.c[i][j]
            for k in range(n):
                row = [_ZERO] * (2 * nn)
                for m in range(n):
                    if cij[m]:
                        row[nn + k * n + m] += cij[m]
                    v = l.c[m][j][k]
                    if v:
                        row[m * n + i] -= v
                    v = l.c[i][m][k]
                    if v:
                        row[m * n + j] -= v
                rows.append(row)
    pair_space = nullspace(_constraint_matrix(rows, 2 * nn))
    return QuasiDerivationResult(pair_space, pair_space.project_block(0, nn))


def quasi_residuals(
    l: LieAlgebra, phi: Matrix, tau: Matrix
) -> list[tuple[tuple[int, int], tuple[Fraction, ...]]]:
    n = l.dim
    out = []
    for i in range(n):
        ei = tuple(Fraction(int(t == i)) for t in range(n))
        for j in range(n):
            ej = tuple(Fraction(int(t == j)) for t in range(n))
            lhs = tau.apply(l.c[i][j])
            rhs_a = l.bracket(phi.column(i), ej)
            rhs_b = l.bracket(ei, phi.column(j))
            res = tuple(lhs[k] - rhs_a[k] - rhs_b[k] for k in range(n))
            if any(res):
                out.append(((i, j), res))
    return out


@dataclass(frozen=True)
class GeneralizedDerivationResult:
    triple_space: Subspace
    phi_projection: Subspace


def gder_triples(l: LieAlgebra) -> GeneralizedDerivationResult:
    """Triples (phi, sigma, tau) with tau([x,y]) = [phi x, y] + [x, sigma y]."""
    l.require_valid()
    n = l.dim
    nn = n * n
    rows = []
    for i in range(n):
        for j in range(n):
            cij = l.c[i][j]
            for k in range(n):
                row = [_ZERO] * (3 * nn)
                for m in range(n):
                    if cij[m]:
                        row[2 * nn + k * n + m] += cij[m]
                    v = l.c[m][j][k]
                    if v:
                        row[m * n + i] -= v
                    v = l.c[i][m][k]
                    if v:
                        row[nn + m * n + j] -= v
                rows.append(row)
    triple_space = nullspace(_constraint_matrix(rows, 3 * nn))
    return GeneralizedDerivationResult(triple_space, triple_space.project_block(0, nn))


def generalized_residuals(
    l: LieAlgebra, phi: Matrix, sigma: Matrix, tau: Matrix
) -> list[tuple[tuple[int, int], tuple[Fraction, ...]]]:
    n = l.dim
    out = []
    for i in range(n):
        ei = tuple(Fraction(int(t == i)) for t in range(n))
        for j in range(n):
            ej = tuple(Fraction(int(t == j)) for t in range(n))
            lhs = tau.apply(l.c[i][j])
            rhs_a = l.bracket(phi.column(i), ej)
            rhs_b = l.bracket(ei, sigma.column(j))
            res = tuple(lhs[k] - rhs_a[k] - rhs_b[k] for k in range(n))
            if any(res):
                out.append(((i, j), res))
    return out


@dataclass(frozen=True)
class ChainReport:
    """The inclusion chain and sum identities among the named spaces."""

    ad_in_derivations: bool
    derivations_in_quasi: bool
    quasi_in_generalized: bool
    generalized_in_end: bool
    quasi_plus_quasicentroid_equals_generalized: bool
    derivations_plus_centroid_in_quasi: bool

    @property
    def all_ok(self) -> bool:
        return all(
            (
                self.ad_in_derivations,
                self.derivations_in_quasi,
                self.quasi_in_generalized,
                self.generalized_in_end,
                self.quasi_plus_quasicentroid_equals_generalized,
                self.derivations_plus_centroid_in_quasi,
            )
        )

    def as_dict(self) -> dict:
        return {
            "ad_in_derivations": self.ad_in_derivations,
            "derivations_in_quasi": self.derivations_in_quasi,
            "quasi_in_generalized": self.quasi_in_generalized,
            "generalized_in_end": self.generalized_in_end,
            "quasi_plus_quasicentroid_equals_generalized": self.quasi_plus_quasicentroid_equals_generalized,
            "derivations_plus_centroid_in_quasi": self.derivations_plus_centroid_in_quasi,
            "all_ok": self.all_ok,
        }


def verify_chain(l: LieAlgebra) -> ChainReport:
    spaces = named_spaces(l)
    quasi = qder_pairs(l).phi_projection
    generalized = gder_triples(l).phi_projection
    full = Subspace.full(l.dim * l.dim)
    return ChainReport(
        ad_in_derivations=spaces.derivations.contains_subspace(spaces.ad_space),
        derivations_in_quasi=quasi.contains_subspace(spaces.derivations),
        quasi_in_generalized=generalized.contains_subspace(quasi),
        generalized_in_end=full.contains_subspace(generalized),
        quasi_plus_quasicentroid_equals_generalized=(
            quasi + spaces.quasicentroid == generalized
        ),
        derivations_plus_centroid_in_quasi=quasi.contains_subspace(
            spaces.derivations + spaces.centroid
        ),
    )


@dataclass(frozen=True)
class CaseTableReport:
    """Dimensions of the standard weight cases plus the reduction identities."""

    dims: dict
    sweep_dims: dict
    one_sided_dims: dict
    antisymmetric_reduction_holds: bool
    one_sided_reductions: dict

    def as_dict(self) -> dict:
        return {
            "dims": dict(self.dims),
            "sweep_dims": dict(self.sweep_dims),
            "one_sided_dims": dict(self.one_sided_dims),
            "antisymmetric_reduction_holds": self.antisymmetric_reduction_holds,
            "one_sided_reductions": dict(self.one_sided_reductions),
        }


def case_table(l: LieAlgebra, deltas: Sequence) -> CaseTableReport:
    """Survey the classical weight cases for a caller-supplied delta list.

    Also verifies the two reduction identities as subspace equalities:
    D(1,1,-1) = D(0,1,-1) meet D(1,0,0), and for each delta
    D(delta,1,0) = D(0,1,-1) meet D(2 delta,1,1).
    """
    deltas = [rat(d) for d in deltas]
    space = {}

    def d(a, b, g) -> Subspace:
        key = (rat(a), rat(b), rat(g))
        if key not in space:
            space[key] = dspace(l, DerivationWeights.of(*key))
        return space[key]

    dims = {
        "D(0,0,0)": d(0, 0, 0).dim,
        "D(1,0,0)": d(1, 0, 0).dim,
        "D(0,1,-1)": d(0, 1, -1).dim,
        "D(1,1,-1)": d(1, 1, -1).dim,
        "D(0,1,0)": d(0, 1, 0).dim,
        "D(0,1,1)": d(0, 1, 1).dim,
    }
    sweep = {str(delta): d(delta, 1, 1).dim for delta in deltas}
    one_sided = {str(delta): d(delta, 1, 0).dim for delta in deltas}
    anti_reduction = d(1, 1, -1) == (d(0, 1, -1) & d(1, 0, 0))
    one_sided_reductions = {
        str(delta): d(delta, 1, 0) == (d(0, 1, -1) & d(2 * delta, 1, 1))
        for delta in deltas
    }
    return CaseTableReport(dims, sweep, one_sided, anti_reduction, one_sided_reductions)
