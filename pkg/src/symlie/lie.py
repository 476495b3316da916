"""The star action on polynomials and symmetry Lie algebras of ideals.

For an n x n matrix g, the action on a polynomial p is the derivation

    g * p = -sum_{a,b} g[a][b] * x_b * dp/dx_a,

the unique extension of g * x_a = -sum_b g[a][b] x_b with g * const = 0.
A matrix g belongs to the symmetry Lie algebra of a homogeneous ideal I
exactly when g * f lands back in [I]_d for every basis element f of the
degree-d graded component, d at least the maximal generator degree.  That
membership condition is linear in the entries of g, so the algebra is the
exact nullspace of one linear system over Q(i).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .graded import GradedBasis, IdealSpec, PreconditionError, graded_basis
from .linalg import RowReducer, ScalarMatrix, nullspace, span_reducer, sparse_rref
from .poly import Polynomial, monomial_basis
from .scalar import ONE, ZERO, Scalar


def star_action(g: ScalarMatrix, p: Polynomial) -> Polynomial:
    """Apply the derivation g * p in closed form."""
    n = p.ring.arity
    if g.n != n:
        raise PreconditionError("matrix size must equal ring arity")
    out: dict = {}
    for a in range(n):
        dp = p.derivative(a)
        if not dp:
            continue
        row = g.rows[a]
        for b in range(n):
            c = row[b]
            if not c:
                continue
            for m, k in dp.terms.items():
                m2 = list(m)
                m2[b] += 1
                key = tuple(m2)
                add = k * c
                s = out.get(key)
                if s is None:
                    out[key] = -add
                else:
                    s = s - add
                    if s:
                        out[key] = s
                    else:
                        del out[key]
    return Polynomial(p.ring, out)


def _elementary_star_vectors(f: Polynomial, frame_index: dict, n: int) -> list:
    """vec(E_ab * f) for all (a, b), row-major; sparse dicts over the frame."""
    out = []
    for a in range(n):
        dp = f.derivative(a)
        for b in range(n):
            vec: dict = {}
            for m, k in dp.terms.items():
                m2 = list(m)
                m2[b] += 1
                col = frame_index[tuple(m2)]
                s = vec.get(col)
                if s is None:
                    vec[col] = -k
                else:
                    s = s - k
                    if s:
                        vec[col] = s
                    else:
                        del vec[col]
            out.append(vec)
    return out


@dataclass(frozen=True)
class StabilizerSystem:
    """Linear constraints on the n^2 unknowns g11..gnn (row-major)."""

    n: int
    degrees: tuple  # graded degrees stacked into this system
    rows: tuple  # sparse rows, deduplicated, deterministic order
    graded_rank: int  # rank of the graded basis at the largest degree used
    vacuous: bool  # True when every used graded component was zero

    @property
    def unknowns(self) -> int:
        return self.n * self.n

    def nullspace_vectors(self) -> list:
        return nullspace(self.rows, self.unknowns)

    def row_space(self) -> RowReducer:
        return sparse_rref(self.rows)


def _system_rows_for_degree(ideal: IdealSpec, d: int) -> tuple:
    """Rows constraining g so that g * [I]_d stays inside [I]_d."""
    basis = graded_basis(ideal, d)
    n = ideal.ring.arity
    if basis.rank == 0:
        return (), 0
    frame_index = {m: i for i, m in enumerate(basis.frame)}
    member_space = span_reducer(basis.member_vectors)
    rows = []
    seen = set()
    for f in basis.members:
        columns = _elementary_star_vectors(f, frame_index, n)
        residuals = [member_space.reduce(vec) for vec in columns]
        coords = sorted({c for r in residuals for c in r})
        for coord in coords:
            row = {}
            for unknown, residual in enumerate(residuals):
                v = residual.get(coord)
                if v is not None:
                    row[unknown] = v
            key = tuple(sorted(row.items()))
            if key not in seen:
                seen.add(key)
                rows.append(row)
    return tuple(rows), basis.rank


def stabilizer_system(ideal: IdealSpec, d: int, graded_only: bool = False) -> StabilizerSystem:
    """Constraint system whose nullspace is the stabilizer of [I]_d.

    Requires d >= max generator degree unless graded_only is set, in which
    case the nullspace is only the graded stabilizer at degree d.  When
    [I]_d = 0 the system is empty (every matrix stabilizes) and the result
    is flagged vacuous.
    """
    ideal.require_homogeneous()
    if d < 0:
        raise PreconditionError("degree must be nonnegative")
    maxdeg = ideal.max_degree()
    if d < maxdeg and not graded_only:
        raise PreconditionError(
            f"degree {d} is below the maximal generator degree {maxdeg}; "
            "pass graded_only=True to compute the graded stabilizer"
        )
    rows, rank = _system_rows_for_degree(ideal, d)
    vacuous = rank == 0
    if vacuous:
        warnings.warn(
            f"graded component at degree {d} is zero; stabilizer is all of M_n",
            stacklevel=2,
        )
    return StabilizerSystem(
        n=ideal.ring.arity, degrees=(d,), rows=rows, graded_rank=rank, vacuous=vacuous
    )


@dataclass(frozen=True)
class LieAlgebraBasis:
    """Canonical basis of a symmetry Lie algebra.

    The basis comes from the reduced row echelon parameterization of the
    stabilizer nullspace over the unknowns g11, g12, ..., gnn: one matrix
    per free unknown, normalized to 1 at its own free position.
    """

    n: int
    basis: tuple  # ScalarMatrix elements
    degree_used: Union[int, tuple]
    graded_rank: int
    system_rows: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def vectors(self) -> list:
        return [{i: c for i, c in enumerate(m.vec()) if c} for m in self.basis]

    def span(self) -> RowReducer:
        return span_reducer(self.vectors())


def _algebra_from_rows(rows: tuple, n: int, degree_used, graded_rank: int) -> LieAlgebraBasis:
    vectors = nullspace(rows, n * n)
    basis = []
    for vec in vectors:
        entries = [ZERO] * (n * n)
        for col, c in vec.items():
            entries[col] = c
        basis.append(ScalarMatrix.from_vec(entries, n))
    return LieAlgebraBasis(
        n=n,
        basis=tuple(basis),
        degree_used=degree_used,
        graded_rank=graded_rank,
        system_rows=len(rows),
    )


def symmetry_lie_algebra(ideal: IdealSpec, degree: Optional[int] = None,
                         graded_only: bool = False) -> LieAlgebraBasis:
    """Symmetry Lie algebra of a homogeneous ideal.

    By default the degree is the maximal generator degree, which computes
    the full symmetry algebra when the ideal is prime.  An explicit lower
    degree needs graded_only and yields the graded stabilizer only.
    """
    if not ideal.generators:
        raise PreconditionError("empty generator list")
    d = ideal.max_degree() if degree is None else degree
    system = stabilizer_system(ideal, d, graded_only=graded_only)
    return _algebra_from_rows(system.rows, system.n, d, system.graded_rank)


def symmetry_lie_algebra_multidegree(ideal: IdealSpec, degrees: Sequence[int]) -> LieAlgebraBasis:
    """Intersection of graded stabilizers over several degrees.

    This is the right notion for non-prime ideals: stack the constraint
    systems of all listed degrees and take one nullspace.
    """
    if not degrees:
        raise PreconditionError("need at least one degree")
    ideal.require_homogeneous()
    all_rows = []
    seen = set()
    rank = 0
    for d in degrees:
        rows, r = _system_rows_for_degree(ideal, d)
        rank = max(rank, r)
        for row in rows:
            key = tuple(sorted(row.items()))
            if key not in seen:
                seen.add(key)
                all_rows.append(row)
    return _algebra_from_rows(tuple(all_rows), ideal.ring.arity,
                              tuple(degrees), rank)


def membership(algebra: Union[LieAlgebraBasis, StabilizerSystem],
               matrix: ScalarMatrix) -> bool:
    """Is the matrix in the span of the algebra (or the system's nullspace)?"""
    if isinstance(algebra, StabilizerSystem):
        if matrix.n != algebra.n:
            raise PreconditionError("matrix size mismatch")
        vec = matrix.vec()
        for row in algebra.rows:
            acc = ZERO
            for col, c in row.items():
                acc = acc + c * vec[col]
            if acc:
                return False
        return True
    if matrix.n != algebra.n:
        raise PreconditionError("matrix size mismatch")
    reducer = algebra.span()
    target = {i: c for i, c in enumerate(matrix.vec()) if c}
    return reducer.contains(target)


def bracket_closure_check(algebra: LieAlgebraBasis) -> bool:
    """Check [A, B] stays in the span for all basis pairs."""
    reducer = algebra.span()
    mats = algebra.basis
    for i, a in enumerate(mats):
        for b in mats[i + 1 :]:
            comm = a.commutator(b)
            vec = {k: c for k, c in enumerate(comm.vec()) if c}
            if not reducer.contains(vec):
                return False
    return True


def conjugate_basis(algebra: Union[LieAlgebraBasis, Sequence[ScalarMatrix]],
                    b: ScalarMatrix) -> list:
    """Conjugate every basis element: A -> B^-1 A B.

    If J is the ideal obtained by substituting x_i -> sum_j B[i][j] x_j,
    then the symmetry algebra of J is exactly B^-1 (algebra of I) B; this
    orientation was pinned by a brute-force check on a quadric ideal.
    """
    mats = algebra.basis if isinstance(algebra, LieAlgebraBasis) else algebra
    if not b.is_invertible():
        raise PreconditionError("conjugating matrix must be invertible")
    binv = b.inverse()
    return [binv * a * b for a in mats]


def diagonal_subalgebra_dim(algebra: Union[LieAlgebraBasis, Sequence[ScalarMatrix]]) -> int:
    """Dimension of the diagonal matrices inside the span.

    Solves for span coefficients that kill every off-diagonal entry; this
    is a lower bound for a torus visible in the given coordinates.
    """
    mats = list(algebra.basis) if isinstance(algebra, LieAlgebraBasis) else list(algebra)
    if not mats:
        return 0
    n = mats[0].n
    vectors = [m.vec() for m in mats]
    # one constraint row per off-diagonal position, unknowns = span coefficients
    rows = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            pos = i * n + j
            row = {k: vec[pos] for k, vec in enumerate(vectors) if vec[pos]}
            if row:
                rows.append(row)
    return len(nullspace(rows, len(mats)))
