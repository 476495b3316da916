import warnings

import pytest

from symlie import (
    IdealSpec,
    PolyRing,
    Polynomial,
    PreconditionError,
    ScalarMatrix,
    bracket_closure_check,
    change_variables,
    conjugate_basis,
    diagonal_subalgebra_dim,
    membership,
    parse_polynomial,
    stabilizer_system,
    star_action,
    symmetry_lie_algebra,
    symmetry_lie_algebra_multidegree,
)
from symlie.linalg import RowReducer, nullspace, sparse_rref
from symlie.poly import random_polynomial
from symlie.scalar import ONE, ZERO, Scalar

R2 = PolyRing.of("x1", "x2")
R3 = PolyRing.of("x1", "x2", "x3")


def mat(rows):
    return ScalarMatrix([[Scalar(v) for v in row] for row in rows])


def elementary(n, a, b):
    return ScalarMatrix(
        [[ONE if (i, j) == (a, b) else ZERO for j in range(n)] for i in range(n)]
    )


# -- the star action ---------------------------------------------------------


def star_by_rules(g: ScalarMatrix, p: Polynomial) -> Polynomial:
    """Independent oracle: the derivation rules applied term by term.

    Constants map to zero, a variable x_a maps to minus the a-th row, and
    products follow the Leibniz rule, recursively on each monomial.
    """
    ring = p.ring
    n = ring.arity

    def act_on_monomial(exps):
        total = ring.zero()
        for a in range(n):
            if not exps[a]:
                continue
            image = ring.zero()
            for b in range(n):
                if g.rows[a][b]:
                    image = image - ring.variable(b).scale(g.rows[a][b])
            rest = list(exps)
            rest[a] -= 1
            factor = Polynomial(ring, {tuple(rest): ONE})
            total = total + (image * factor).scale(Scalar(exps[a]))
        return total

    out = ring.zero()
    for exps, c in p.terms.items():
        out = out + act_on_monomial(exps).scale(c)
    return out


def test_star_kills_constants():
    g = mat([[1, 2], [3, 4]])
    assert not star_action(g, R2.constant(Scalar(7)))


def test_star_on_variable_is_row():
    e12 = elementary(2, 0, 1)
    assert star_action(e12, R2.variable(0)) == -R2.variable(1)
    assert not star_action(e12, R2.variable(1))


def test_star_matches_displayed_expansion():
    # -(2 g11 + g21) x1^2 - (2 g12 + 2 g21 + g11 + g22) x1 x2 - (2 g22 + g12) x2^2
    g11, g12, g21, g22 = 2, 3, 5, 7
    g = mat([[g11, g12], [g21, g22]])
    p = parse_polynomial("x1^2 + x2^2 + x1*x2", R2)
    expected = parse_polynomial(
        f"-{2*g11 + g21}*x1^2 - {2*g12 + 2*g21 + g11 + g22}*x1*x2 - {2*g22 + g12}*x2^2",
        R2,
    )
    assert star_action(g, p) == expected


def test_star_derivation_oracle(rng):
    for _ in range(200):
        n = rng.randint(1, 4)
        ring = PolyRing.of(*[f"x{k}" for k in range(1, n + 1)])
        g = ScalarMatrix(
            [[Scalar(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        )
        p = random_polynomial(ring, rng, 3, 4)
        assert star_action(g, p) == star_by_rules(g, p)


def test_star_leibniz(rng):
    for _ in range(30):
        g = ScalarMatrix(
            [[Scalar(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        )
        p = random_polynomial(R3, rng, 3, 3)
        q = random_polynomial(R3, rng, 2, 3)
        assert star_action(g, p * q) == star_action(g, p) * q + p * star_action(g, q)


def test_star_euler_identity(rng):
    for _ in range(100):
        n = rng.randint(1, 4)
        ring = PolyRing.of(*[f"x{k}" for k in range(1, n + 1)])
        d = rng.randint(0, 4)
        p = random_polynomial(ring, rng, d, 4, homogeneous=True)
        assert star_action(ScalarMatrix.identity(n), p) == p.scale(Scalar(-d))


def test_star_preserves_degree(rng):
    g = ScalarMatrix([[Scalar(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)])
    p = random_polynomial(R3, rng, 3, 4, homogeneous=True)
    q = star_action(g, p)
    assert not q or q.degree() == p.degree()


def test_star_size_mismatch():
    with pytest.raises(PreconditionError):
        star_action(ScalarMatrix.identity(3), R2.variable(0))


# -- stabilizer systems -------------------------------------------------------


def test_maximal_ideal_system_is_empty():
    ideal = IdealSpec(R3, tuple(R3.variable(k) for k in range(3)))
    system = stabilizer_system(ideal, 1)
    assert system.rows == ()
    assert not system.vacuous
    algebra = symmetry_lie_algebra(ideal)
    assert algebra.dimension == 9


def test_quadric_system_row_space(quadric2):
    system = stabilizer_system(quadric2, 2)
    space = sparse_rref(system.rows)
    assert space.rank == 2
    # unknown order g11, g12, g21, g22
    eq1 = {0: ONE, 1: Scalar(-2), 2: -ONE, 3: -ONE}
    eq2 = {0: ONE, 1: ONE, 2: Scalar(2), 3: -ONE}
    assert space.contains(eq1)
    assert space.contains(eq2)


def test_vacuous_component_warns(quadric2):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        system = stabilizer_system(quadric2, 1, graded_only=True)
    assert system.vacuous
    assert len(nullspace(system.rows, 4)) == 4
    assert any("zero" in str(w.message) for w in caught)


def test_degree_below_max_needs_flag(quadric2):
    with pytest.raises(PreconditionError):
        stabilizer_system(quadric2, 1)


def test_empty_generator_list_rejected():
    ideal = IdealSpec(R2, ())
    with pytest.raises(PreconditionError):
        symmetry_lie_algebra(ideal)


def test_inhomogeneous_rejected():
    ideal = IdealSpec(R2, (parse_polynomial("x1 + x1^2", R2),))
    with pytest.raises(PreconditionError):
        symmetry_lie_algebra(ideal)


# -- the algebra itself -------------------------------------------------------


def test_quadric_algebra(quadric2):
    algebra = symmetry_lie_algebra(quadric2)
    assert algebra.dimension == 2
    assert membership(algebra, ScalarMatrix.identity(2))
    assert bracket_closure_check(algebra)


def test_sphere_algebra(sphere3):
    algebra = symmetry_lie_algebra(sphere3)
    assert algebra.dimension == 4
    skews = [
        mat([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]),
        mat([[0, 0, 1], [0, 0, 0], [-1, 0, 0]]),
        mat([[0, 0, 0], [0, 0, 1], [0, -1, 0]]),
    ]
    for m in [ScalarMatrix.identity(3)] + skews:
        assert membership(algebra, m)
    assert not membership(algebra, elementary(3, 0, 1))
    # residual oracle for the rejection: E12 * p = -2 x1 x2 is not in span{p}
    p = sphere3.generators[0]
    image = star_action(elementary(3, 0, 1), p)
    assert image == parse_polynomial("-2*x1*x2", R3)


def test_membership_against_system(quadric2):
    system = stabilizer_system(quadric2, 2)
    algebra = symmetry_lie_algebra(quadric2)
    for m in algebra.basis:
        assert membership(system, m)
    assert not membership(system, elementary(2, 0, 1))


def test_bracket_closure_singleton():
    from symlie.lie import LieAlgebraBasis

    singleton = LieAlgebraBasis(
        n=2, basis=(ScalarMatrix.identity(2),), degree_used=1, graded_rank=0,
        system_rows=0,
    )
    assert bracket_closure_check(singleton)


def test_multidegree_matches_single_for_prime(quadric2):
    single = symmetry_lie_algebra(quadric2)
    multi = symmetry_lie_algebra_multidegree(quadric2, [2])
    assert single.dimension == multi.dimension
    for m in multi.basis:
        assert membership(single, m)


def test_multidegree_stability(quadric2):
    multi = symmetry_lie_algebra_multidegree(quadric2, [2, 3])
    assert multi.dimension == 2


def test_multidegree_non_prime_intersection_oracle():
    ideal = IdealSpec(
        R2,
        (parse_polynomial("x1^2", R2), parse_polynomial("x2^3", R2)),
        asserted_prime=False,
    )
    stacked = symmetry_lie_algebra_multidegree(ideal, [2, 3])
    # oracle: intersect the two graded nullspaces by stacking their
    # constraint systems independently
    rows = []
    for d in (2, 3):
        rows.extend(stabilizer_system(ideal, d, graded_only=True).rows)
    expected = nullspace(rows, 4)
    assert stacked.dimension == len(expected)
    reducer = RowReducer()
    for vec in expected:
        reducer.add(vec)
    for m in stacked.basis:
        assert reducer.contains({k: c for k, c in enumerate(m.vec()) if c})


# -- conjugation and diagonal subalgebras -------------------------------------


def test_conjugate_by_identity(quadric2):
    algebra = symmetry_lie_algebra(quadric2)
    assert conjugate_basis(algebra, ScalarMatrix.identity(2)) == list(algebra.basis)


def test_conjugation_covariance(quadric2, rng):
    algebra = symmetry_lie_algebra(quadric2)
    p = quadric2.generators[0]
    for _ in range(8):
        b = mat([[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)])
        if not b.is_invertible():
            continue
        moved = IdealSpec(R2, (change_variables(p, b),))
        moved_algebra = symmetry_lie_algebra(moved)
        assert moved_algebra.dimension == algebra.dimension
        for a in conjugate_basis(algebra, b):
            assert membership(moved_algebra, a)


def test_permutation_conjugates_the_algebra(sphere3):
    algebra = symmetry_lie_algebra(sphere3)
    perm = mat([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    moved = IdealSpec(R3, (change_variables(sphere3.generators[0], perm),))
    moved_algebra = symmetry_lie_algebra(moved)
    for a in conjugate_basis(algebra, perm):
        assert membership(moved_algebra, a)


def test_conjugate_rejects_singular(quadric2):
    algebra = symmetry_lie_algebra(quadric2)
    with pytest.raises(PreconditionError):
        conjugate_basis(algebra, mat([[1, 1], [1, 1]]))


def test_diagonal_subalgebra_dims(sphere3):
    maximal = IdealSpec(R3, tuple(R3.variable(k) for k in range(3)))
    assert diagonal_subalgebra_dim(symmetry_lie_algebra(maximal)) == 3
    sphere_algebra = symmetry_lie_algebra(sphere3)
    assert diagonal_subalgebra_dim(sphere_algebra) == 1


def test_degree_stability(quadric2, sphere3, tree_ideal8):
    for ideal in (quadric2, sphere3, tree_ideal8):
        d = ideal.max_degree()
        at_d = symmetry_lie_algebra(ideal, degree=d)
        at_d1 = symmetry_lie_algebra(ideal, degree=d + 1)
        assert at_d.dimension == at_d1.dimension


def test_graded_dimensions_non_increasing(quadric2):
    dims = []
    for d in (2, 3, 4):
        dims.append(symmetry_lie_algebra(quadric2, degree=d).dimension)
    assert dims[0] >= dims[1] >= dims[2]
