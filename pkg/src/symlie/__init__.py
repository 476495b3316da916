"""Symmetry Lie algebras of homogeneous ideals, in exact Q(i) arithmetic.

The headline test: if the symmetry Lie algebra of a homogeneous prime
ideal has smaller dimension than the ideal's affine-cone dimension, the
projective variety is not toric under any linear change of variables.
"""

from .graded import GradedBasis, IdealSpec, PreconditionError, graded_basis, spanning_set
from .groebner import (
    GREVLEX,
    LEX,
    GroebnerBasis,
    MonomialOrder,
    buchberger,
    elimination_ideal,
    ideal_membership,
    krull_dimension,
    normal_form,
)
from .lie import (
    LieAlgebraBasis,
    StabilizerSystem,
    bracket_closure_check,
    conjugate_basis,
    diagonal_subalgebra_dim,
    membership,
    stabilizer_system,
    star_action,
    symmetry_lie_algebra,
    symmetry_lie_algebra_multidegree,
)
from .linalg import ScalarMatrix
from .models import (
    ColoredGraph,
    GaussianCofactorMap,
    StagedTree,
    adjugate_identity_holds,
    gaussian_cofactor_map,
    kernel_via_elimination,
    staged_tree_kernel,
    staged_tree_parametrization,
    verify_gaussian_kernel,
    verify_staged_kernel,
)
from .parser import ParseError, format_polynomial, parse_polynomial, parse_scalar
from .poly import (
    ANY_DEGREE,
    MINUS_INF,
    Polynomial,
    PolyRing,
    change_variables,
    is_binomial_set,
    is_homogeneous,
    monomial_basis,
    partial_derivative,
    vectorize,
)
from .report import AnalysisReport, analyze, emit_report
from .scalar import I, ONE, ZERO, Q, Scalar

__version__ = "0.1.0"
