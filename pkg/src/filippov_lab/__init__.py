"""Exact-arithmetic workbench for 3-Lie algebras and their 2-term
homotopy counterparts.

Everything runs over exact rationals; every defining identity is checked
by exhaustive evaluation on basis tuples, and verifiers return reports
listing each failing tuple with both sides of the equation.
"""

from .cohomology import Cochain, coboundary, delta_squared_zero, is_cocycle, \
    random_cochain
from .correspondences import (
    CrossedModule, SkeletalQuadruple, SymplecticThreeLie, ThreePreLie,
    adjoint_crossed_module, build_skeletal, build_strict_from_crossed_module,
    build_strict_from_symplectic, check_symplectic, extract_crossed_module,
    extract_quadruple, induced_pre_lie, left_multiplication_rep,
    pre_lie_commutator, theta_triple_skew_report, verify_crossed_module,
    verify_pre_lie,
)
from .errors import (
    BadRational, ChainHomotopyError, ChainMapError, DegreeOverflow,
    DimensionMismatch, EndpointMismatch, FilippovError, InvalidCrossedModule,
    InvalidQuadruple, InvalidSymplectic, NotSkeletal, NotStrict, ParseError,
    PreconditionFailed, SingularMatrix, UnknownKind,
)
from .exactlin import (
    Matrix, Scalar, SkewSlot, det, format_rational, invert, kernel_basis,
    parse_rational, rational, skew_canon, solve_linear,
)
from .fileformat import DefinitionFile, parse_definition, serialize_definition
from .fundobj import WedgeElement, basis_wedges, induced_bracket, \
    verify_lod_relations
from .homotopy import (
    Homomorphism, ThreeLie2Algebra, TwoHomomorphism, compose_homomorphisms,
    horizontal_compose, identity_homomorphism, identity_two_homomorphism,
    verify_homomorphism, verify_two_homomorphism, verify_two_term,
    vertical_compose,
)
from .report import Failure, VerificationReport
from .trilie import (
    FundamentalElement, Representation, ThreeLieAlgebra,
    check_fundamental_identity, check_leibniz_fundamental,
    check_representation, fundamental_bracket,
)

__version__ = "0.1.0"
