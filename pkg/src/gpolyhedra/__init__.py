"""Exact rational computations with generalized polyhedral convex sets."""

from .errors import (
    DependentWeightsError,
    DomainError,
    EmptyInteriorError,
    EmptySetError,
    GPolyError,
    InputError,
    NotAConeError,
    NotInSetError,
    UnsolvableObjectiveError,
)
from .function_space import DemoReport, RatPoly, demo_membership, integrate_product, run_demo
from .generalized import ConeForm, Decomposition, cone_representation, decompose, dual_cone
from .linprog import (
    NEG_INF,
    IndexPattern,
    LPProblem,
    LPReport,
    eaves_check,
    frank_wolfe_infimum,
    index_pattern,
    solution_set,
    solvable_cone,
    solve,
    strict_feasibility,
)
from .polyhedron import (
    GeneratorForm,
    HForm,
    MembershipCertificate,
    contains_h,
    contains_v,
    h_to_v,
    lineality_space,
    recession_cone,
    v_to_h,
)
from .vector_linprog import (
    VLPProblem,
    WeakEffPiece,
    WeakEffSet,
    adjoint,
    criterion_sufficient,
    is_weakly_efficient_oracle,
    scalarize,
    vlp_has_solution,
    weakly_efficient_set,
)

__version__ = "0.1.0"
