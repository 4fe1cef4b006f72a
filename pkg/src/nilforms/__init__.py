"""Exact invariant geometry on nilpotent Lie algebras.

Rational-arithmetic Chevalley-Eilenberg cohomology (plain and twisted by a
closed 1-form), symplectic and locally conformal symplectic detection with
verified witnesses, Hermitian classification for compatible metric pairs,
and a symbolically checked coordinate model for the filiform example.

Sign convention, used everywhere: dx_k(X_i, X_j) = -x_k([X_i, X_j]), so in
tuple notation "(0,0,0,12)" means dx_4 = x1^x2, i.e. [X_1, X_2] = -X_4.
"""

from .catalog import CatalogEntry, ExpectedFact, get_example, heisenberg_line, names
from .cohomology import (
    CohomologyClass,
    CohomologySpace,
    LefschetzResult,
    MasseyResult,
    betti_profile,
    class_of,
    cohomology_space,
    cup,
    lefschetz_map,
    triple_massey,
    twisted_d,
)
from .coordinate_model import (
    PolyForm,
    PolyMap,
    RealizationReport,
    poly_d,
    pullback,
    verify_realization,
)
from .errors import (
    AmbientMismatch,
    CupObstruction,
    DegenerateMetric,
    DimensionMismatch,
    IndexOutOfRange,
    InternalInvariantBreach,
    InvalidParameter,
    IrrationalVolume,
    JacobiViolation,
    LeeFormNotClosed,
    NilformsError,
    NotAlmostComplex,
    NotClosed,
    NotHermitian,
    NotNilpotent,
    NotUnimodular,
    OddDimension,
    OmegaNotClosed,
    PreconditionFailed,
    SalamonSyntaxError,
    SchemaViolation,
    UnknownName,
    WrongDimension,
)
from .exterior_core import (
    AlgebraInvariants,
    KForm,
    LieAlgebra,
    build_algebra,
    ce_d,
    direct_sum,
    format_form,
    lower_central_series,
    wedge,
)
from .hermitian import (
    ConnectionCoefficients,
    HermitianClassification,
    InnerProduct,
    classify_hermitian,
    codifferential,
    euclidean_metric,
    fundamental_form,
    hodge_star,
    koszul_connection,
    lee_form,
)
from .notation import (
    algebra_to_json,
    form_to_json,
    format_salamon,
    json_to_algebra,
    json_to_form,
    parse_covector_sum,
    parse_json,
    parse_salamon,
    serialize_json,
)
from .polynomials import Poly, nonzero_point
from .scalars import Scalar, as_scalar, format_scalar, parse_scalar
from .structures import (
    AlmostComplexStructure,
    Classification4D,
    LcsSearchResult,
    LcsVerdict,
    NijenhuisTensor,
    SearchConfig,
    SymplecticVerdict,
    check_lcs,
    check_symplectic,
    classify_4d,
    find_lcs,
    find_symplectic,
    nijenhuis,
    nondegenerate_in_span,
    pfaffian_volume,
    skew_matrix,
    theta_candidates,
    twisted_exactness_witness,
)
from .verification import CheckResult, all_machine_pass, verify_all

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
