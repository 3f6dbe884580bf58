"""Exact dual-matrix algebra: dual r-rank decomposition and the dual
Moore-Penrose inverse, with dual idempotent / EP characterizations."""

from .decomposition import DualRankFactors, decompose, decomposition_exists, verify_decomposition
from .dmpgi import (
    dmpgi,
    dmpgi_candidate,
    dmpgi_direct,
    dmpgi_exists,
    dmpgi_explicit,
    dmpgi_factor,
    pinv_col_full,
    pinv_row_full,
)
from .dual import DualMatrix, PenroseProfile, dinverse, dmul, dtranspose, penrose_profile
from .errors import (
    ConsistencyError,
    DecompositionError,
    DimensionError,
    DMPGIError,
    DualRankError,
    FormulaDiscrepancyError,
    NotInvertibleError,
    ParseError,
    PreconditionError,
    RankError,
    SchemaError,
)
from .io import format_dual_matrix, parse_dual_matrix
from .matrix import (
    FullRankFactors,
    RealMatrix,
    Witness,
    full_rank_decompose,
    identity,
    inverse,
    pinv,
    rank,
    rref,
    sample_one_inverse,
)
from .penrose import (
    MembershipReport,
    sample_dual_one_inverse_left,
    sample_dual_one_inverse_right,
    verify_mixed_membership,
)
from .scalar import DualScalar, Rational, dual_mul, format_rational, parse_rational, rat
from .special import (
    ep_via_decomposition,
    ep_via_factors,
    ep_via_parts,
    factor_commute_is_identity,
    idempotent_characterization,
    idempotent_decompose,
    idempotent_dmpgi,
    is_dual_ep,
    is_dual_idempotent,
)
from .sylvester import SylvesterSolution, sylvester_consistent, sylvester_solve

__version__ = "0.1.0"
