"""Executable combinatorics of Schreier-type sequence spaces: exact norm
evaluation with optimal witnesses, covering numbers, truncated domination
indices, the explicit interval constructions, and a verification harness.
"""

from .constructions import (
    AlmostDisjointFamily,
    MPBPartition,
    SelectionResult,
    almost_disjoint_family,
    divergence_certificates,
    divergence_witness,
    dominated_subsequence,
    doubling_blocks,
    flat_vector,
    jameson_extremal,
    l_set,
    mpb_partition,
)
from .errors import (
    CannotSelectError,
    InvalidInputError,
    OracleLimitError,
    SchreierLabError,
    SizeLimitError,
    TruncationError,
    UnsupportedExponentError,
    VerificationError,
)
from .glindex import (
    DominationCheck,
    IndexSet,
    TruncatedGLIndex,
    check_domination,
    domination_constant,
    gl_index_truncated,
    is_spread_of,
    parse_index_rule,
    select,
    theta_fiber_stats,
)
from .intset import EMPTY, IntSet
from .norms import (
    SPACE_BAERNSTEIN,
    SPACE_SCHREIER,
    NormResult,
    baernstein_norm,
    beta_p,
    beta_p_pow,
    lp_norm,
    lp_norm_pow,
    mu_p,
    mu_p_pow,
    oracle_norm,
    oracle_norm_pow,
    schreier_norm,
    sigma_operator,
)
from .schreier import (
    CoveringCertificate,
    SchreierChain,
    enumerate_chains,
    enumerate_schreier_subsets,
    is_maximal_schreier,
    is_schreier,
    is_spread,
    maximal_chain_from,
    oracle_bound,
    tau1,
    tau1_oracle,
)
from .vectors import (
    BlockSequence,
    CoeffVector,
    decreasing_rearrangement,
    sup_norm,
    vector_from_json_obj,
    vector_to_json_obj,
)

__version__ = "0.1.0"

__all__ = [
    "AlmostDisjointFamily",
    "BlockSequence",
    "CannotSelectError",
    "CoeffVector",
    "CoveringCertificate",
    "DominationCheck",
    "EMPTY",
    "IndexSet",
    "IntSet",
    "InvalidInputError",
    "MPBPartition",
    "NormResult",
    "OracleLimitError",
    "SPACE_BAERNSTEIN",
    "SPACE_SCHREIER",
    "SchreierChain",
    "SchreierLabError",
    "SelectionResult",
    "SizeLimitError",
    "TruncatedGLIndex",
    "TruncationError",
    "UnsupportedExponentError",
    "VerificationError",
    "almost_disjoint_family",
    "baernstein_norm",
    "beta_p",
    "beta_p_pow",
    "check_domination",
    "decreasing_rearrangement",
    "divergence_certificates",
    "divergence_witness",
    "dominated_subsequence",
    "domination_constant",
    "doubling_blocks",
    "enumerate_chains",
    "enumerate_schreier_subsets",
    "flat_vector",
    "gl_index_truncated",
    "is_maximal_schreier",
    "is_schreier",
    "is_spread",
    "is_spread_of",
    "jameson_extremal",
    "l_set",
    "lp_norm",
    "lp_norm_pow",
    "maximal_chain_from",
    "mpb_partition",
    "mu_p",
    "mu_p_pow",
    "oracle_bound",
    "oracle_norm",
    "oracle_norm_pow",
    "parse_index_rule",
    "schreier_norm",
    "select",
    "sigma_operator",
    "sup_norm",
    "tau1",
    "tau1_oracle",
    "theta_fiber_stats",
    "vector_from_json_obj",
    "vector_to_json_obj",
]
