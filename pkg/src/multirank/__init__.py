"""multirank: flattening-rank profiles of multiqudit pure states.

Flatten an n-party state along every bipartition (I, complement) with
|I| <= floor(n/2), compute each matrix rank exactly, and classify the
state as fully product, biseparable across identified cuts, or
genuinely multipartite entangled.  All arithmetic is exact (Gaussian
rationals); fast probabilistic paths over GF(p)[i] are available and
clearly labelled in the results.
"""

from .classify import EntanglementVerdict, is_fully_product, is_gme, verdict
from .errors import (
    InvalidStateError,
    MultirankError,
    PolicyMismatchError,
    PrimeClashError,
    StateSyntaxError,
    ZeroStateError,
)
from .flatten import (
    FlattenedMatrix,
    dense_string_rows,
    flatten,
    matrix_from_dense,
    row_col_of,
    transposed,
)
from .gaussian import Amplitude, GaussianRational, Parameter, parse_coefficient
from .kernels import BACKEND
from .partition import Bipartition, all_levels, enumerate_bipartitions
from .profile import DEFAULT_SEED, MultirankProfile, multirank_profile, profile_level
from .rank import (
    PRIMES_3_MOD_4,
    RankPolicy,
    RankResult,
    exact_rank,
    generic_rank,
    modular_rank,
    oracle_rank_minors,
    parse_policy,
    rank_dispatch,
)
from .state import (
    QuditDims,
    StateTensor,
    apply_local_operation,
    build_state,
    parse_state,
    serialize_state,
)

__version__ = "0.1.0"

__all__ = [
    "Amplitude",
    "BACKEND",
    "Bipartition",
    "DEFAULT_SEED",
    "EntanglementVerdict",
    "FlattenedMatrix",
    "GaussianRational",
    "InvalidStateError",
    "MultirankError",
    "MultirankProfile",
    "PolicyMismatchError",
    "Parameter",
    "PrimeClashError",
    "PRIMES_3_MOD_4",
    "QuditDims",
    "RankPolicy",
    "RankResult",
    "StateSyntaxError",
    "StateTensor",
    "ZeroStateError",
    "all_levels",
    "apply_local_operation",
    "build_state",
    "dense_string_rows",
    "enumerate_bipartitions",
    "exact_rank",
    "flatten",
    "generic_rank",
    "is_fully_product",
    "is_gme",
    "matrix_from_dense",
    "modular_rank",
    "multirank_profile",
    "oracle_rank_minors",
    "parse_coefficient",
    "parse_policy",
    "parse_state",
    "profile_level",
    "rank_dispatch",
    "row_col_of",
    "serialize_state",
    "transposed",
    "verdict",
]
