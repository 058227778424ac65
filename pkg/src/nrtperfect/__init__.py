"""Perfect codes in Niederreiter-Rosenbloom-Tsfasman (NRT) spaces.

Points are ``s x r`` matrices over ``Z_q``.  A row weighs the position of its
last nonzero entry and a matrix weighs the sum of its rows.
"""

from .certificates import (
    StickySetAudit,
    StickySetCert,
    StickyVectorCert,
    audit_sticky_set,
    build_sticky_set,
    build_sticky_vector,
    check_restriction_lemma,
    is_r_closed,
    r_closure,
    sticky_vectors,
    verify_sticky_set,
    verify_sticky_vector,
    zero_ball,
)
from .codes import (
    Code,
    LiftMap,
    construct_hamming,
    construct_repetition,
    construct_s1,
    is_covering,
    is_packing,
    is_perfect,
    lift_general,
    lift_trivial,
    project,
    random_translate_lift_map,
)
from .core import (
    NrtMatrix,
    Params,
    RowPermutation,
    apply_row_permutation,
    canonical_row,
    distance,
    row_weight,
    translate,
    weight,
)
from .decompose import Partition, balls_intersect, is_decomposable, knapsack_max
from .enumeration import BudgetExceeded, Space, ball_volume, iter_ball, iter_space, weight_distribution
from .feasibility import Outcome, Reason, Verdict, scan, verdict
from .search import SearchConfig, SearchOutcome, SearchStatus, search_perfect

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
