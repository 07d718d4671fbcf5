"""Weighted poset block metric spaces over Z_m.

Posets with block labelings and scalar weights induce a metric on
Z_m^n; this package builds those spaces, analyzes codes in them
(minimum distance, Singleton bound, MDS, packing radius, perfect
codes) and enumerates their groups of linear isometries, verifying
the triangular-times-automorphism factorization by brute force.
"""

from .algebra import (
    Alphabet,
    WeightFunction,
    custom_weight,
    hamming_weight,
    lee_weight,
)
from .codes import (
    Code,
    CodeReport,
    MdsPerfectCheck,
    SingletonParams,
    analyze,
    enumerate_linear_codes,
    finer_mds_check,
    hamming_min_distance,
    identity_tail_map,
    is_r_perfect,
    mds_iff_perfect_check,
    min_distance,
    packing_radius,
    perfect_code_from_function,
    random_code,
    random_tail_map,
    reconstruct_tail_map,
    singleton_params,
    zero_tail_map,
)
from .errors import (
    ArityError,
    AxiomError,
    BudgetError,
    ContextMismatchError,
    CycleError,
    DecompositionError,
    LabelError,
    NonPrincipalError,
    NotChainError,
    NotFinerError,
    NotIsometryError,
    NotLabeledAutomorphismError,
    ParseError,
    PosetBlockError,
    SizeMismatchError,
    TooSmallError,
    ValidationError,
)
from .isometry import (
    BlockMatrix,
    GroupReport,
    IsometryDecomposition,
    decompose,
    enumerate_isometry_group,
    from_automorphism,
    in_triangular_group,
    induced_automorphism,
    is_isometry,
    triangular_group_order,
    verify_semidirect,
)
from .poset import Labeling, Permutation, Poset, all_posets
from .space import BlockVector, SpaceContext, ball, space_context
from .verify import AxiomCheck, check_weight_axioms, check_weight_axioms_bruteforce

__version__ = "0.1.0"
