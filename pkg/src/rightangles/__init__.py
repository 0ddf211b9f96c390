"""Exact tools for right-angle-free point sets over finite fields.

The package provides GF(p^k) arithmetic on coefficient tuples, the
right-angle predicate and witness search over F_q^n, the weight-(q-1) layer
construction with closed-form size bounds, exact matrix rank and slice-rank
certificates for the associated agreement tensors, and small-case maximum-set
solvers.  A click CLI (``rightangles``) fronts the same operations.
"""

from . import errors
from .gf import (
    DEFAULT_MODULI,
    ArithTables,
    Element,
    FieldSpec,
    arith_tables,
    default_field,
    factor_prime_power,
    fe_add,
    fe_inv,
    fe_mul,
    fe_neg,
    fe_pow,
    fe_sub,
    inner_product,
    make_field,
    validate_element,
)
from .geometry import (
    BoundsReport,
    Point,
    PointSet,
    TripleWitness,
    bounds_table,
    construction_layer,
    find_right_angle,
    is_right_angle,
    lower_bound_size,
    point_from_ints,
    point_set,
    point_set_from_ints,
    space_points,
    translate,
    triple_value,
    upper_bound,
)
from .rank import (
    TENSOR_SIZE_CAP,
    CoefficientVector,
    MatrixFq,
    RankCheck,
    Slice,
    SliceDecomposition,
    Tensor3,
    agreement_matrix,
    agreement_rank_check,
    agreement_tensor,
    angle_indicator_tensor,
    avoidance_matrix,
    check_decomposition,
    coefficient_vector,
    decompose_angle_tensor,
    decomposition_value,
    diagonal_tensor,
    exponent_patterns,
    first_disagreement,
    mat_rank,
    slice_count_bound,
)
from .search import (
    SearchBudget,
    SearchCheckpoint,
    SearchResult,
    branch_and_bound_max,
    exhaustive_max,
    greedy_lower,
)

__version__ = "0.1.0"
