"""Exact root subgroup factorization on the classical complex groups.

Families A, B, C, D over Gaussian-rational scalars: root systems and
Weyl words, canonical matrix sl2 triples, ordered-exponential
coordinates with exact forward, inverse, and dual maps, Jacobian
determinants, the invariant density, and compact-picture coordinate
changes.  No floating point anywhere.
"""

from .errors import (
    BranchViolationError,
    BudgetExceededError,
    ExceptionalSetError,
    InvalidInputError,
    InvalidWordError,
    LibError,
    StratumError,
)
from .factorization import (
    ForwardResult,
    StratumResult,
    delta_identity_check,
    forward_coords_jets,
    forward_map,
    forward_map_stratum,
    inverse_map,
    jacobian_det_ad,
    jacobian_det_double_product,
    jacobian_det_formula,
    stratum_data,
    transpose_dual,
)
from .haar import (
    RadicalScalar,
    eta_change_jacobian_det,
    eta_from_zeta,
    haar_density,
    lebesgue_pullback_det,
    unit_jacobian_check,
    zeta_from_eta,
)
from .jets import Jet
from .linalg import (
    det_exact,
    identity,
    ldu,
    ldu_minors,
    mat_inverse,
    mat_mul,
    matrix_rank,
    principal_minor,
)
from .matrices import (
    conjugated_generators,
    coroot_diag,
    dim,
    e_matrix,
    exp_e,
    exp_f,
    exp_nilpotent,
    f_matrix,
    form_matrix,
    h_matrix,
    inverse_dual,
    iota,
    log_unipotent,
    r_root,
    root_triple,
    row_weight,
    sigma,
    stratum_permutation,
    weyl_representative,
)
from .rootsystem import (
    coroot,
    delta,
    height,
    is_positive_root,
    norm2,
    pairing,
    positive_roots,
    reflect,
    simple_coroot_coordinates,
    simple_root_coordinates,
    simple_roots,
)
from .scalar import Scalar
from .weyl import (
    WeylElement,
    canonical_ordering,
    canonical_word,
    deterministic_reduced_word,
    enumerate_reduced_words,
    identity_element,
    is_reduced,
    length,
    longest_element,
    ordering_from_word,
    printed_count_bc,
    random_reduced_word,
    right_descents,
    simple_reflection,
    standard_count_a,
    validate_ordering,
    word_conjugate_w0,
    word_evaluate,
    word_reverse,
)

__version__ = "0.1.0"
