"""Lusztig cones of reduced words for the longest Weyl group element.

Exact construction of the matrices V, W, S, T, C, P, X, Ltilde and L attached
to a reduced word, two independent cone-membership tests, and min-plus
tropicalisation of subtraction-free rational expressions.
"""

from .cartan import (
    CartanError,
    CartanSpec,
    apply_word,
    cartan_from_type,
    pairing,
    parse_cartan_matrix,
    parse_type_label,
    positive_roots,
    reflect_coroot,
    reflect_root,
    reflect_weight,
)
from .conemat import (
    all_matrices,
    epsilon_values,
    in_lusztig_cone_def,
    in_lusztig_cone_L,
    lowest_string,
    lusztig_coefficients,
    matrix_C,
    matrix_L,
    matrix_Ltilde,
    matrix_P,
    matrix_S,
    matrix_T,
    matrix_V,
    matrix_W,
    matrix_X,
    mu_weight,
)
from .intmatrix import IntMatrix
from .report import ConeReport, verify_word, verify_words
from .tropical import (
    SubtractionFreeExpr,
    TropicalForm,
    parse_expr,
    string_to_lusztig_affine,
    trop_eval,
    tropicalize,
    zeta_inverse_monomials,
    zeta_monomials,
)
from .weyl import (
    NotReducedError,
    ReducedWord,
    beta_roots,
    enumerate_reduced_words,
    is_reduced_w0,
    k1_successor,
    weight_star,
)

__version__ = "0.1.0"
