"""Bicolored set partitions, level-2 Hopf algebras, and r-Bell elements.

Everything is exact: coefficients are rationals, comparisons are structural,
and the generating-function factorizations are verified coefficient by
coefficient at configurable truncation orders.
"""

from .linear import LinearCombination, Rational, combine, parse_rational, rational_str
from .partitions import (
    BicoloredComposition,
    BicoloredPartition,
    BicoloredSetPartition,
    EmptyBlockError,
    GroundSetError,
    OverlapError,
    PartitionError,
    anchored_set_partitions,
    bicolored_compositions,
    bicolored_partitions,
    bicolored_set_partitions,
    canonical_set_partition,
    composition_type,
    count_by_composition_type,
    count_by_partition_type,
    is_anchored,
    iter_anchored_set_partitions,
    partition_type,
    r_stirling2,
    shifted_union,
    standardize,
    stirling1_unsigned,
)
from .algebra import (
    AlgebraElement,
    AlgebraId,
    AlgebraMismatchError,
    TensorElement,
    a,
    abelianize,
    b,
    basis_keys,
    bidegree,
    coproduct,
    coproduct_key,
    generator_key,
    in_color2_subalgebra,
    is_primitive,
    key_product,
    specialize_sym2,
    to_ncsf2,
    to_sym2,
    unit_key,
)
from .operators import (
    OP_B,
    OP_D,
    OperatorPoly,
    ad,
    apply_poly,
    apply_shift,
    apply_word,
    as_multiplication,
    solve_zassenhaus,
    zassenhaus_term,
    zassenhaus_term_closed,
)
from .series import TruncatedSeries, Truncation, TruncationMismatchError
from .bell import (
    BellQuery,
    VerificationReport,
    bell,
    bell_enum,
    bell_tilde,
    gf_s,
    gf_s_bullet,
    gf_s_circ,
    gf_s_star,
    recolor_to_color2,
    scale_color2,
    verify_binomial_identity,
    verify_closed_form,
    verify_closed_terms,
    verify_equal_colors,
    verify_factorization,
    verify_hopf_axioms,
    verify_routes,
    verify_stirling,
    verify_zassenhaus_terms,
    zassenhaus_series,
)

__version__ = "0.1.0"
