"""Exact arithmetic for nil graded algebras attached to Coxeter expressions."""

from .coxeter import (
    CoxeterSystem,
    Realization,
    RootVector,
    act_expression,
    act_generator,
    demazure,
    generalized_demazure_row,
    geometric_realization,
    load_realization,
    make_type_a_realization,
)
from .errors import ConsistencyError, InvalidMove, InvalidParameter, NilGTError, ParseError, ResourceError
from .morphism import (
    MorphismSpec,
    apply,
    commuting_swap,
    compose,
    is_isomorphism,
    is_morphism,
    natural_injection,
    natural_projection,
)
from .nilalg import (
    AlgebraElement,
    ExponentMonomial,
    degree,
    dimension,
    full_product,
    generator,
    generator_power,
    multiply,
    one,
    reduce_monomial,
)
from .trimat import ExtendedTriMatrix, TriMatrix, bnabla, extended_t_matrix, nabla, q_column, t_matrix
from .typeatilde import (
    Abacus,
    Interval,
    abacus,
    alpha_interval,
    assemble_t_matrix,
    blob_matrix,
    entries_in_range,
    interval_expression,
    interval_extended_matrix,
    table_action,
    verify_commuting_rearrangement,
)

__version__ = "0.1.0"

__all__ = [
    "Abacus",
    "AlgebraElement",
    "ConsistencyError",
    "CoxeterSystem",
    "ExponentMonomial",
    "ExtendedTriMatrix",
    "Interval",
    "InvalidMove",
    "InvalidParameter",
    "MorphismSpec",
    "NilGTError",
    "ParseError",
    "Realization",
    "ResourceError",
    "RootVector",
    "TriMatrix",
    "abacus",
    "act_expression",
    "act_generator",
    "alpha_interval",
    "apply",
    "assemble_t_matrix",
    "blob_matrix",
    "bnabla",
    "commuting_swap",
    "compose",
    "degree",
    "demazure",
    "dimension",
    "entries_in_range",
    "extended_t_matrix",
    "full_product",
    "generalized_demazure_row",
    "generator",
    "generator_power",
    "geometric_realization",
    "interval_expression",
    "interval_extended_matrix",
    "is_isomorphism",
    "is_morphism",
    "load_realization",
    "make_type_a_realization",
    "multiply",
    "nabla",
    "natural_injection",
    "natural_projection",
    "one",
    "q_column",
    "reduce_monomial",
    "t_matrix",
    "table_action",
    "verify_commuting_rearrangement",
]
