"""Exact p-deficiency of finite group presentations, coset enumeration,
subgroup rewriting, and machine-checkable largeness certificates."""

from .abelian import (
    AbelianInvariants,
    IntegerMatrix,
    abelian_invariants,
    relator_matrix,
    smith_normal_form,
    surjects_onto_Z,
)
from .certificates import (
    Certificate,
    allcock_rank_bound,
    certify_free_quotient,
    certify_p_large_by_deficiency,
    certify_p_large_witness,
    find_z_surjection,
    from_json,
    power_quotient_largeness,
    to_json,
    verify,
)
from .cosets import (
    CosetTable,
    Exhausted,
    is_normal,
    permutation_action,
    power_survives,
    todd_coxeter,
    trace,
    validate_table,
)
from .lowindex import SubgroupRecord, low_index_normal, low_index_subgroups
from .presentations import (
    DeficiencyReport,
    ParseError,
    Presentation,
    deficiency_count,
    p_deficiency,
    parse_presentation,
    parse_word,
    print_presentation,
    quotient_by_words,
    tietze_simplify,
)
from .rewriting import reidemeister_schreier, schreier_transversal, subgroup_presentation
from .words import (
    EPSILON,
    RootDecomposition,
    Word,
    cyclic_reduce,
    nu_p,
    primitive_root,
    reduce,
    word_power,
)

__all__ = [
    "AbelianInvariants",
    "Certificate",
    "CosetTable",
    "DeficiencyReport",
    "EPSILON",
    "Exhausted",
    "IntegerMatrix",
    "ParseError",
    "Presentation",
    "RootDecomposition",
    "SubgroupRecord",
    "Word",
    "abelian_invariants",
    "allcock_rank_bound",
    "certify_free_quotient",
    "certify_p_large_by_deficiency",
    "certify_p_large_witness",
    "cyclic_reduce",
    "deficiency_count",
    "find_z_surjection",
    "from_json",
    "is_normal",
    "low_index_normal",
    "low_index_subgroups",
    "nu_p",
    "p_deficiency",
    "parse_presentation",
    "parse_word",
    "permutation_action",
    "power_quotient_largeness",
    "power_survives",
    "primitive_root",
    "print_presentation",
    "quotient_by_words",
    "reduce",
    "reidemeister_schreier",
    "relator_matrix",
    "schreier_transversal",
    "smith_normal_form",
    "subgroup_presentation",
    "surjects_onto_Z",
    "tietze_simplify",
    "to_json",
    "todd_coxeter",
    "trace",
    "validate_table",
    "verify",
    "word_power",
]
