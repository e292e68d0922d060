"""Exact maximal denumerants of numerical semigroups.

A numerical semigroup is the set of nonnegative integer combinations of
coprime positive generators. Each member has finitely many factorizations;
the maximal denumerant counts, over all members, the factorizations whose
length is maximal for that member. The engine here splits the work by
residue class modulo the multiplicity, shrinks every class to a finite
adjustment scan over the blowup semigroup, and bounds the candidate
factorizations by length. Closed forms cover additive, symmetric-blowup,
arithmetic-sequence, and three-generator inputs, and a brute-force oracle
cross-checks everything.
"""

from .blowup import (
    AdjustmentEntry,
    AdjustmentTable,
    BlowupContext,
    ResidueReport,
    adjustment,
    adjustment_table,
    blowup,
    dmax,
    max_denumerant_element_via_blowup,
    residue_report,
)
from .classify import (
    Classification,
    Ed3Input,
    arithmetic_parameters,
    ceil_div,
    classify,
    dmax_additive,
    dmax_arithmetic,
    dmax_ed3,
    dmax_ed3_bezout,
    dmax_ed3_ceiling,
    dmax_symmetric_blowup,
    is_additive,
    is_supersymmetric,
    is_symmetric,
    partition_count,
)
from .errors import (
    BoundTooSmall,
    DuplicateEntry,
    EmptyInput,
    GcdNotOne,
    InputError,
    InternalCheckError,
    InvalidParameters,
    MaxdenumError,
    NonPositiveEntry,
    NotAdditive,
    NotAMember,
    NotRepresentable,
    PreconditionError,
    PreconditionFailed,
)
from .oracle import (
    OracleBound,
    auto_bound,
    oracle_dmax,
    oracle_dmax_element,
    oracle_dmax_empirical,
    oracle_dmax_profile,
    oracle_factorizations,
)
from .semigroup import (
    AperySet,
    Factorization,
    GeneratingSet,
    Semigroup,
    apery_set,
    contains,
    denumerant,
    elements_of,
    enumerate_factorizations,
    frobenius_number,
    least_in_class,
    make_semigroup,
    max_apery,
    max_denumerant_element,
    min_order,
    order,
)

__version__ = "0.1.0"

__all__ = [
    "AdjustmentEntry",
    "AdjustmentTable",
    "AperySet",
    "BlowupContext",
    "BoundTooSmall",
    "Classification",
    "DuplicateEntry",
    "Ed3Input",
    "EmptyInput",
    "Factorization",
    "GcdNotOne",
    "GeneratingSet",
    "InputError",
    "InternalCheckError",
    "InvalidParameters",
    "MaxdenumError",
    "NonPositiveEntry",
    "NotAMember",
    "NotAdditive",
    "NotRepresentable",
    "OracleBound",
    "PreconditionError",
    "PreconditionFailed",
    "ResidueReport",
    "Semigroup",
    "adjustment",
    "adjustment_table",
    "apery_set",
    "arithmetic_parameters",
    "auto_bound",
    "blowup",
    "ceil_div",
    "classify",
    "contains",
    "denumerant",
    "dmax",
    "dmax_additive",
    "dmax_arithmetic",
    "dmax_ed3",
    "dmax_ed3_bezout",
    "dmax_ed3_ceiling",
    "dmax_symmetric_blowup",
    "elements_of",
    "enumerate_factorizations",
    "frobenius_number",
    "is_additive",
    "is_supersymmetric",
    "is_symmetric",
    "least_in_class",
    "make_semigroup",
    "max_apery",
    "max_denumerant_element",
    "max_denumerant_element_via_blowup",
    "min_order",
    "order",
    "oracle_dmax",
    "oracle_dmax_element",
    "oracle_dmax_empirical",
    "oracle_dmax_profile",
    "oracle_factorizations",
    "partition_count",
    "residue_report",
]
