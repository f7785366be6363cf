"""Finite loops as Cayley tables: identities, structure, autotopisms, enumeration."""

from .core import (
    INAPPLICABLE,
    LoopTable,
    Permutation,
    element_order,
    exponent,
    inverses,
    inversion_perm,
    ldiv,
    load,
    mul,
    perm_compose,
    perm_identity,
    perm_invert,
    power,
    rdiv,
    read_stream,
    read_table,
    translations,
    validate_table,
    write_stream,
    write_table,
)
from .enumerate import (
    GenerationSpec,
    TripleSystem,
    are_isomorphic,
    builtin,
    canonical_form,
    canonical_key,
    catalog,
    generate,
    steiner_from_sts,
)
from .errors import (
    BudgetExceeded,
    IdentitySyntaxError,
    LoopError,
    NoIdentity,
    NotLatinSquare,
    NoTwoSidedInverse,
    OrderMismatch,
    TableFormatError,
    UnknownName,
)
from .identities import Identity, eval_term, holds, named_identity, parse_identity, parse_term
from .morphisms import (
    AutotopismTriple,
    MapClassification,
    autotopism_group,
    classify_map,
    compose_autotopisms,
    gamma_map,
    inner_maps,
    invert_autotopism,
    is_A_loop,
    is_autotopism,
    isotope,
    named_autotopisms,
    principal_isotope,
)
from .structure import (
    StructureReport,
    associator,
    centrum_center,
    commutator,
    is_power_associative,
    nuclei,
    special_sets,
    square_flags,
    structure_report,
    unique_nonidentity,
)
from .theorems import (
    PROPERTIES,
    PROPOSITIONS,
    PropertyValue,
    counterexample_search,
    hunt_osborn,
    osborn_check,
    property_report,
    proposition_suite,
)

__version__ = "0.1.0"
