"""Finite group tables, isomorphism testing, central-extension cohomology,
small-group enumeration, and the integral-of-a-group decision procedure.

A group H is an integral of G when its derived subgroup [H,H] is isomorphic
to G.  The package computes an explicit order bound under which an integral
must exist if any does, enumerates all groups up to that bound (within a
practical range), and decides integrability by exhaustive search, alongside
the supporting machinery: Cayley-table validation, abelian invariants,
automorphism groups, 2-cocycles, and the kernel-shrinking reduction that
maps any integral to one of bounded size with the same derived subgroup.
"""

from .abelian import (
    AbelianType,
    Enlargement,
    NotAbelian,
    NotInImage,
    alpha_root,
    d,
    decompose,
    describe,
    enlarge,
    omega,
)
from .cohomology import (
    CentralCocycle,
    CocycleInvalid,
    NotCentral,
    NotNormalizedShift,
    ReduceReport,
    TransferData,
    TransferFailed,
    TwistedProduct,
    ValueEscapedOmega,
    cocycle_from_extension,
    map_kernel,
    reduce_integral,
    shift_cocycle,
    transfer_data,
    transfer_phi,
    twisted_product,
)
from .enumeration import (
    BRUTE_FORCE_CAP,
    ENUMERATION_CAP,
    CatalogEntry,
    CorruptCatalog,
    NonSolvableOrderUnsupported,
    OrderOutOfRange,
    brute_force_groups,
    catalog_load,
    catalog_store,
    crc64,
    groups_of_order,
)
from .group import (
    ClosureExceedsCap,
    GroupError,
    GroupTable,
    Hom,
    InvalidTable,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
    Subset,
    all_subgroups,
    cycle_notation,
    direct_product,
    from_permutations,
    from_table,
    identity_hom,
    parse_cycles,
    trivial_group,
)
from .groupfile import GroupFileError, format_table, load_group_file, parse_group_text
from .integrability import (
    INCONCLUSIVE,
    INTEGRABLE,
    NOT_INTEGRABLE,
    ClauseResult,
    DecisionOutcome,
    LemmaReport,
    NotAnIntegral,
    bound,
    decide,
    lemma_suite,
    verify_thm21,
)
from .isomorphism import (
    AutListTooLarge,
    DEFAULT_AUT_CAP,
    Fingerprint,
    aut_list,
    aut_order,
    fingerprint,
    generating_sequence,
    isomorphic,
    min_generators,
    mu,
)
from .named import (
    abelian_group,
    alternating,
    cyclic,
    dihedral,
    klein_four,
    modular_two_group,
    quaternion,
    symmetric,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # group core
    "GroupError", "InvalidTable", "NotLatinSquare", "NoIdentity", "NoInverse",
    "NotAssociative", "NotNormal", "ClosureExceedsCap",
    "GroupTable", "Subset", "Hom",
    "from_table", "trivial_group", "identity_hom", "direct_product",
    "parse_cycles", "cycle_notation", "from_permutations", "all_subgroups",
    # group files
    "GroupFileError", "parse_group_text", "load_group_file", "format_table",
    # named constructors
    "cyclic", "abelian_group", "klein_four", "dihedral", "quaternion",
    "modular_two_group", "symmetric", "alternating",
    # abelian structure
    "NotAbelian", "NotInImage", "AbelianType", "Enlargement",
    "decompose", "d", "omega", "enlarge", "alpha_root", "describe",
    # isomorphism and automorphisms
    "Fingerprint", "AutListTooLarge", "DEFAULT_AUT_CAP",
    "fingerprint", "generating_sequence", "isomorphic",
    "aut_order", "aut_list", "min_generators", "mu",
    # cohomology and reduction
    "CocycleInvalid", "NotCentral", "NotNormalizedShift", "TransferFailed",
    "ValueEscapedOmega", "CentralCocycle", "TransferData", "TwistedProduct",
    "ReduceReport", "cocycle_from_extension", "twisted_product", "transfer_phi",
    "transfer_data", "shift_cocycle", "map_kernel", "reduce_integral",
    # enumeration and catalogs
    "ENUMERATION_CAP", "BRUTE_FORCE_CAP", "OrderOutOfRange",
    "NonSolvableOrderUnsupported", "CorruptCatalog", "CatalogEntry",
    "groups_of_order", "brute_force_groups", "catalog_store", "catalog_load",
    "crc64",
    # integrability
    "INTEGRABLE", "NOT_INTEGRABLE", "INCONCLUSIVE", "NotAnIntegral",
    "DecisionOutcome", "ClauseResult", "LemmaReport",
    "bound", "decide", "lemma_suite", "verify_thm21",
]
