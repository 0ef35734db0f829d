"""Finite-group cyclic-subgroup density: exact computation and exhaustive
verification of the density inequality against the center, its equality
characterization, and the corollaries that follow from it."""

from .arith import euler_phi, factorize, is_prime
from .catalog import (
    GroupSpec,
    build_group,
    central_product_mod_involution,
    load_table,
    load_table_with_report,
    make_abelian,
    make_almost_extraspecial,
    make_cyclic,
    make_dihedral,
    make_extraspecial,
    make_generalized_quaternion,
    make_heisenberg,
    make_quaternion,
    make_symmetric,
    parse_group_spec,
)
from .density import (
    CyclicCensus,
    alpha,
    alpha_via_totient,
    average_order,
    census_matches_orders,
    count_identity_holds,
    cyclic_subgroups,
    subgroup_count_identity_check,
)
from .errors import (
    BadParameter,
    GroupError,
    InvalidArgument,
    NoIdentityAtZero,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotCentral,
    NotCentralInvolution,
    NotClosed,
    ParseError,
    SizeLimitExceeded,
    SpecSyntaxError,
    TableError,
    UnknownFamily,
)
from .groups import (
    CosetPartition,
    FiniteGroup,
    MinimalRep,
    Subgroup,
    center,
    coset_partition,
    direct_product,
    group_exponent,
    quotient_by_central,
    relabeled_copy,
    size_cap,
    subgroup_from_set,
    validate_table,
    validate_table_with_report,
    verify_group_invariants,
)
from .sweep import SweepConfig, SweepResult, corpus_specs, run_sweep
from .verify import (
    AlphaReport,
    CosetCheck,
    PerCosetFindings,
    StructuralResult,
    equality_holds,
    full_report,
    is_2_central,
    is_4_abelian,
    is_4_abelian_witness,
    per_coset_analysis,
    structural_condition,
    verify_alpha_inequality,
    verify_average_order_inequality,
    verify_equality_equivalence,
)

__version__ = "1.0.0"
