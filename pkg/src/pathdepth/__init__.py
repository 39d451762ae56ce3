"""Exact depth and Stanley depth of powers of path ideals of paths and cycles."""

from .monomials import (
    AmbientMismatchError,
    Monomial,
    MonomialIdeal,
    divides,
    lcm_mono,
    minimalize,
    parse_ideal,
    parse_monomial,
)
from .families import (
    CycleColonData,
    NoWitnessParameters,
    cycle_ideal,
    path_ideal,
    phi,
    t0_alpha,
    u_ideal,
    witness_l1,
    witness_w,
)
from .depth import (
    BettiTable,
    DepthResult,
    LcmLattice,
    PolarizationCapError,
    UnitIdealError,
    betti,
    build_lcm_lattice,
    depth_quotient,
    depth_via_polarization,
    max_ideal_associated,
    open_interval_homology,
    reduced_homology,
)
from .sdepth import (
    CharacteristicPoset,
    PosetCapError,
    PosetInterval,
    SdepthResult,
    SearchBudgetError,
    StanleyPartition,
    build_poset,
    has_partition_min_label,
    partition_to_decomposition,
    sdepth_quotient,
    verify_partition,
)
from .claims import ClaimReport, SesTriple, run_claims, ses_depth_bounds

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatchError",
    "Monomial",
    "MonomialIdeal",
    "divides",
    "lcm_mono",
    "minimalize",
    "parse_ideal",
    "parse_monomial",
    "CycleColonData",
    "NoWitnessParameters",
    "cycle_ideal",
    "path_ideal",
    "phi",
    "t0_alpha",
    "u_ideal",
    "witness_l1",
    "witness_w",
    "BettiTable",
    "DepthResult",
    "LcmLattice",
    "PolarizationCapError",
    "UnitIdealError",
    "betti",
    "build_lcm_lattice",
    "depth_quotient",
    "depth_via_polarization",
    "max_ideal_associated",
    "open_interval_homology",
    "reduced_homology",
    "CharacteristicPoset",
    "PosetCapError",
    "PosetInterval",
    "SdepthResult",
    "SearchBudgetError",
    "StanleyPartition",
    "build_poset",
    "has_partition_min_label",
    "partition_to_decomposition",
    "sdepth_quotient",
    "verify_partition",
    "ClaimReport",
    "SesTriple",
    "run_claims",
    "ses_depth_bounds",
    "__version__",
]
