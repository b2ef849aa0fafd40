"""Spherical-derivative bounds for locally univalent meromorphic functions.

Thin Python layer over the C++ core: sphere geometry, the bound family at a
given derivative level, class-membership probes, the radial Liouville
boundary problem, the constrained Schwarz-Pick bound, linear-ODE solution
pairs and the rational sup-norm bound.
"""

from ._core import (  # noqa: F401
    ActiveUpper,
    AnnulusSample,
    BoundReport,
    Branch,
    BvpTrajectory,
    ClosedFormSolution,
    ConstrainedSelfMap,
    ConvergenceError,
    DerivativeBundle,
    DiskAutomorphism,
    DomainError,
    ExtremalInnerFactor,
    GridSpec,
    InfeasibleError,
    IntegrateOptions,
    LengthPreservingLevel,
    MembershipReport,
    MeroFunction,
    NonNormalityReport,
    OdeSolutionPair,
    PairSample,
    PolePrescription,
    RationalBoundReport,
    RigidMotion,
    RigidityReport,
    SampledMap,
    SelfmapBoundReport,
    SharpnessReport,
    ShootOptions,
    SlopeBranch,
    SolutionCount,
    SpBoundValue,
    SpherePoint,
    SupNormEstimate,
    TrajectorySample,
    UnivalenceReport,
    asymptotic_factor,
    bernstein_factor,
    boundary_sup_norm,
    chordal_distance,
    check_rational_bound,
    closed_form_solutions,
    construct_extremal_automorphism,
    count_solutions,
    count_solutions_validated,
    extremal_boundary_defect,
    extremal_eta,
    feasible_radius_bound,
    format_complex,
    gn_counterexample,
    hyperbolic_density,
    integrate_pair,
    kn,
    length_preserving_level,
    level_is_feasible,
    make_extremal,
    norm_bound,
    origin_lower,
    origin_upper,
    parse_complex,
    parse_mero_function,
    pointwise_bounds,
    prescribed_rational,
    probe_local_univalence,
    probe_membership,
    sample_constrained_maps,
    shoot,
    sp_bound,
    sp_bound_or_classical,
    spherical_density,
    spherical_direct_fd,
    spherical_via_pair,
    verify_rigidity,
    verify_selfmap_bound,
    verify_sharpness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
