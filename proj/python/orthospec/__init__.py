"""Relative trace formula toolkit for closed geodesics on compact
hyperbolic surfaces.

The heavy lifting lives in the C++ extension ``orthospec._core``; this
package re-exports its surface and adds small conveniences.
"""

from ._core import (  # noqa: F401
    BasmajianResult,
    CountRow,
    DeltaClass,
    DeltaKind,
    DoubleCosetRep,
    ExponentialKernel,
    FuchsianGroup,
    GeodesicFrame,
    GeometricSideResult,
    LadderRow,
    Moebius,
    NumericalError,
    OrthoSpectrum,
    PairCosets,
    SpectralDatum,
    SyntheticSpectrum,
    TabulatedKernel,
    UpperHalfPoint,
    ValidationError,
    __version__,
    axis_distance,
    basmajian_check,
    builtin_bolza,
    count_bounds_report,
    decay_bound,
    decay_bound_scaled,
    delta_invariant,
    diagonalize_hyperbolic,
    double_coset_reduce,
    elliptic_K,
    enumerate_ball,
    evaluate_word,
    geodesic_frame,
    geometric_side,
    hyperbolic_distance,
    intersection_angle,
    k0,
    k0e,
    k_imag_e,
    k_real_e,
    kernel_eval,
    kloosterman_sum,
    lambda_invariants,
    laplace_limit_check,
    main_term,
    make_group,
    moment_sum,
    orbital_integral_exp,
    orbital_integral_general,
    ortho_spectrum,
    pair_cosets,
    pairs_geometric_side,
    pi_delta,
    point_pair_u,
    small_t_asymptotic,
    spectral_side,
    synthetic_spectrum,
    synthetic_spectrum_jittered,
    twisted_main_term,
    uniform_asymptotic,
)
