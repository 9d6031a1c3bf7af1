"""Verification-and-falsification lab for time-frequency concentration
inequalities: exact arc/interval energies of polynomials and bandlimited
spectra, rearrangement checkers, the extremal trigonometric bound, and
eigenvalue-level concentration suprema, with JSON claim certificates.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (  # noqa: F401
    ArcUnion,
    ConfigError,
    CosineSeries,
    DegenerateInputError,
    HypothesisError,
    InfeasibleRequestError,
    IntervalUnion,
    MalformedInputError,
    Poly,
    SizeGuardError,
    Spectrum,
    TrigConfig,
    arc_energy,
    brute_force_best_permutation,
    check_instance,
    check_lemma_h,
    check_montgomery20,
    check_thm_discrete,
    check_thm_improv,
    check_thm_main,
    claimed_bound,
    concentration,
    from_indicator,
    h_value,
    hlp_order,
    intersect,
    interval_energy_form,
    make_spectrum,
    make_spectrum_panels,
    max_sum_sin_reduced,
    modulus_poly,
    modulus_spectrum,
    montgomery_embed,
    norm_sq,
    random_arcs,
    random_union,
    recheck,
    residue_clusters,
    rotate_poly,
    run_campaign,
    search_extremal_set,
    sup_concentration,
    symmetric_difference,
    time_energy,
    time_kernel,
    toeplitz_weights,
    top_eigenpair_circle,
    top_eigenpair_continuous,
    unite,
    multistart_max_h,
)

__all__ = [name for name in dir() if not name.startswith("_")]
