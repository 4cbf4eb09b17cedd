"""Tableau codecs for uniform Bernoulli sequences."""

from ._core import (
    BcodecError,
    arch,
    decode_first_nerve,
    decode_first_weyl,
    dual_knuth_equivalent,
    encode_weyl,
    inverse_rsk,
    knuth_equivalent,
    nerve,
    nerve_endpoint,
    omega,
    profile_distance,
    r_theta,
    ranking_from_z,
    rsk,
    run_arch_experiment,
    run_arrival_experiment,
    run_decoding_experiment,
    run_fluctuation_sampling,
    run_shape_experiment,
    sample_realization,
    sch_shift,
    shift_w,
)

__all__ = [name for name in dir() if not name.startswith("_")]
