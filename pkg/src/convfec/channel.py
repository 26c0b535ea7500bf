"""Gilbert-Elliot two-state Markov erasure channel.

State `correct` moves to `erased` with probability p_ce, state `erased`
stays erased with probability p_ee; the chain starts in `correct`.
Uniform deviates come from a counter-mode splitmix64 stream, so patterns
are bit-reproducible across platforms and backends; the generator
identifier travels with simulation results.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import errors
from ._backend import USE_NUMBA
from ._kernels import _ge_chain_numpy, _ge_chain_seq, _splitmix_stream

RNG_ID = "splitmix64-counter/v1"

# The stationary erasure fraction of the chain is p_ce / (1 + p_ce - p_ee).


@dataclass(frozen=True)
class ChannelParams:
    p_ce: float  # P(erased | previous correct)
    p_ee: float  # P(erased | previous erased)
    seed: int = 1

    def __post_init__(self):
        if not (0.0 < self.p_ce < 1.0 and 0.0 < self.p_ee < 1.0):
            raise errors.BadParams("transition probabilities must lie in (0,1)")
        if not self.p_ce < self.p_ee:
            warnings.warn(
                "p_ce < p_ee is the bursty regime; the chain is still well-defined",
                stacklevel=3,
            )


def stationary_erasure_fraction(p_ce: float, p_ee: float) -> float:
    return p_ce / (1.0 + p_ce - p_ee)


def mean_burst_length(p_ee: float) -> float:
    return 1.0 / (1.0 - p_ee)


def generate_pattern(params: ChannelParams, length: int) -> np.ndarray:
    """Sample the chain; returns uint8 array with 1 = erased.

    Deterministic in (seed, length): the same seed always yields the
    same prefix.
    """
    if length < 0:
        raise errors.BadParams("length must be >= 0")
    if length == 0:
        return np.zeros(0, dtype=np.uint8)
    if USE_NUMBA:
        return _ge_chain_seq(np.uint64(params.seed), params.p_ce, params.p_ee, length)
    return _ge_chain_numpy(np.uint64(params.seed), params.p_ce, params.p_ee, length)


def derive_trial_seed(seed: int, index: int) -> int:
    """Per-trial seed: output #(index+1) of the master splitmix64 stream."""
    return int(_splitmix_stream(np.uint64(seed), index + 1)[-1])


def known_mask(pattern) -> np.ndarray:
    """Convert an erasure pattern (1 = erased) to a known-mask."""
    return np.asarray(pattern, dtype=np.uint8) == 0
