"""Triangle counting over dynamic edge streams."""

from ._core import (
    DyntriError,
    F2Sketch,
    TwoPathEstimator,
    __version__,
    doulion_estimate,
    estimate,
    exact_stats,
    gen_complete,
    gen_gnp,
    parse_stream,
    verify_lower_bounds,
)

__all__ = [
    "DyntriError",
    "F2Sketch",
    "TwoPathEstimator",
    "__version__",
    "doulion_estimate",
    "estimate",
    "exact_stats",
    "gen_complete",
    "gen_gnp",
    "parse_stream",
    "verify_lower_bounds",
]
