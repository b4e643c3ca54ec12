"""Synthetic Lorentzian measure toolkit.

Causal covers, Lorentzian Hausdorff measure estimates, causal weighted
integrals and fixed-scale coarea experiments over finite pre-length
spaces. The heavy lifting lives in the C++ extension module.
"""

from ._lcoarea import (
    InfeasibleError,
    InputError,
    SizeError,
    Space,
    UnsupportedError,
    coarea_experiment,
    cover_value,
    covering_demo,
    estimate_measure,
    minkowski_tau,
    minkowski_volume,
    null_tiling,
    omega,
    rho,
    sprinkle,
    strong_measure_value,
    tau_length,
    tlip,
    v1_of_curve,
    weighted_integral,
    __version__,
)

__all__ = [
    "InfeasibleError",
    "InputError",
    "SizeError",
    "Space",
    "UnsupportedError",
    "coarea_experiment",
    "cover_value",
    "covering_demo",
    "estimate_measure",
    "minkowski_tau",
    "minkowski_volume",
    "null_tiling",
    "omega",
    "rho",
    "sprinkle",
    "strong_measure_value",
    "tau_length",
    "tlip",
    "v1_of_curve",
    "weighted_integral",
    "__version__",
]
