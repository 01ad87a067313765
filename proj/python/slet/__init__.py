"""Shifted-l expansion eigenvalues for radial Schroedinger equations."""

from ._core import (
    Breakdown,
    Candidate,
    ClosedFormResult,
    OracleResult,
    Potential,
    SletError,
    __version__,
    canonical,
    coulomb3d,
    discrepancies,
    landau,
    logarithmic,
    oracle,
    oscillator3d,
    power_law,
    solve,
)

__all__ = [
    "Breakdown",
    "Candidate",
    "ClosedFormResult",
    "OracleResult",
    "Potential",
    "SletError",
    "__version__",
    "canonical",
    "coulomb3d",
    "discrepancies",
    "landau",
    "logarithmic",
    "oracle",
    "oscillator3d",
    "power_law",
    "solve",
]
