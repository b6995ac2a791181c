"""Entanglement entropy of Bell-type states built from two coherent states.

Closed forms work entirely from the normalized overlap of the two coherent
vectors (held in log domain), on the Segal-Bargmann space over C^n and on the
level-k projective line.  :mod:`coherent_entropy.oracle` recomputes the same
entropies by literal partial trace and Jacobi diagonalization.
"""

__version__ = "0.1.0"

from .backends import Backend, BackendConfig, Point, cp1_overlap, distance, overlap, sb_overlap
from .entropy import (
    LN2,
    bound_gaussian,
    bound_general,
    cp1_example_entropy,
    entropy_deficit,
    entropy_exact,
    report,
    schmidt_pair,
)
from .errors import (
    CoherentEntropyError,
    ConvergenceError,
    DimensionError,
    OverlapError,
    TruncationError,
)
from .overlap import (
    EntropyReport,
    LogComplex,
    NormalizedOverlap,
    SchmidtPair,
    overlap_from_logs,
    overlap_from_raw,
)

__all__ = [
    "Backend", "BackendConfig", "Point", "cp1_overlap", "distance", "overlap", "sb_overlap",
    "LN2", "bound_gaussian", "bound_general", "cp1_example_entropy", "entropy_deficit", "entropy_exact",
    "report", "schmidt_pair",
    "CoherentEntropyError", "ConvergenceError", "DimensionError", "OverlapError",
    "TruncationError",
    "EntropyReport", "LogComplex", "NormalizedOverlap", "SchmidtPair",
    "overlap_from_logs", "overlap_from_raw",
]
