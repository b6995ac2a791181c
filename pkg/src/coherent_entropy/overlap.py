"""Scale-free data model: log-domain complex numbers and the normalized overlap.

Everything downstream of a coherent-state pair depends on the single complex
number ``c = <u, v> / (|u| |v|)``.  Norms such as ``exp(k |p|^2)`` overflow
double precision long before the entropy stops being interesting, so ``c`` is
carried both as a plain complex value and as a ``LogComplex`` which stays
finite for any level ``k``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

from .errors import OverlapError

#: Tolerance above 1 within which |c| is clamped back onto the unit circle.
CLAMP_TOL = 1e-9

_TWO_PI = 2.0 * math.pi


def normalize_phase(phase: float) -> float:
    """Reduce an angle to the half-open interval (-pi, pi]."""
    if not math.isfinite(phase):
        raise ValueError(f"phase must be finite, got {phase!r}")
    reduced = math.remainder(phase, _TWO_PI)
    if reduced <= -math.pi:
        reduced += _TWO_PI
    return reduced


@dataclass(frozen=True)
class LogComplex:
    """A complex number ``exp(log_mag) * exp(i * phase)``.

    Zero is encoded canonically as ``log_mag = -inf`` with ``phase = 0``.
    """

    log_mag: float
    phase: float = 0.0

    def __post_init__(self):
        if math.isnan(self.log_mag) or self.log_mag == math.inf:
            raise ValueError(f"log_mag must be finite or -inf, got {self.log_mag!r}")
        if self.log_mag == -math.inf:
            object.__setattr__(self, "phase", 0.0)
        else:
            object.__setattr__(self, "phase", normalize_phase(self.phase))

    @classmethod
    def zero(cls) -> "LogComplex":
        return cls(-math.inf, 0.0)

    @classmethod
    def from_complex(cls, z: complex) -> "LogComplex":
        z = complex(z)
        if z == 0:
            return cls.zero()
        return cls(math.log(abs(z)), cmath.phase(z))

    @property
    def is_zero(self) -> bool:
        return self.log_mag == -math.inf

    def to_complex(self) -> complex:
        if self.is_zero:
            return 0j
        # exp underflows gracefully to 0.0 for very negative log_mag
        return cmath.rect(math.exp(self.log_mag), self.phase)

    def __mul__(self, other: "LogComplex") -> "LogComplex":
        if self.is_zero or other.is_zero:
            return LogComplex.zero()
        return LogComplex(self.log_mag + other.log_mag, self.phase + other.phase)

    def __truediv__(self, other: "LogComplex") -> "LogComplex":
        if other.is_zero:
            raise ZeroDivisionError("division by LogComplex zero")
        if self.is_zero:
            return LogComplex.zero()
        return LogComplex(self.log_mag - other.log_mag, self.phase - other.phase)

    def __pow__(self, k: int) -> "LogComplex":
        if self.is_zero:
            return LogComplex.zero() if k > 0 else LogComplex(0.0)
        return LogComplex(k * self.log_mag, k * self.phase)

    def conjugate(self) -> "LogComplex":
        return LogComplex(self.log_mag, -self.phase)


@dataclass(frozen=True)
class NormalizedOverlap:
    """The overlap ``c = <u, v> / (|u| |v|)``, with ``|c| <= 1``.

    ``log_c`` is authoritative; ``c`` is its materialization and may underflow
    to zero at extreme levels.  Build instances with :func:`overlap_from_raw`
    or :func:`overlap_from_logs` rather than directly.
    """

    c: complex
    log_c: LogComplex

    @classmethod
    def from_log(cls, log_c: LogComplex) -> "NormalizedOverlap":
        if log_c.log_mag > CLAMP_TOL:
            raise OverlapError(
                f"|c| = exp({log_c.log_mag!r}) exceeds 1: Cauchy-Schwarz violated"
            )
        if log_c.log_mag > 0.0:
            log_c = LogComplex(0.0, log_c.phase)
        return cls(log_c.to_complex(), log_c)

    @property
    def abs_c(self) -> float:
        return abs(self.c)

    @property
    def one_minus_abs_sq(self) -> float:
        """``1 - |c|^2`` without cancellation near the unit circle."""
        return -math.expm1(2.0 * self.log_c.log_mag)

    @property
    def is_unit(self) -> bool:
        """True when u and v are collinear (|c| = 1)."""
        return self.log_c.log_mag == 0.0

    def conjugate(self) -> "NormalizedOverlap":
        return NormalizedOverlap(self.c.conjugate(), self.log_c.conjugate())


def overlap_from_raw(norm_u_sq: float, norm_v_sq: float, inner_uv: complex) -> NormalizedOverlap:
    """Normalize ``<u, v>`` by ``sqrt(|u|^2 |v|^2)``.

    Raises :class:`OverlapError` for nonpositive norms or when the result lies
    more than ``CLAMP_TOL`` outside the unit disc.
    """
    if not (norm_u_sq > 0 and norm_v_sq > 0):
        raise OverlapError(f"norms must be positive, got {norm_u_sq!r}, {norm_v_sq!r}")
    inner_uv = complex(inner_uv)
    if not (cmath.isfinite(inner_uv) and math.isfinite(norm_u_sq) and math.isfinite(norm_v_sq)):
        raise OverlapError("raw overlap inputs must be finite")
    # sqrt of each factor separately keeps the product from overflowing
    c = inner_uv / (math.sqrt(norm_u_sq) * math.sqrt(norm_v_sq))
    mag = abs(c)
    if mag > 1.0 + CLAMP_TOL:
        raise OverlapError(f"|c| = {mag!r} exceeds 1: Cauchy-Schwarz violated")
    if mag > 1.0:
        c = c / mag
    log_c = LogComplex.from_complex(c)
    if mag >= 1.0:
        log_c = LogComplex(0.0, log_c.phase)
    return NormalizedOverlap(c, log_c)


def overlap_from_logs(
    log_norm_u_sq: float, log_norm_v_sq: float, log_inner_uv: LogComplex
) -> NormalizedOverlap:
    """Same as :func:`overlap_from_raw` with every input given as a logarithm."""
    if not (math.isfinite(log_norm_u_sq) and math.isfinite(log_norm_v_sq)):
        raise OverlapError("log norms must be finite")
    if log_inner_uv.is_zero:
        return NormalizedOverlap.from_log(LogComplex.zero())
    log_c = LogComplex(
        log_inner_uv.log_mag - 0.5 * (log_norm_u_sq + log_norm_v_sq), log_inner_uv.phase
    )
    return NormalizedOverlap.from_log(log_c)


@dataclass(frozen=True)
class SchmidtPair:
    """Eigenvalues ``lambda1 >= lambda2`` of the two-term reduced density matrix."""

    lambda1: float
    lambda2: float

    def __post_init__(self):
        if not (1.0 >= self.lambda1 >= self.lambda2 >= 0.0):
            raise ValueError(f"invalid Schmidt pair ({self.lambda1!r}, {self.lambda2!r})")
        if abs(self.lambda1 + self.lambda2 - 1.0) > 1e-14:
            raise ValueError(
                f"Schmidt pair does not sum to 1: {self.lambda1!r} + {self.lambda2!r}"
            )


@dataclass(frozen=True)
class EntropyReport:
    """Exact entropy and lower bounds (all in nats) for one (p, q, k) query.

    ``bound_thm2`` is the explicit Gaussian bound ``(1 - exp(-k |p-q|^2))^4 / 2``
    and is only present on the Segal-Bargmann backend.
    """

    overlap: NormalizedOverlap
    schmidt: SchmidtPair
    entropy: float
    bound_general: float
    k: int
    bound_thm2: Optional[float] = None
    dist: Optional[float] = None
    decomposable_flag: bool = False
