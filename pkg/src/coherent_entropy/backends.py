"""Coherent-state overlaps on the two supported phase spaces.

``SegalBargmann``
    Holomorphic functions on C^n with Gaussian weight ``exp(-k |z|^2)``.  The
    coherent vector at ``p`` is ``exp(k z.conj(p))`` with squared norm
    ``exp(k |p|^2)``, and ``<Theta_p, Theta_q> = exp(k q.conj(p))``.

``ProjectiveLine``
    Polynomials of degree ``<= k`` on the affine chart of CP^1, reproducing
    kernel ``(1 + z conj(w))^k``.  The coherent vector at ``p`` is
    ``(1 + z conj(p))^k`` with squared norm ``(1 + |p|^2)^k``.

Both backends build the level-1 log overlap and scale it by ``k``, so
``c_k = c_1 ** k`` holds by construction.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import DimensionError
from .overlap import LogComplex, NormalizedOverlap


class Backend(enum.Enum):
    SEGAL_BARGMANN = "sb"
    PROJECTIVE_LINE = "cp1"


@dataclass(frozen=True)
class Point:
    """A point of C^n (or of the affine chart of CP^1 when n = 1)."""

    coords: Tuple[complex, ...]

    def __post_init__(self):
        coords = tuple(complex(z) for z in self.coords)
        if not coords:
            raise DimensionError("a point needs at least one coordinate")
        if not all(cmath.isfinite(z) for z in coords):
            raise ValueError(f"point coordinates must be finite, got {coords!r}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: complex) -> "Point":
        return cls(tuple(coords))

    @classmethod
    def parse(cls, text: str) -> "Point":
        """Parse ``"re,im;re,im;..."`` (dot decimal separator)."""
        coords = []
        for chunk in text.split(";"):
            parts = chunk.split(",")
            if len(parts) != 2:
                raise ValueError(f"coordinate {chunk!r} is not of the form 're,im'")
            re, im = (float(s) for s in parts)
            coords.append(complex(re, im))
        return cls(tuple(coords))

    def format(self) -> str:
        return ";".join(f"{z.real!r},{z.imag!r}" for z in self.coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True)
class BackendConfig:
    kind: Backend
    k: int
    n: int = 1

    def __post_init__(self):
        kind = Backend(self.kind)
        object.__setattr__(self, "kind", kind)
        if isinstance(self.k, bool) or int(self.k) != self.k or self.k < 1:
            raise ValueError(f"level k must be a positive integer, got {self.k!r}")
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise ValueError(f"dimension n must be a positive integer, got {self.n!r}")
        if kind is Backend.PROJECTIVE_LINE and self.n != 1:
            raise ValueError("the projective line backend has n = 1")
        object.__setattr__(self, "k", int(self.k))
        object.__setattr__(self, "n", int(self.n))


def _check_dims(p: Point, q: Point, cfg: BackendConfig) -> None:
    if len(p) != cfg.n or len(q) != cfg.n:
        raise DimensionError(
            f"points have dimensions {len(p)} and {len(q)}, backend expects n = {cfg.n}"
        )


def _sq_dist(p: Sequence[complex], q: Sequence[complex]) -> float:
    return math.fsum(abs(a - b) ** 2 for a, b in zip(p, q))


def sb_log_overlap_level1(p: Point, q: Point) -> LogComplex:
    """``q.conj(p) - |p|^2/2 - |q|^2/2`` as a LogComplex.

    The real part equals ``-|p - q|^2 / 2`` identically; using that form avoids
    cancelling two large numbers when ``|p|`` is large.
    """
    phase = math.fsum((b * a.conjugate()).imag for a, b in zip(p, q))
    return LogComplex(-0.5 * _sq_dist(p, q), phase)


def sb_overlap(p: Point, q: Point, cfg: BackendConfig) -> NormalizedOverlap:
    if cfg.kind is not Backend.SEGAL_BARGMANN:
        raise ValueError(f"sb_overlap called with backend {cfg.kind}")
    _check_dims(p, q, cfg)
    return NormalizedOverlap.from_log(sb_log_overlap_level1(p, q) ** cfg.k)


def _cp1_chordal(p: complex, q: complex) -> float:
    # 1 - |<Theta_p, Theta_q>|^2 / (|Theta_p|^2 |Theta_q|^2) at level 1
    return abs(p - q) ** 2 / ((1.0 + abs(p) ** 2) * (1.0 + abs(q) ** 2))


def cp1_log_overlap_level1(p: Point, q: Point) -> LogComplex:
    """``Log(1 + q conj(p)) - ln(1+|p|^2)/2 - ln(1+|q|^2)/2``; zero at antipodes."""
    (a,), (b,) = p.coords, q.coords
    kernel = 1.0 + b * a.conjugate()
    if kernel == 0:
        return LogComplex.zero()
    chordal = _cp1_chordal(a, b)
    if chordal < 0.5:
        log_mag = 0.5 * math.log1p(-chordal)
    else:
        log_mag = math.log(abs(kernel)) - 0.5 * (
            math.log1p(abs(a) ** 2) + math.log1p(abs(b) ** 2)
        )
    return LogComplex(log_mag, cmath.phase(kernel))


def cp1_overlap(p: Point, q: Point, cfg: BackendConfig) -> NormalizedOverlap:
    if cfg.kind is not Backend.PROJECTIVE_LINE:
        raise ValueError(f"cp1_overlap called with backend {cfg.kind}")
    _check_dims(p, q, cfg)
    return NormalizedOverlap.from_log(cp1_log_overlap_level1(p, q) ** cfg.k)


def overlap(p: Point, q: Point, cfg: BackendConfig) -> NormalizedOverlap:
    """Dispatch to the overlap routine of ``cfg.kind``."""
    if cfg.kind is Backend.SEGAL_BARGMANN:
        return sb_overlap(p, q, cfg)
    return cp1_overlap(p, q, cfg)


def distance(p: Point, q: Point, cfg: BackendConfig) -> float:
    """Euclidean distance on C^n; Fubini-Study geodesic distance on CP^1.

    The CP^1 metric is normalized so that antipodal points are pi/2 apart, i.e.
    ``cos(distance) = |c|`` at level 1.
    """
    _check_dims(p, q, cfg)
    if cfg.kind is Backend.SEGAL_BARGMANN:
        return math.sqrt(_sq_dist(p.coords, q.coords))
    (a,), (b,) = p.coords, q.coords
    chordal = min(_cp1_chordal(a, b), 1.0)
    if chordal < 0.5:
        cos_d = math.sqrt(1.0 - chordal)
    else:
        cos_d = abs(1.0 + b * a.conjugate()) / math.sqrt((1 + abs(a) ** 2) * (1 + abs(b) ** 2))
    return math.atan2(math.sqrt(chordal), cos_d)
