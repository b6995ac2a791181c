"""Closed-form entanglement entropy of the normalized Bell-type state.

For coherent vectors u, v the state ``u(x)u/|u|^2 + v(x)v/|v|^2`` lives in the
two-dimensional span of u and v, so its reduced density matrix has at most two
nonzero eigenvalues.  They depend only on the normalized overlap ``c`` through
``a = Re c`` and ``b = Im c``::

    lambda = 1/2 +- a sqrt(1 - b^2) / (1 + a^2 - b^2)

All routines below are written in terms of ``g = 1 - |c|^2`` (taken from the
log form of ``c``) so that neither ``|c| -> 1`` nor ``|c| -> 0`` loses accuracy:
``1 - b^2 = g + a^2`` and ``1 + a^2 - b^2 = g + 2 a^2``.
"""

from __future__ import annotations

import math

from .backends import Backend, BackendConfig, Point, distance, overlap
from .overlap import EntropyReport, NormalizedOverlap, SchmidtPair

LN2 = math.log(2.0)


def schmidt_pair(c: NormalizedOverlap) -> SchmidtPair:
    """Reduced-density eigenvalues of the Bell-type state with overlap ``c``."""
    if c.is_unit:
        return SchmidtPair(1.0, 0.0)
    g = c.one_minus_abs_sq
    a = c.c.real
    denom = g + 2.0 * a * a
    half_gap = abs(a) * math.sqrt(g + a * a) / denom
    # lambda1 * lambda2 = g^2 / (4 denom^2); dividing avoids 1/2 - half_gap
    lam2 = (g * g) / (4.0 * denom * denom) / (0.5 + half_gap)
    lam2 = min(lam2, 0.5)
    return SchmidtPair(1.0 - lam2, lam2)


def entropy_deficit(s: SchmidtPair) -> float:
    """``ln 2 - entropy``, accurate when both eigenvalues are close to 1/2.

    With ``lambda = 1/2 +- d`` the deficit is
    ``log1p(-4 d^2) / 2 + 2 d atanh(2 d)``, roughly ``2 d^2``.
    """
    d = 0.5 * (s.lambda1 - s.lambda2)
    if d <= 0.25:
        return max(0.5 * math.log1p(-4.0 * d * d) + 2.0 * d * math.atanh(2.0 * d), 0.0)
    return LN2 - _entropy_far(s.lambda2)


def _entropy_far(lam2: float) -> float:
    if lam2 == 0.0:
        return 0.0
    # lambda1 = 1 - lambda2 up to rounding; log1p keeps small lambda2 accurate
    return -(1.0 - lam2) * math.log1p(-lam2) - lam2 * math.log(lam2)


def entropy_exact(s: SchmidtPair) -> float:
    """``-l1 ln l1 - l2 ln l2`` in nats, with ``0 ln 0 = 0``."""
    if s.lambda1 - s.lambda2 <= 0.5:
        return LN2 - entropy_deficit(s)
    return min(max(_entropy_far(s.lambda2), 0.0), LN2)


def bound_general(c: NormalizedOverlap) -> float:
    """Lower bound ``(1 - |c|^2)^2 / (2 (1 + Re c^2)^2)`` on the entropy.

    Equal to ``1 - lambda1^2 - lambda2^2``, i.e. the entropy with ``-ln x``
    replaced by ``1 - x``.
    """
    if c.is_unit:
        return 0.0
    g = c.one_minus_abs_sq
    a = c.c.real
    denom = g + 2.0 * a * a
    return (g * g) / (2.0 * denom * denom)


def bound_gaussian(k: int, dist: float) -> float:
    """Explicit Segal-Bargmann bound ``(1 - exp(-k dist^2))^4 / 2``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k!r}")
    if dist < 0:
        raise ValueError(f"dist must be nonnegative, got {dist!r}")
    return 0.5 * (-math.expm1(-k * dist * dist)) ** 4


def cp1_example_entropy(x: float) -> float:
    """Entropy of the level-1 CP^1 state at ``p = x``, ``q = -x`` (x > 0).

    ``[(1 + x^4) ln(1 + x^4) - x^4 ln(x^4)] / (1 + x^4)``, which is symmetric
    under ``x -> 1/x``; it is evaluated at ``min(x, 1/x)`` so large ``x``
    neither overflows nor cancels.
    """
    if not x > 0:
        raise ValueError(f"x must be positive, got {x!r}")
    t = min(x, 1.0 / x) ** 4
    if t == 0.0:
        return 0.0
    return ((1.0 + t) * math.log1p(t) - t * math.log(t)) / (1.0 + t)


def report(p: Point, q: Point, cfg: BackendConfig) -> EntropyReport:
    c = overlap(p, q, cfg)
    s = schmidt_pair(c)
    dist = distance(p, q, cfg)
    gaussian = bound_gaussian(cfg.k, dist) if cfg.kind is Backend.SEGAL_BARGMANN else None
    return EntropyReport(
        overlap=c,
        schmidt=s,
        entropy=entropy_exact(s),
        bound_general=bound_general(c),
        bound_thm2=gaussian,
        k=cfg.k,
        dist=dist,
        decomposable_flag=c.is_unit,
    )
