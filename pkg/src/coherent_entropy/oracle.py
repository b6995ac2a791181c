"""Brute-force verification path.

Coherent vectors are expanded in an explicit orthonormal basis, the Bell-type
state is formed as a coefficient matrix ``W`` (so that ``b = sum W_ij e_i (x) e_j``),
the second factor is traced out literally (``rho = W W^H``), and ``rho`` is
diagonalized with the Jacobi solver.  Nothing here reuses the closed-form
Schmidt formula; the two paths meet only in the comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Tuple

import numpy as np

from .backends import Backend, BackendConfig, Point
from .errors import ConvergenceError, DimensionError, TruncationError
from .jacobi import hermitian_spectrum

#: Largest k |p|^2 the truncated Segal-Bargmann expansion accepts.
SB_REGIME_LIMIT = 30.0
NEGATIVE_CLAMP = 1e-10


@dataclass(frozen=True)
class TruncationSpec:
    """Hard degree cap and relative tail tolerance for Segal-Bargmann vectors."""

    max_degree: int = 512
    tail_tol: float = 1e-12

    def __post_init__(self):
        if self.max_degree < 1:
            raise ValueError("max_degree must be positive")
        if not 0.0 < self.tail_tol < 1.0:
            raise ValueError("tail_tol must lie in (0, 1)")


@dataclass(frozen=True)
class CoefficientVector:
    """Coefficients ``<v, e_i>`` in a fixed orthonormal basis.

    ``truncation_tail`` bounds the discarded squared-norm mass relative to
    the full squared norm (zero when the expansion is exact).
    """

    entries: np.ndarray
    truncation_tail: float = 0.0

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @property
    def norm_sq(self) -> float:
        return float(np.vdot(self.entries, self.entries).real)

    def inner(self, other: "CoefficientVector") -> complex:
        """``<self, other>``, linear in the first argument."""
        return complex(np.sum(self.entries * other.entries.conj()))


@dataclass(frozen=True)
class CoefficientMatrix:
    entries: np.ndarray

    def __post_init__(self):
        fro = float(np.linalg.norm(self.entries))
        if abs(fro - 1.0) > 1e-12:
            raise ValueError(f"coefficient matrix must have unit Frobenius norm, got {fro!r}")


def _relative_tails(x: float, degree: int) -> np.ndarray:
    """``tails[M] = sum_{m>M} x^m / m! / e^x`` for M = 0 .. degree, x > 0."""
    # terms past degree + 200 + 4x are far below any representable tail
    count = degree + 200 + int(4 * x)
    m = np.arange(count, dtype=float)
    lgam = np.array([math.lgamma(i + 1.0) for i in range(count)])
    terms = np.exp(m * math.log(x) - lgam - x)
    tails = np.cumsum(terms[::-1])[::-1]
    return tails[1 : degree + 2]


def sb_truncation(x: float, spec: TruncationSpec) -> Tuple[int, float]:
    """Smallest degree M whose relative tail is below ``spec.tail_tol``.

    ``x`` is ``k |p|^2`` for one coordinate.  Returns ``(M, tail)``.
    """
    if x == 0.0:
        return 0, 0.0
    tails = _relative_tails(x, spec.max_degree)
    ok = np.nonzero(tails < spec.tail_tol)[0]
    if ok.size == 0:
        raise TruncationError(
            f"k|p|^2 = {x!r}: tail tolerance {spec.tail_tol!r} not met by degree {spec.max_degree}"
        )
    M = int(ok[0])
    return M, float(tails[M])


def _sb_coordinate_vector(z: complex, k: int, degree: int) -> np.ndarray:
    """``sqrt(k^m / m!) conj(z)^m`` for m = 0 .. degree, built in log domain."""
    m = np.arange(degree + 1, dtype=float)
    if z == 0:
        out = np.zeros(degree + 1, dtype=np.complex128)
        out[0] = 1.0
        return out
    lgam = np.array([math.lgamma(i + 1.0) for i in range(degree + 1)])
    log_mag = 0.5 * (m * math.log(k) - lgam) + m * math.log(abs(z))
    phase = -m * math.atan2(z.imag, z.real)
    return np.exp(log_mag) * np.exp(1j * phase)


def sb_coefficients(
    p: Point,
    cfg: BackendConfig,
    spec: TruncationSpec = TruncationSpec(),
    degree: Optional[int] = None,
) -> CoefficientVector:
    """Segal-Bargmann coherent vector in the orthonormal monomial basis.

    For n > 1 the basis is the tensor product of the one-variable bases, with
    the same degree ``degree`` in every coordinate (multi-indices ordered
    lexicographically).  When ``degree`` is None the smallest degree meeting
    ``spec.tail_tol`` is chosen.
    """
    if cfg.kind is not Backend.SEGAL_BARGMANN:
        raise ValueError(f"sb_coefficients called with backend {cfg.kind}")
    if len(p) != cfg.n:
        raise DimensionError(f"point has dimension {len(p)}, backend expects {cfg.n}")
    xs = [cfg.k * abs(z) ** 2 for z in p.coords]
    if max(xs) > SB_REGIME_LIMIT:
        raise TruncationError(
            f"k|p|^2 = {max(xs)!r} exceeds the oracle regime limit {SB_REGIME_LIMIT}"
        )
    coord_spec = TruncationSpec(spec.max_degree, spec.tail_tol / cfg.n)
    if degree is None:
        degree = max(sb_truncation(x, coord_spec)[0] for x in xs)
    elif degree > spec.max_degree:
        raise TruncationError(f"degree {degree} exceeds cap {spec.max_degree}")
    kept = 1.0
    for x in xs:
        if x > 0.0:
            kept *= 1.0 - _relative_tails(x, degree)[degree]
    tail = 1.0 - kept
    if tail >= spec.tail_tol:
        raise TruncationError(f"degree {degree} leaves relative tail {tail!r}")
    factors = [_sb_coordinate_vector(z, cfg.k, degree) for z in p.coords]
    entries = reduce(np.kron, factors)
    return CoefficientVector(entries, max(tail, 0.0))


def cp1_coefficients(p: Point, cfg: BackendConfig) -> CoefficientVector:
    """Exact coefficients ``sqrt(binom(k, j)) conj(p)^j``, j = 0 .. k."""
    if cfg.kind is not Backend.PROJECTIVE_LINE:
        raise ValueError(f"cp1_coefficients called with backend {cfg.kind}")
    (z,) = p.coords
    k = cfg.k
    entries = np.array(
        [math.sqrt(math.comb(k, j)) * z.conjugate() ** j for j in range(k + 1)],
        dtype=np.complex128,
    )
    return CoefficientVector(entries, 0.0)


def coherent_pair(
    p: Point, q: Point, cfg: BackendConfig, spec: TruncationSpec = TruncationSpec()
) -> Tuple[CoefficientVector, CoefficientVector]:
    """Coefficient vectors of Theta_p and Theta_q in a common basis."""
    if cfg.kind is Backend.PROJECTIVE_LINE:
        return cp1_coefficients(p, cfg), cp1_coefficients(q, cfg)
    coord_spec = TruncationSpec(spec.max_degree, spec.tail_tol / cfg.n)
    degree = max(
        sb_truncation(cfg.k * abs(z) ** 2, coord_spec)[0] for z in p.coords + q.coords
    )
    return sb_coefficients(p, cfg, spec, degree), sb_coefficients(q, cfg, spec, degree)


def bell_matrix(u: CoefficientVector, v: CoefficientVector) -> CoefficientMatrix:
    """Normalized coefficient matrix of ``u(x)u/|u|^2 + v(x)v/|v|^2``."""
    if u.dim != v.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs {v.dim}")
    nu, nv = u.norm_sq, v.norm_sq
    if nu == 0.0 or nv == 0.0:
        raise ValueError("bell_matrix needs nonzero vectors")
    w = np.outer(u.entries, u.entries) / nu + np.outer(v.entries, v.entries) / nv
    fro = np.linalg.norm(w)
    if fro == 0.0:
        raise ValueError("the Bell-type combination vanishes")
    return CoefficientMatrix(w / fro)


def reduced_density(w: CoefficientMatrix) -> np.ndarray:
    """Partial trace over the second factor: ``rho = W W^H``."""
    a = w.entries
    rho = a @ a.conj().T
    return 0.5 * (rho + rho.conj().T)


def oracle_entropy(spectrum) -> float:
    """``-sum lambda ln lambda`` over a density-matrix spectrum."""
    lam = np.asarray(spectrum, dtype=float)
    if lam.size == 0:
        raise ValueError("empty spectrum")
    if np.any(lam < -NEGATIVE_CLAMP) or np.any(lam > 1.0 + NEGATIVE_CLAMP):
        raise ValueError("spectrum entries must lie in [-1e-10, 1]")
    if abs(float(np.sum(lam)) - 1.0) > 1e-9:
        raise ValueError(f"spectrum sums to {float(np.sum(lam))!r}, not 1")
    lam = np.clip(lam, 0.0, 1.0)
    pos = lam[lam > 0.0]
    return float(-np.sum(pos * np.log(pos)))


@dataclass(frozen=True)
class OracleResult:
    spectrum: np.ndarray
    entropy: float
    trace: float


def oracle_from_vectors(u: CoefficientVector, v: CoefficientVector) -> OracleResult:
    rho = reduced_density(bell_matrix(u, v))
    spectrum = hermitian_spectrum(rho)
    return OracleResult(spectrum, oracle_entropy(spectrum), float(np.trace(rho).real))


def oracle_for_points(
    p: Point, q: Point, cfg: BackendConfig, spec: TruncationSpec = TruncationSpec()
) -> OracleResult:
    return oracle_from_vectors(*coherent_pair(p, q, cfg, spec))


def random_vector_pair(
    dim: int, seed: int, max_retries: int = 16
) -> Tuple[CoefficientVector, CoefficientVector]:
    """Two linearly independent standard complex normal vectors, seeded."""
    if dim < 2:
        raise ValueError("dim must be at least 2")
    rng = np.random.default_rng(seed)
    for _ in range(max_retries):
        z = (rng.standard_normal((2, dim)) + 1j * rng.standard_normal((2, dim))) / math.sqrt(2)
        u, v = CoefficientVector(z[0]), CoefficientVector(z[1])
        ratio = abs(u.inner(v)) ** 2 / (u.norm_sq * v.norm_sq)
        if 1.0 - ratio > 1e-12:
            return u, v
    raise ConvergenceError(f"no independent pair after {max_retries} draws (seed {seed})")


# -- quadrature check for the level-k projective line -------------------------

def _cp1_gram(k: int, n_radial: int, n_angular: int) -> np.ndarray:
    """Gram matrix of monomials z^0..z^k under the level-k CP^1 inner product.

    The weight is ``(k+1)/pi (1+|z|^2)^-(k+2)``.  Substituting
    ``|z|^2 = t / (1 - t)`` maps the radial half-line onto (0, 1) and turns the
    measure into ``(k+1)/(2 pi) (1-t)^k dt dtheta``.
    """
    nodes, weights = np.polynomial.legendre.leggauss(n_radial)
    t = 0.5 * (nodes + 1.0)
    wt = 0.5 * weights
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    wth = np.full(n_angular, 2.0 * np.pi / n_angular)
    r = np.sqrt(t / (1.0 - t))
    z = r[:, None] * np.exp(1j * theta)[None, :]
    measure = (k + 1) / (2.0 * np.pi) * (wt * (1.0 - t) ** k)[:, None] * wth[None, :]
    powers = np.stack([z ** i for i in range(k + 1)])  # (k+1, nr, na)
    return np.einsum("iab,jab,ab->ij", powers, powers.conj(), measure)


def cp1_quadrature_check(k: int, tol: float = 1e-9, max_level: int = 8) -> float:
    """Max deviation of the quadrature Gram matrix from ``diag(1 / binom(k, j))``.

    Radial Gauss-Legendre and angular trapezoid resolutions are doubled until
    two successive Gram matrices agree to ``tol``.
    """
    if not 1 <= k <= 8:
        raise ValueError("quadrature check supports 1 <= k <= 8")
    expected = np.diag([1.0 / math.comb(k, j) for j in range(k + 1)])
    n_radial, n_angular = 8, 2 * k + 4
    prev = _cp1_gram(k, n_radial, n_angular)
    for _ in range(max_level):
        n_radial, n_angular = 2 * n_radial, 2 * n_angular
        gram = _cp1_gram(k, n_radial, n_angular)
        if np.max(np.abs(gram - prev)) < tol:
            return float(np.max(np.abs(gram - expected)))
        prev = gram
    raise ConvergenceError(f"quadrature did not converge for k = {k}")
