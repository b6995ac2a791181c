"""Cyclic Jacobi eigenvalue iteration for dense Hermitian matrices.

Pivot pairs follow the round-robin (tournament) ordering: every sweep visits
each off-diagonal pair exactly once, in ``n - 1`` rounds of ``n // 2``
disjoint pairs.  Rotations inside a round commute, so a whole round is applied
with a handful of vectorized numpy operations.
"""

from __future__ import annotations

import numpy as np

from .errors import ConvergenceError

HERMITIAN_TOL = 1e-10
OFF_TOL = 1e-13
MAX_SWEEPS = 60


def _round_robin(n: int):
    """Yield ``(P, Q)`` index arrays for the ``n - 1`` rounds of one sweep.

    Odd ``n`` is padded with a dummy player whose pairings are dropped.
    """
    m = n + (n % 2)
    players = list(range(m))
    for _ in range(m - 1):
        half = m // 2
        ps, qs = [], []
        for i in range(half):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        yield np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)
        players = [players[0]] + [players[-1]] + players[1:-1]


def off_norm(a: np.ndarray) -> float:
    """Frobenius norm of the strictly off-diagonal part."""
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def hermitian_spectrum(m, *, tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted in descending order.

    Iterates until the off-diagonal Frobenius mass falls below
    ``tol * max(1, |m|_F)``.  Raises ``ValueError`` if ``m`` is not square or
    not Hermitian to ``HERMITIAN_TOL`` elementwise and ``ConvergenceError`` if
    the sweep budget runs out.
    """
    a = np.array(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    if np.max(np.abs(a - a.conj().T), initial=0.0) > HERMITIAN_TOL:
        raise ValueError("matrix is not Hermitian")
    n = a.shape[0]
    a = 0.5 * (a + a.conj().T)
    if n == 1:
        return np.real(np.diagonal(a)).copy()

    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    rounds = list(_round_robin(n))
    for _ in range(max_sweeps):
        if off_norm(a) < threshold:
            break
        for P, Q in rounds:
            _rotate_round(a, P, Q)
    else:
        if off_norm(a) >= threshold:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    return np.sort(np.real(np.diagonal(a)))[::-1].copy()


def _rotate_round(a: np.ndarray, P: np.ndarray, Q: np.ndarray) -> None:
    """Annihilate ``a[P, Q]`` for all pairs of one round, in place."""
    apq = a[P, Q]
    h = np.abs(apq)
    active = h > 0.0
    if not np.any(active):
        return
    P, Q, apq, h = P[active], Q[active], apq[active], h[active]
    app = a[P, P].real
    aqq = a[Q, Q].real
    # phase e^{i phi} of a_pq; the diagonal unitary diag(1, e^{-i phi}) makes it real
    w = apq / h
    theta = (aqq - app) / (2.0 * h)
    t = np.sign(theta) / (np.abs(theta) + np.hypot(1.0, theta))
    t[theta == 0.0] = 1.0
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    # G restricted to (p, q) is [[c, s], [-s conj(w), c conj(w)]]; A <- G^H A G
    wc = w.conj()
    colP = a[:, P].copy()
    colQ = a[:, Q]
    a[:, P] = colP * c - colQ * (s * wc)
    a[:, Q] = colP * s + colQ * (c * wc)
    rowP = a[P, :].copy()
    rowQ = a[Q, :]
    a[P, :] = rowP * c[:, None] - rowQ * (s * w)[:, None]
    a[Q, :] = rowP * s[:, None] + rowQ * (c * w)[:, None]
    a[P, P] = app - t * h
    a[Q, Q] = aqq + t * h
    a[P, Q] = 0.0
    a[Q, P] = 0.0
