import numpy as np
import pytest

from coherent_entropy.errors import ConvergenceError
from coherent_entropy.jacobi import _round_robin, hermitian_spectrum, off_norm


@pytest.mark.parametrize("n", [2, 3, 4, 7, 10])
def test_round_robin_covers_every_pair_once(n):
    seen = []
    for P, Q in _round_robin(n):
        idx = list(P) + list(Q)
        assert len(idx) == len(set(idx)), "pairs inside a round must be disjoint"
        seen.extend(zip(P.tolist(), Q.tolist()))
    assert sorted(seen) == [(i, j) for i in range(n) for j in range(i + 1, n)]


def test_diagonal_and_pauli_x():
    assert hermitian_spectrum(np.diag([0.5, 0.5])).tolist() == [0.5, 0.5]
    np.testing.assert_allclose(hermitian_spectrum([[0, 1], [1, 0]]), [1.0, -1.0], atol=1e-15)


def test_pauli_y_complex():
    np.testing.assert_allclose(hermitian_spectrum([[0, -1j], [1j, 0]]), [1.0, -1.0], atol=1e-15)


def test_one_by_one():
    assert hermitian_spectrum([[3.0]]).tolist() == [3.0]


@pytest.mark.parametrize("n", [2, 5, 8, 17, 40])
def test_random_hermitian_against_lapack(n):
    rng = np.random.default_rng(n)
    x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = x + x.conj().T
    ours = hermitian_spectrum(h)
    ref = np.sort(np.linalg.eigvalsh(h))[::-1]
    np.testing.assert_allclose(ours, ref, atol=1e-12 * np.abs(ref).max())
    assert abs(ours.sum() - np.trace(h).real) < 1e-11 * max(1, np.linalg.norm(h))


def test_degenerate_spectrum():
    rng = np.random.default_rng(3)
    q, _ = np.linalg.qr(rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6)))
    h = q @ np.diag([2.0, 2.0, 2.0, -1.0, -1.0, 0.0]) @ q.conj().T
    np.testing.assert_allclose(hermitian_spectrum(h), [2, 2, 2, 0, -1, -1], atol=1e-13)


def test_rejects_non_hermitian():
    with pytest.raises(ValueError):
        hermitian_spectrum([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(ValueError):
        hermitian_spectrum(np.ones((2, 3)))


def test_sweep_budget():
    rng = np.random.default_rng(0)
    x = rng.standard_normal((12, 12))
    with pytest.raises(ConvergenceError):
        hermitian_spectrum(x + x.T, tol=1e-30, max_sweeps=1)


def test_off_norm():
    assert off_norm(np.array([[1.0, 3.0], [4.0, 2.0]])) == pytest.approx(5.0)
