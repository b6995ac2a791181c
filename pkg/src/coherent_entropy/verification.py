"""Cross-checks of the closed forms against the brute-force oracle.

Used by ``coherent-entropy verify`` and by the acceptance tests.  Every check
returns a :class:`CheckResult`; nothing raises on a failed comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List

import numpy as np

from .backends import Backend, BackendConfig, Point
from .entropy import bound_general, report, schmidt_pair
from .oracle import (
    CoefficientVector,
    cp1_quadrature_check,
    oracle_for_points,
    oracle_from_vectors,
    random_vector_pair,
)
from .overlap import overlap_from_raw

BOUND_SLACK = 1e-12
SCHMIDT_TOL = 1e-9
RANK_TOL = 1e-10
ORACLE_ENTROPY_TOL = 1e-8
QUADRATURE_TOL = 1e-6
SB_SAMPLE_LIMIT = 20.0


@dataclass
class CheckResult:
    suite: str
    passed: bool
    params: Dict[str, object] = field(default_factory=dict)
    detail: str = ""


def random_cases(cases: int, seed: int, min_dim: int = 2, max_dim: int = 16) -> Iterator[tuple]:
    """Deterministic ``(case_seed, dim)`` stream for the random-pair suite."""
    rng = np.random.default_rng(seed)
    for _ in range(cases):
        yield int(rng.integers(0, 2**63 - 1)), int(rng.integers(min_dim, max_dim + 1))


def check_random_pair(u: CoefficientVector, v: CoefficientVector) -> tuple:
    """Compare oracle and closed form for arbitrary vectors; returns (ok, detail)."""
    c = overlap_from_raw(u.norm_sq, v.norm_sq, u.inner(v))
    res = oracle_from_vectors(u, v)
    bound = bound_general(c)
    s = schmidt_pair(c)
    spec = res.spectrum
    problems = []
    if res.entropy < bound - BOUND_SLACK:
        problems.append(f"oracle entropy {res.entropy!r} < bound {bound!r}")
    if res.entropy <= 0.0:
        problems.append("entropy not strictly positive")
    err = max(abs(spec[0] - s.lambda1), abs(spec[1] - s.lambda2))
    if err > SCHMIDT_TOL:
        problems.append(f"Schmidt mismatch {err!r}: oracle {spec[:2]!r} vs {s!r}")
    rest = float(np.max(np.abs(spec[2:]), initial=0.0))
    if rest >= RANK_TOL:
        problems.append(f"third eigenvalue {rest!r} not negligible")
    return not problems, "; ".join(problems)


def random_pair_checks(cases: int, seed: int) -> List[CheckResult]:
    out = []
    for case_seed, dim in random_cases(cases, seed):
        u, v = random_vector_pair(dim, case_seed)
        ok, detail = check_random_pair(u, v)
        out.append(CheckResult("random-pair", ok, {"seed": case_seed, "dim": dim}, detail))
    return out


def coherent_samples(count: int, seed: int) -> Iterator[tuple]:
    """``(p, q, cfg)`` triples alternating between the two backends.

    Segal-Bargmann samples keep ``k |p|^2, k |q|^2 <= 20`` with n = 1; CP^1
    samples use levels up to 32.
    """
    rng = np.random.default_rng(seed)
    for i in range(count):
        if i % 2 == 0:
            k = int(rng.integers(1, 21))
            radius = math.sqrt(SB_SAMPLE_LIMIT / k)
            z = [
                radius * math.sqrt(rng.uniform()) * complex(math.cos(t), math.sin(t))
                for t in rng.uniform(0.0, 2.0 * math.pi, size=2)
            ]
            yield Point.of(z[0]), Point.of(z[1]), BackendConfig(Backend.SEGAL_BARGMANN, k)
        else:
            k = int(rng.integers(1, 33))
            z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
            yield Point.of(z[0]), Point.of(z[1]), BackendConfig(Backend.PROJECTIVE_LINE, k)


def check_coherent(p: Point, q: Point, cfg: BackendConfig) -> tuple:
    rep = report(p, q, cfg)
    res = oracle_for_points(p, q, cfg)
    problems = []
    diff = abs(res.entropy - rep.entropy)
    if diff >= ORACLE_ENTROPY_TOL:
        problems.append(f"|oracle - closed form| = {diff!r}")
    if abs(res.trace - 1.0) > 1e-12:
        problems.append(f"trace(rho) = {res.trace!r}")
    if np.sum(res.spectrum > RANK_TOL) > 2:
        problems.append("reduced density has rank > 2")
    return not problems, "; ".join(problems)


def coherent_pair_checks(count: int = 200, seed: int = 0) -> List[CheckResult]:
    out = []
    for p, q, cfg in coherent_samples(count, seed):
        ok, detail = check_coherent(p, q, cfg)
        params = {"backend": cfg.kind.value, "k": cfg.k, "p": p.format(), "q": q.format()}
        out.append(CheckResult("coherent-pair", ok, params, detail))
    return out


def quadrature_checks(max_k: int = 8) -> List[CheckResult]:
    out = []
    for k in range(1, max_k + 1):
        dev = cp1_quadrature_check(k)
        out.append(
            CheckResult(
                "cp1-quadrature", dev < QUADRATURE_TOL, {"k": k, "deviation": dev}, f"deviation {dev!r}"
            )
        )
    return out


def run_all(cases: int = 1000, seed: int = 42) -> List[CheckResult]:
    return (
        random_pair_checks(cases, seed)
        + coherent_pair_checks(200, seed)
        + quadrature_checks()
    )

