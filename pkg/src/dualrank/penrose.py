"""Sampling dual {i}-inverses of full-rank factors and checking mixed products.

For a dual r-rank decomposition ``A = A1 A2`` the products
``A2^(i) A1^(1)`` (i = 1, 2, 4) and ``A2^(1) A1^(j)`` (j = 1, 2, 3) must be
{i}- resp. {j}-inverses of ``A``. Each factor inverse is drawn from a
closed-form family that lies inside the required class:

* {1}: pseudoinverse plus a null-space term (these are {1,2,4} for the
  left factor and {1,2,3} for the right one);
* {2}: a {1}-inverse composed with a dual idempotent ``E``;
* {3} of the left factor: ``M A1^T`` with ``M`` symmetric;
* {4} of the right factor: ``A2^T M`` with ``M`` symmetric.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .decomposition import DualRankFactors
from .dmpgi import pinv_col_full, pinv_row_full
from .dual import DualMatrix, dinverse, satisfies
from .errors import DimensionError, PreconditionError, RankError
from .matrix import rank
from . import sampling

CLAIMS = {
    "a1": 1,
    "a2": 2,
    "a4": 4,
    "b1": 1,
    "b2": 2,
    "b3": 3,
}


def _require_col_full(f: DualMatrix) -> None:
    if rank(f.real) != f.cols:
        raise RankError("real part is not column full rank")


def _require_row_full(g: DualMatrix) -> None:
    if rank(g.real) != g.rows:
        raise RankError("real part is not row full rank")


def _require_shape(name: str, x: DualMatrix, shape: tuple[int, int]) -> None:
    if x.shape != shape:
        raise DimensionError(f"{name} must be {shape[0]}x{shape[1]}, got {x.shape}")


def _require_symmetric(s: DualMatrix) -> None:
    if s.T != s:
        raise PreconditionError("parameter must be symmetric in both parts")


def _require_idempotent(e: DualMatrix) -> None:
    if e @ e != e:
        raise PreconditionError("parameter must be dual idempotent")


class _LeftFactor:
    """Column-full-rank dual factor with its pseudoinverse data cached."""

    def __init__(self, f: DualMatrix):
        _require_col_full(f)
        self.f = f
        self.pinv = pinv_col_full(f)
        self.residual = DualMatrix.identity(f.rows) - f @ self.pinv
        self.gram_inv = dinverse(f.T @ f)

    def one(self, w: DualMatrix) -> DualMatrix:
        _require_shape("W", w, (self.f.cols, self.f.rows))
        return self.pinv + w @ self.residual

    def two(self, w: DualMatrix, e: DualMatrix) -> DualMatrix:
        _require_shape("E", e, (self.f.cols, self.f.cols))
        _require_idempotent(e)
        return e @ self.one(w)

    def three(self, s: DualMatrix) -> DualMatrix:
        _require_shape("S", s, (self.f.cols, self.f.cols))
        _require_symmetric(s)
        return (self.gram_inv + s) @ self.f.T


class _RightFactor:
    """Row-full-rank dual factor with its pseudoinverse data cached."""

    def __init__(self, g: DualMatrix):
        _require_row_full(g)
        self.g = g
        self.pinv = pinv_row_full(g)
        self.residual = DualMatrix.identity(g.cols) - self.pinv @ g
        self.gram_inv = dinverse(g @ g.T)

    def one(self, v: DualMatrix) -> DualMatrix:
        _require_shape("V", v, (self.g.cols, self.g.rows))
        return self.pinv + self.residual @ v

    def two(self, v: DualMatrix, e: DualMatrix) -> DualMatrix:
        _require_shape("E", e, (self.g.rows, self.g.rows))
        _require_idempotent(e)
        return self.one(v) @ e

    def four(self, s: DualMatrix) -> DualMatrix:
        _require_shape("S", s, (self.g.rows, self.g.rows))
        _require_symmetric(s)
        return self.g.T @ (self.gram_inv + s)


def sample_dual_one_inverse_left(f: DualMatrix, w: DualMatrix) -> DualMatrix:
    """``F^+ + W (I - F F^+)``; satisfies ``X F == I``."""
    return _LeftFactor(f).one(w)


def sample_dual_one_inverse_right(g: DualMatrix, v: DualMatrix) -> DualMatrix:
    """``G^+ + (I - G^+ G) V``; satisfies ``G X == I``."""
    return _RightFactor(g).one(v)


def sample_dual_two_inverse_left(f: DualMatrix, w: DualMatrix, e: DualMatrix) -> DualMatrix:
    """``E X1`` with ``X1`` a left inverse of ``f`` and ``E`` idempotent."""
    return _LeftFactor(f).two(w, e)


def sample_dual_two_inverse_right(g: DualMatrix, v: DualMatrix, e: DualMatrix) -> DualMatrix:
    """``X1 E`` with ``X1`` a right inverse of ``g`` and ``E`` idempotent."""
    return _RightFactor(g).two(v, e)


def sample_dual_three_inverse_left(f: DualMatrix, s: DualMatrix) -> DualMatrix:
    """``((F^T F)^{-1} + S) F^T``; ``F X`` is symmetric for symmetric ``S``."""
    return _LeftFactor(f).three(s)


def sample_dual_four_inverse_right(g: DualMatrix, s: DualMatrix) -> DualMatrix:
    """``G^T ((G G^T)^{-1} + S)``; ``X G`` is symmetric for symmetric ``S``."""
    return _RightFactor(g).four(s)


@dataclass
class MembershipReport:
    samples: int
    seed: int
    passed: dict = field(default_factory=lambda: {c: 0 for c in CLAIMS})
    failed: dict = field(default_factory=lambda: {c: 0 for c in CLAIMS})
    first_counterexample: Optional[tuple[int, str]] = None

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def record(self, index: int, claim: str, holds: bool) -> None:
        if holds:
            self.passed[claim] += 1
            return
        self.failed[claim] += 1
        candidate = (index, claim)
        if self.first_counterexample is None or candidate < self.first_counterexample:
            self.first_counterexample = candidate

    def to_dict(self) -> dict:
        first = None
        if self.first_counterexample is not None:
            idx, claim = self.first_counterexample
            first = {"sample": idx, "claim": claim}
        return {
            "samples": self.samples,
            "seed": self.seed,
            "ok": self.ok,
            "passed": dict(self.passed),
            "failed": dict(self.failed),
            "first_counterexample": first,
        }


def _param(rng: random.Random, m: int, n: int, dual: bool) -> DualMatrix:
    real = sampling.int_matrix(rng, m, n)
    return DualMatrix(real, sampling.int_matrix(rng, m, n) if dual else None)


def _sym_param(rng: random.Random, n: int, dual: bool) -> DualMatrix:
    real = sampling.symmetric_int_matrix(rng, n)
    return DualMatrix(real, sampling.symmetric_int_matrix(rng, n) if dual else None)


def _idempotent_param(rng: random.Random, r: int, dual: bool) -> DualMatrix:
    k = rng.randint(0, r)
    if dual:
        return sampling.dual_idempotent(rng, r, k)
    return DualMatrix(sampling.real_projector(rng, r, k))


def _checked(factor: DualMatrix, x: DualMatrix, k: int, label: str) -> DualMatrix:
    # A sampler leaving its class would make the membership check vacuous.
    if not satisfies(factor, x, k):
        raise AssertionError(f"sampled {label} is not a {{{k}}}-inverse")
    return x


def verify_mixed_membership(
    factors: DualRankFactors, samples: int = 100, seed: int = 0, dual_params: bool = True
) -> MembershipReport:
    """Check the six mixed-product membership claims on random draws.

    Every draw ``k`` uses its own generator seeded from ``(seed, k)``, so
    the report depends only on the arguments.
    """
    factors.check()
    left, right = factors.left, factors.right
    lf, rf = _LeftFactor(left), _RightFactor(right)
    m, r = left.shape
    n = right.cols
    a = factors.product()
    report = MembershipReport(samples, seed)
    for k in range(samples):
        rng = random.Random(f"{seed}:{k}")
        d = dual_params
        l1 = _checked(left, lf.one(_param(rng, r, m, d)), 1, "A1^(1)")
        r1 = _checked(right, rf.one(_param(rng, n, r, d)), 1, "A2^(1)")
        r2 = _checked(right, rf.two(_param(rng, n, r, d), _idempotent_param(rng, r, d)), 2, "A2^(2)")
        r4 = _checked(right, rf.four(_sym_param(rng, r, d)), 4, "A2^(4)")
        l1b = _checked(left, lf.one(_param(rng, r, m, d)), 1, "A1^(1)")
        r1b = _checked(right, rf.one(_param(rng, n, r, d)), 1, "A2^(1)")
        l2 = _checked(left, lf.two(_param(rng, r, m, d), _idempotent_param(rng, r, d)), 2, "A1^(2)")
        l3 = _checked(left, lf.three(_sym_param(rng, r, d)), 3, "A1^(3)")
        candidates = {
            "a1": r1 @ l1,
            "a2": r2 @ l1,
            "a4": r4 @ l1,
            "b1": r1b @ l1b,
            "b2": r1b @ l2,
            "b3": r1b @ l3,
        }
        for claim, x in candidates.items():
            report.record(k, claim, satisfies(a, x, CLAIMS[claim]))
    return report
