"""Seeded random instances: small-integer matrices, projectors, EP matrices.

All generators take a :class:`random.Random` so results are reproducible.
"""

from __future__ import annotations

import random
from typing import Optional

from .dual import DualMatrix, dinverse
from .errors import NotInvertibleError
from .matrix import RealMatrix, complement, inverse, pinv, rank

LOW, HIGH = -3, 3


def int_matrix(rng: random.Random, m: int, n: int, lo: int = LOW, hi: int = HIGH) -> RealMatrix:
    return RealMatrix._wrap(tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(m)))


def dual_int_matrix(rng: random.Random, m: int, n: int) -> DualMatrix:
    return DualMatrix(int_matrix(rng, m, n), int_matrix(rng, m, n))


def symmetric_int_matrix(rng: random.Random, n: int) -> RealMatrix:
    x = int_matrix(rng, n, n)
    return x + x.T


def skew_int_matrix(rng: random.Random, n: int) -> RealMatrix:
    x = int_matrix(rng, n, n)
    return x - x.T


def rank_factors(rng: random.Random, m: int, n: int, r: int) -> tuple[RealMatrix, RealMatrix]:
    """Integer ``F`` (m x r) and ``G`` (r x n), both of rank ``r >= 1``."""
    if not 1 <= r <= min(m, n):
        raise ValueError(f"rank {r} impossible for {m}x{n}")
    while True:
        f, g = int_matrix(rng, m, r), int_matrix(rng, r, n)
        if rank(f) == r and rank(g) == r:
            return f, g


def rank_matrix(rng: random.Random, m: int, n: int, r: int) -> RealMatrix:
    if r == 0:
        return RealMatrix.zeros(m, n)
    f, g = rank_factors(rng, m, n, r)
    return f @ g


def invertible_matrix(rng: random.Random, n: int) -> RealMatrix:
    while True:
        x = int_matrix(rng, n, n)
        if rank(x) == n:
            return x


def dual_invertible(rng: random.Random, n: int) -> DualMatrix:
    return DualMatrix(invertible_matrix(rng, n), int_matrix(rng, n, n))


def dual_matrix(
    rng: random.Random, m: int, n: int, r: int, consistent: Optional[bool] = None
) -> DualMatrix:
    """Random ``A0 + eps*A1`` with ``rank(A0) == r``.

    ``consistent=True`` builds ``A1 = F X + Y G`` from the factors of ``A0``,
    so the DMPGI exists; ``False`` redraws ``A1`` until it does not (only
    possible when ``r < min(m, n)``); ``None`` draws ``A1`` freely.
    """
    if r == 0:
        a0 = RealMatrix.zeros(m, n)
        if consistent:
            return DualMatrix(a0)
        a1 = int_matrix(rng, m, n)
        while consistent is False and a1.is_zero():
            a1 = int_matrix(rng, m, n)
        return DualMatrix(a0, a1)
    f, g = rank_factors(rng, m, n, r)
    a0 = f @ g
    if consistent:
        return DualMatrix(a0, f @ int_matrix(rng, r, n) + int_matrix(rng, m, r) @ g)
    if consistent is None:
        return DualMatrix(a0, int_matrix(rng, m, n))
    if r >= min(m, n):
        raise ValueError("a full-rank real part always admits a DMPGI")
    a0p = pinv(a0)
    left, right = complement(a0 @ a0p), complement(a0p @ a0)
    while True:
        a1 = int_matrix(rng, m, n)
        if not (left @ a1 @ right).is_zero():
            return DualMatrix(a0, a1)


def real_projector(rng: random.Random, n: int, r: int) -> RealMatrix:
    """Oblique projector ``F (G F)^{-1} G`` of rank ``r``."""
    if r == 0:
        return RealMatrix.zeros(n, n)
    while True:
        f, g = rank_factors(rng, n, n, r)
        try:
            return f @ inverse(g @ f) @ g
        except NotInvertibleError:
            continue


def dual_idempotent(rng: random.Random, n: int, r: int) -> DualMatrix:
    """``X (P0 + eps*0) X^{-1}`` for a random rank-``r`` projector ``P0``."""
    x = dual_invertible(rng, n)
    return x @ DualMatrix(real_projector(rng, n, r)) @ dinverse(x)


def orthogonal_matrix(rng: random.Random, n: int) -> RealMatrix:
    """Rational orthogonal matrix from the Cayley transform of a skew matrix."""
    s = skew_int_matrix(rng, n)
    eye = RealMatrix.identity(n)
    return (eye - s) @ inverse(eye + s)


def dual_orthogonal(rng: random.Random, n: int) -> DualMatrix:
    """``Q + eps*Q K`` with ``K`` skew, so ``U^T U == I``."""
    q = orthogonal_matrix(rng, n)
    return DualMatrix(q, q @ skew_int_matrix(rng, n))


def _embed(block: DualMatrix, n: int) -> DualMatrix:
    r = block.rows

    def pad(m: RealMatrix) -> RealMatrix:
        rows = [list(row) + [0] * (n - r) for row in m]
        rows += [[0] * n for _ in range(n - r)]
        return RealMatrix(rows)

    return DualMatrix(pad(block.real), pad(block.dual))


def dual_ep(rng: random.Random, n: int, r: int) -> DualMatrix:
    """``U diag(T, 0) U^T`` with ``U`` dual orthogonal and ``T0`` invertible."""
    u = dual_orthogonal(rng, n)
    core = _embed(dual_invertible(rng, r), n)
    return u @ core @ u.T


def dual_symmetric(rng: random.Random, n: int, r: int) -> DualMatrix:
    """Symmetric dual matrix with a DMPGI (hence dual EP)."""
    f, _ = rank_factors(rng, n, n, r)
    d = RealMatrix([[rng.choice((-2, -1, 1, 2)) if i == j else 0 for j in range(r)] for i in range(r)])
    x = int_matrix(rng, r, n)
    return DualMatrix(f @ d @ f.T, f @ x + x.T @ f.T)


def dual_real_ep_only(rng: random.Random, n: int, r: int) -> DualMatrix:
    """Real part EP, dual part with random off-diagonal blocks."""
    q = orthogonal_matrix(rng, n)
    t = invertible_matrix(rng, r)
    a0 = q @ _embed(DualMatrix(t), n).real @ q.T
    blocks = [
        [rng.randint(LOW, HIGH) if (i < r or j < r) else 0 for j in range(n)]
        for i in range(n)
    ]
    return DualMatrix(a0, q @ RealMatrix(blocks) @ q.T)
