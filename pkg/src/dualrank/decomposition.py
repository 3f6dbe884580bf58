"""Dual r-rank decomposition ``A = (A2 + eps*A3)(A4 + eps*A5)``.

The real factors ``A2``, ``A4`` are always the canonical RREF ones, so
the only freedom left is the r x r matrix ``P`` in

    A3 = (I - A2 A2^+) A1 A4^+ - A2 P
    A5 = A2^+ A1 + P A4
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .dual import DualMatrix
from .errors import DecompositionError, DimensionError, RankError
from .matrix import (
    FullRankFactors,
    RealMatrix,
    Witness,
    complement,
    full_rank_decompose,
    null_test,
    pinv,
    rank,
)
from .sylvester import sylvester_solve


@dataclass(frozen=True)
class DualRankFactors:
    """``left`` is m x r (real part column full rank), ``right`` is r x n."""

    left: DualMatrix
    right: DualMatrix

    def __post_init__(self):
        if self.left.cols != self.right.rows:
            raise DimensionError(
                f"inner dimensions differ: {self.left.shape} and {self.right.shape}"
            )

    @property
    def r(self) -> int:
        return self.left.cols

    def product(self) -> DualMatrix:
        return self.left @ self.right

    def is_valid(self) -> bool:
        """Both real parts have rank ``r``."""
        r = self.r
        return rank(self.left.real) == r and rank(self.right.real) == r

    def check(self) -> None:
        if rank(self.left.real) != self.r:
            raise RankError("left factor's real part is not column full rank")
        if rank(self.right.real) != self.r:
            raise RankError("right factor's real part is not row full rank")


def _real_factors(a: DualMatrix) -> FullRankFactors:
    try:
        return full_rank_decompose(a.real)
    except RankError:
        raise RankError("dual r-rank decomposition needs a nonzero real part") from None


def decomposition_exists(a: DualMatrix) -> Witness:
    """Existence test on the canonical factors of the real part."""
    fg = _real_factors(a)
    f, g = fg.F, fg.G
    return null_test(complement(f @ pinv(f)) @ a.dual @ complement(pinv(g) @ g))


def decompose(a: DualMatrix, p: Optional[RealMatrix] = None) -> DualRankFactors:
    """The member of the decomposition family selected by ``p`` (default 0)."""
    fg = _real_factors(a)
    r = fg.r
    if p is None:
        p = RealMatrix.zeros(r, r)
    elif p.shape != (r, r):
        raise DimensionError(f"P must be {r}x{r}, got {p.shape}")
    witness = decomposition_exists(a)
    if not witness:
        raise DecompositionError(
            "no dual r-rank decomposition exists", witness.residual
        )
    # A2 X + Y A4 = A1 with U = P gives X = A5, Y = A3.
    sol = sylvester_solve(fg.F, fg.G, a.dual, u=p)
    return DualRankFactors(DualMatrix(fg.F, sol.Y), DualMatrix(fg.G, sol.X))


def verify_decomposition(a: DualMatrix, factors: DualRankFactors) -> bool:
    """Rank conditions hold and the factors multiply back to ``a``."""
    if factors.left.rows != a.rows or factors.right.cols != a.cols:
        return False
    if factors.r != rank(a.real) or not factors.is_valid():
        return False
    return factors.product() == a
