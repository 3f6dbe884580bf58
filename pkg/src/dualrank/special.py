"""Dual idempotent and dual EP matrices."""

from __future__ import annotations

from .decomposition import DualRankFactors, _real_factors
from .dmpgi import dmpgi_direct, pinv_col_full, pinv_row_full
from .dual import DualMatrix
from .errors import DimensionError, FormulaDiscrepancyError, PreconditionError
from .matrix import RealMatrix, complement, inverse, pinv


def _require_square(a: DualMatrix) -> None:
    if a.rows != a.cols:
        raise DimensionError(f"expected a square dual matrix, got {a.shape}")


def is_dual_idempotent(a: DualMatrix) -> bool:
    _require_square(a)
    return a @ a == a


def idempotent_characterization(a: DualMatrix) -> bool:
    """``A0^2 == A0`` and ``A1 == A0 A1 + A1 A0``."""
    _require_square(a)
    a0, a1 = a.real, a.dual
    return a0 @ a0 == a0 and a1 == a0 @ a1 + a1 @ a0


def idempotent_decompose(a: DualMatrix) -> DualRankFactors:
    """``(A2 + eps A1 A2)(A4 + eps A4 A1)`` on the canonical real factors."""
    if not is_dual_idempotent(a):
        raise PreconditionError("matrix is not dual idempotent")
    fg = _real_factors(a)
    return DualRankFactors(
        DualMatrix(fg.F, a.dual @ fg.F),
        DualMatrix(fg.G, fg.G @ a.dual),
    )


def idempotent_dmpgi(a: DualMatrix) -> DualMatrix:
    """Closed-form DMPGI of a dual idempotent, checked against the direct form."""
    if not is_dual_idempotent(a):
        raise PreconditionError("matrix is not dual idempotent")
    a0, a1 = a.real, a.dual
    a0p = pinv(a0)
    a1t = a1.T
    s = a1 + a1t
    closed = DualMatrix(
        a0p,
        a0p @ a1t + a1t @ a0p - a0p @ s @ a0 @ a0p - a0p @ a0 @ s @ a0p,
    )
    reference = dmpgi_direct(a)
    if closed != reference:
        raise FormulaDiscrepancyError(
            "idempotent DMPGI formula disagrees with the direct DMPGI:\n"
            f"closed form {closed!r}\ndirect {reference!r}"
        )
    return closed


def factor_commute_is_identity(factors: DualRankFactors) -> bool:
    """``right @ left == I_r``."""
    return factors.right @ factors.left == DualMatrix.identity(factors.r)


def is_dual_ep(a: DualMatrix) -> bool:
    """``A A^+ == A^+ A`` (raises :class:`DMPGIError` when ``A^+`` is absent)."""
    _require_square(a)
    ap = dmpgi_direct(a)
    return a @ ap == ap @ a


def ep_via_factors(factors: DualRankFactors) -> bool:
    """``A1 A1^+ == A2^+ A2`` on dual factors."""
    if factors.left.rows != factors.right.cols:
        raise DimensionError("factors do not multiply to a square matrix")
    factors.check()
    left, right = factors.left, factors.right
    return left @ pinv_col_full(left) == pinv_row_full(right) @ right


def ep_via_parts(a: DualMatrix) -> bool:
    """Real part EP, plus the transpose relation on the dual part."""
    _require_square(a)
    dmpgi_direct(a)  # existence precondition
    a0, a1 = a.real, a.dual
    a0p = pinv(a0)
    if a0 @ a0p != a0p @ a0:
        return False
    kernel = complement(a0p @ a0)
    return kernel @ a1 @ a0p == (a0p @ a1 @ kernel).T


def _row_projector(a4: RealMatrix) -> RealMatrix:
    return a4.T @ inverse(a4 @ a4.T) @ a4


def ep_via_decomposition(factors: DualRankFactors) -> bool:
    """Projector equality on ``A2``, ``A4`` and the transpose relation on ``A3``, ``A5``."""
    if factors.left.rows != factors.right.cols:
        raise DimensionError("factors do not multiply to a square matrix")
    factors.check()
    a2, a3 = factors.left.real, factors.left.dual
    a4, a5 = factors.right.real, factors.right.dual
    g2 = inverse(a2.T @ a2)
    col_proj = a2 @ g2 @ a2.T
    row_proj = _row_projector(a4)
    if col_proj != row_proj:
        return False
    a2p = g2 @ a2.T
    a4p = a4.T @ inverse(a4 @ a4.T)
    kernel = complement(row_proj)
    return kernel @ a3 @ a2p == (a4p @ a5 @ kernel).T
