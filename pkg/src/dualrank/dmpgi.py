"""Dual Moore-Penrose inverse: existence and three independent formulas.

``dmpgi_direct`` works on the parts ``A0``, ``A1`` only. ``dmpgi_factor``
and ``dmpgi_explicit`` work from a dual r-rank decomposition; the first
multiplies the factor pseudoinverses as dual matrices, the second
expands everything into real-matrix products.
"""

from __future__ import annotations

from typing import Optional

from .decomposition import DualRankFactors, decompose
from .dual import DualMatrix, dinverse
from .errors import DMPGIError, FormulaDiscrepancyError, NotInvertibleError, RankError
from .matrix import RealMatrix, Witness, complement, inverse, null_test, pinv


def sym_product(x: RealMatrix, y: RealMatrix) -> RealMatrix:
    """``X^T Y + Y^T X``."""
    return x.T @ y + y.T @ x


def dmpgi_exists(a: DualMatrix) -> Witness:
    """``(I - A0 A0^+) A1 (I - A0^+ A0) == 0``."""
    a0p = pinv(a.real)
    return null_test(complement(a.real @ a0p) @ a.dual @ complement(a0p @ a.real))


def dmpgi_candidate(a: DualMatrix) -> DualMatrix:
    """The direct closed form evaluated without checking existence.

    When the DMPGI does not exist the result fails some dual Penrose
    equation, which makes it usable as an existence test in its own right.
    """
    a0, a1 = a.real, a.dual
    a0p = pinv(a0)
    a1t = a1.T
    r = (
        a0p @ a1 @ a0p
        - pinv(a0.T @ a0) @ a1t @ complement(a0 @ a0p)
        - complement(a0p @ a0) @ a1t @ pinv(a0 @ a0.T)
    )
    return DualMatrix(a0p, -r)


def dmpgi_direct(a: DualMatrix) -> DualMatrix:
    """DMPGI from the real and dual parts, no decomposition involved."""
    witness = dmpgi_exists(a)
    if not witness:
        raise DMPGIError("the dual Moore-Penrose inverse does not exist", witness.residual)
    return dmpgi_candidate(a)


def _gram_inverse(m: RealMatrix, what: str) -> RealMatrix:
    try:
        return inverse(m)
    except NotInvertibleError:
        raise RankError(f"real part is not {what} full rank") from None


def pinv_col_full(a: DualMatrix) -> DualMatrix:
    """Pseudoinverse of a dual matrix whose real part has full column rank.

    Computed as ``(A^T A)^{-1} A^T`` in dual arithmetic and again from the
    expanded real-part expression; the two must agree.
    """
    a2, a3 = a.real, a.dual
    g = _gram_inverse(a2.T @ a2, "column")
    compact = dinverse(a.T @ a) @ a.T
    expanded = DualMatrix(
        g @ a2.T,
        g @ a3.T - g @ sym_product(a2, a3) @ g @ a2.T,
    )
    if compact != expanded:
        raise FormulaDiscrepancyError("column-full-rank pseudoinverse forms disagree")
    return compact


def pinv_row_full(a: DualMatrix) -> DualMatrix:
    """Pseudoinverse of a dual matrix whose real part has full row rank."""
    a4, a5 = a.real, a.dual
    g = _gram_inverse(a4 @ a4.T, "row")
    compact = a.T @ dinverse(a @ a.T)
    expanded = DualMatrix(
        a4.T @ g,
        a5.T @ g - a4.T @ g @ sym_product(a4.T, a5.T) @ g,
    )
    if compact != expanded:
        raise FormulaDiscrepancyError("row-full-rank pseudoinverse forms disagree")
    return compact


def dmpgi_factor(factors: DualRankFactors) -> DualMatrix:
    """Product of the factor pseudoinverses, right factor first."""
    factors.check()
    return pinv_row_full(factors.right) @ pinv_col_full(factors.left)


def dmpgi_explicit(factors: DualRankFactors) -> DualMatrix:
    """Closed form in the four real factor blocks ``A2, A3, A4, A5``."""
    factors.check()
    a2, a3 = factors.left.real, factors.left.dual
    a4, a5 = factors.right.real, factors.right.dual
    g2 = inverse(a2.T @ a2)
    g4 = inverse(a4 @ a4.T)
    a2p = g2 @ a2.T
    a4p = a4.T @ g4
    dual = (
        a4p @ g2 @ (a3.T - sym_product(a2, a3) @ a2p)
        + (a5.T - a4p @ sym_product(a4.T, a5.T)) @ g4 @ a2p
    )
    return DualMatrix(a4p @ a2p, dual)


METHODS = ("direct", "factor", "explicit")


def dmpgi(a: DualMatrix, method: str = "direct", p: Optional[RealMatrix] = None) -> DualMatrix:
    """Convenience entry point; factor-based methods decompose with ``p``."""
    if method == "direct":
        return dmpgi_direct(a)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    witness = dmpgi_exists(a)
    if not witness:
        raise DMPGIError("the dual Moore-Penrose inverse does not exist", witness.residual)
    factors = decompose(a, p)
    return dmpgi_factor(factors) if method == "factor" else dmpgi_explicit(factors)
