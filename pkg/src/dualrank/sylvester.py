"""The two-sided linear equation ``A X + Y B = C``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ConsistencyError, DimensionError
from .matrix import RealMatrix, Witness, complement, null_test, pinv


@dataclass(frozen=True)
class SylvesterSolution:
    X: RealMatrix
    Y: RealMatrix
    U: RealMatrix
    V: RealMatrix
    W: RealMatrix


def _check_shapes(a: RealMatrix, b: RealMatrix, c: RealMatrix) -> None:
    if c.shape != (a.rows, b.cols):
        raise DimensionError(
            f"C must be {a.rows}x{b.cols} for A {a.shape} and B {b.shape}, got {c.shape}"
        )


def sylvester_consistent(a: RealMatrix, b: RealMatrix, c: RealMatrix) -> Witness:
    """Solvability test: ``(I - A A^+) C (I - B^+ B) == 0``."""
    _check_shapes(a, b, c)
    return null_test(complement(a @ pinv(a)) @ c @ complement(pinv(b) @ b))


def sylvester_solve(
    a: RealMatrix,
    b: RealMatrix,
    c: RealMatrix,
    u: Optional[RealMatrix] = None,
    v: Optional[RealMatrix] = None,
    w: Optional[RealMatrix] = None,
) -> SylvesterSolution:
    """One member of the solution family, selected by ``u``, ``v``, ``w``.

    ``A`` is m x p and ``B`` is q x n; the free parameters are ``u`` (p x q),
    ``v`` (p x n) and ``w`` (m x q), each defaulting to zero.
    """
    _check_shapes(a, b, c)
    m, p = a.shape
    q, n = b.shape
    u = RealMatrix.zeros(p, q) if u is None else u
    v = RealMatrix.zeros(p, n) if v is None else v
    w = RealMatrix.zeros(m, q) if w is None else w
    for name, mat, want in (("U", u, (p, q)), ("V", v, (p, n)), ("W", w, (m, q))):
        if mat.shape != want:
            raise DimensionError(f"{name} must be {want[0]}x{want[1]}, got {mat.shape}")
    ap, bp = pinv(a), pinv(b)
    left_null = complement(a @ ap)
    residual = left_null @ c @ complement(bp @ b)
    if not residual.is_zero():
        raise ConsistencyError("A X + Y B = C is inconsistent", residual)
    x = ap @ c + u @ b + complement(ap @ a) @ v
    y = left_null @ c @ bp - a @ u + w @ complement(b @ bp)
    return SylvesterSolution(x, y, u, v, w)
