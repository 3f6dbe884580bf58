"""Dual matrices ``A0 + eps*A1`` and the four dual Penrose equations."""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import DimensionError, NotInvertibleError
from .matrix import RealMatrix, inverse
from .scalar import RationalLike, format_rational


class DualMatrix:
    """Pair of equal-shape real matrices combined with ``eps**2 = 0``.

    >>> A = DualMatrix([[0, 1], [0, 0]], [[1, 0], [0, 1]])
    >>> (A @ A).real == RealMatrix.zeros(2, 2)
    True
    """

    __slots__ = ("real", "dual")

    def __init__(
        self,
        real: RealMatrix | Iterable[Iterable[RationalLike]],
        dual: Optional[RealMatrix | Iterable[Iterable[RationalLike]]] = None,
    ):
        if not isinstance(real, RealMatrix):
            real = RealMatrix(real)
        if dual is None:
            dual = RealMatrix.zeros(*real.shape)
        elif not isinstance(dual, RealMatrix):
            dual = RealMatrix(dual)
        if real.shape != dual.shape:
            raise DimensionError(
                f"real part {real.shape} and dual part {dual.shape} differ in shape"
            )
        self.real = real
        self.dual = dual

    @classmethod
    def identity(cls, n: int) -> DualMatrix:
        return cls(RealMatrix.identity(n))

    @classmethod
    def zeros(cls, m: int, n: int) -> DualMatrix:
        return cls(RealMatrix.zeros(m, n))

    @property
    def shape(self) -> tuple[int, int]:
        return self.real.shape

    @property
    def rows(self) -> int:
        return self.real.rows

    @property
    def cols(self) -> int:
        return self.real.cols

    @property
    def T(self) -> DualMatrix:
        return DualMatrix(self.real.T, self.dual.T)

    def is_real(self) -> bool:
        return self.dual.is_zero()

    def is_zero(self) -> bool:
        return self.real.is_zero() and self.dual.is_zero()

    def __add__(self, other: DualMatrix) -> DualMatrix:
        return DualMatrix(self.real + other.real, self.dual + other.dual)

    def __sub__(self, other: DualMatrix) -> DualMatrix:
        return DualMatrix(self.real - other.real, self.dual - other.dual)

    def __neg__(self) -> DualMatrix:
        return DualMatrix(-self.real, -self.dual)

    def __matmul__(self, other: DualMatrix) -> DualMatrix:
        if not isinstance(other, DualMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        return DualMatrix(
            self.real @ other.real,
            self.real @ other.dual + self.dual @ other.real,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualMatrix):
            return NotImplemented
        return self.real == other.real and self.dual == other.dual

    def __hash__(self) -> int:
        return hash((self.real, self.dual))

    def __repr__(self) -> str:
        re = [[format_rational(x) for x in r] for r in self.real]
        du = [[format_rational(x) for x in r] for r in self.dual]
        return f"DualMatrix({re!r}, {du!r})"

    def __str__(self) -> str:
        return f"{self.real}\n+ eps *\n{self.dual}"


def as_dual(x: DualMatrix | RealMatrix) -> DualMatrix:
    return x if isinstance(x, DualMatrix) else DualMatrix(x)


def dmul(a: DualMatrix, b: DualMatrix) -> DualMatrix:
    return a @ b


def dtranspose(a: DualMatrix) -> DualMatrix:
    return a.T


def dinverse(a: DualMatrix) -> DualMatrix:
    """``A0^{-1} - eps * A0^{-1} A1 A0^{-1}`` for a square dual matrix."""
    if a.rows != a.cols:
        raise DimensionError(f"cannot invert a {a.shape} dual matrix")
    try:
        inv0 = inverse(a.real)
    except NotInvertibleError:
        raise NotInvertibleError("real part of the dual matrix is singular") from None
    return DualMatrix(inv0, -(inv0 @ a.dual @ inv0))


class PenroseProfile(frozenset):
    """The subset of {1, 2, 3, 4} of dual Penrose equations a candidate meets."""

    def __repr__(self) -> str:
        return "PenroseProfile({" + ", ".join(map(str, sorted(self))) + "})"

    def is_mpgi(self) -> bool:
        return self == {1, 2, 3, 4}


def _check_candidate(a: DualMatrix, x: DualMatrix) -> None:
    if x.shape != (a.cols, a.rows):
        raise DimensionError(
            f"candidate must be {a.cols}x{a.rows} for a {a.rows}x{a.cols} matrix"
        )


def satisfies(a: DualMatrix, x: DualMatrix, k: int) -> bool:
    """Whether ``x`` satisfies dual Penrose equation ``k`` for ``a``."""
    _check_candidate(a, x)
    if k == 1:
        return a @ x @ a == a
    if k == 2:
        return x @ a @ x == x
    if k == 3:
        ax = a @ x
        return ax.T == ax
    if k == 4:
        xa = x @ a
        return xa.T == xa
    raise ValueError(f"no Penrose equation {k}")


def penrose_profile(a: DualMatrix, x: DualMatrix) -> PenroseProfile:
    """Evaluate the four dual Penrose equations for candidate ``x``.

    Equation 2 is ``X A X = X``.
    """
    _check_candidate(a, x)
    ax = a @ x
    xa = x @ a
    found = set()
    if ax @ a == a:
        found.add(1)
    if xa @ x == x:
        found.add(2)
    if ax.T == ax:
        found.add(3)
    if xa.T == xa:
        found.add(4)
    return PenroseProfile(found)
