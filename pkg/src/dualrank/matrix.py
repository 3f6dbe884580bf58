"""Dense real matrices over the rationals.

Everything here is exact. A matrix keeps integer numerators over a
shared denominator, so products and sums run on plain ``int`` and only
one gcd pass per result is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from operator import mul
from typing import Iterable, Sequence

from .errors import DimensionError, NotInvertibleError, RankError
from .scalar import RationalLike, as_rational, format_rational

_ZERO = Fraction(0)
_ONE = Fraction(1)

IntRows = tuple[tuple[int, ...], ...]


def _normalize(num: IntRows, den: int) -> tuple[IntRows, int]:
    g = den
    for row in num:
        for x in row:
            if x:
                g = gcd(g, x)
                if g == 1:
                    return num, den
    if g == 1:
        return num, den
    return tuple(tuple(x // g for x in row) for row in num), den // g


class RealMatrix:
    """Immutable ``m x n`` matrix of rationals.

    Stored as integer numerators over one positive common denominator,
    reduced so the representation is canonical; entries come back as
    :class:`~fractions.Fraction`.

    >>> A = RealMatrix([[1, 2], [3, 4]])
    >>> A.T
    RealMatrix([['1', '3'], ['2', '4']])
    """

    __slots__ = ("_num", "_den", "_shape")

    def __init__(self, entries: Iterable[Iterable[RationalLike]]):
        rows = tuple(tuple(as_rational(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise DimensionError("matrices need at least one row and one column")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DimensionError("ragged rows")
        self._set(*_from_fractions(rows))

    def _set(self, num: IntRows, den: int) -> None:
        self._num = num
        self._den = den
        self._shape = (len(num), len(num[0]))

    @classmethod
    def _wrap(cls, num: IntRows, den: int = 1) -> RealMatrix:
        obj = cls.__new__(cls)
        obj._set(*_normalize(num, den))
        return obj

    @classmethod
    def _from_rows(cls, rows: Sequence[Sequence[Fraction]]) -> RealMatrix:
        obj = cls.__new__(cls)
        obj._set(*_from_fractions(rows))
        return obj

    @classmethod
    def zeros(cls, m: int, n: int) -> RealMatrix:
        if m < 1 or n < 1:
            raise DimensionError(f"invalid shape {m}x{n}")
        return cls._wrap(((0,) * n,) * m)

    @classmethod
    def identity(cls, n: int) -> RealMatrix:
        if n < 1:
            raise DimensionError(f"invalid size {n}")
        return cls._wrap(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    @property
    def rows(self) -> int:
        return self._shape[0]

    @property
    def cols(self) -> int:
        return self._shape[1]

    @property
    def T(self) -> RealMatrix:
        obj = RealMatrix.__new__(RealMatrix)
        obj._set(tuple(zip(*self._num)), self._den)
        return obj

    def row(self, i: int) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(x, d) for x in self._num[i])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return Fraction(self._num[i][j], self._den)

    def __iter__(self):
        return (self.row(i) for i in range(self.rows))

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._num)

    def is_square(self) -> bool:
        return self._shape[0] == self._shape[1]

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def select_columns(self, idx: Sequence[int]) -> RealMatrix:
        return RealMatrix._wrap(tuple(tuple(r[j] for j in idx) for r in self._num), self._den)

    def select_rows(self, idx: Sequence[int]) -> RealMatrix:
        return RealMatrix._wrap(tuple(self._num[i] for i in idx), self._den)

    def _check_same_shape(self, other: RealMatrix, op: str) -> None:
        if not isinstance(other, RealMatrix):
            raise TypeError(f"cannot {op} RealMatrix and {type(other).__name__}")
        if self._shape != other._shape:
            raise DimensionError(f"cannot {op} {self._shape} and {other._shape}")

    def _combine(self, other: RealMatrix, sign: int) -> RealMatrix:
        d = lcm(self._den, other._den)
        fa, fb = d // self._den, sign * (d // other._den)
        return RealMatrix._wrap(
            tuple(
                tuple(fa * x + fb * y for x, y in zip(ra, rb))
                for ra, rb in zip(self._num, other._num)
            ),
            d,
        )

    def __add__(self, other: RealMatrix) -> RealMatrix:
        self._check_same_shape(other, "add")
        return self._combine(other, 1)

    def __sub__(self, other: RealMatrix) -> RealMatrix:
        self._check_same_shape(other, "subtract")
        return self._combine(other, -1)

    def __neg__(self) -> RealMatrix:
        obj = RealMatrix.__new__(RealMatrix)
        obj._set(tuple(tuple(-x for x in r) for r in self._num), self._den)
        return obj

    def scale(self, c: RationalLike) -> RealMatrix:
        c = as_rational(c)
        return RealMatrix._wrap(
            tuple(tuple(c.numerator * x for x in r) for r in self._num),
            c.denominator * self._den,
        )

    def __matmul__(self, other: RealMatrix) -> RealMatrix:
        if not isinstance(other, RealMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self._shape} by {other._shape}")
        cols = tuple(zip(*other._num))
        return RealMatrix._wrap(
            tuple(tuple(sum(map(mul, ra, cb)) for cb in cols) for ra in self._num),
            self._den * other._den,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealMatrix):
            return NotImplemented
        return self._den == other._den and self._num == other._num

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def _cells(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self]

    def __repr__(self) -> str:
        return f"RealMatrix({self._cells()!r})"

    def __str__(self) -> str:
        cells = self._cells()
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


def _from_fractions(rows: Sequence[Sequence[Fraction]]) -> tuple[IntRows, int]:
    d = lcm(*(x.denominator for r in rows for x in r))
    num = tuple(tuple(x.numerator * (d // x.denominator) for x in r) for r in rows)
    return num, d


def identity(n: int) -> RealMatrix:
    return RealMatrix.identity(n)


def zeros(m: int, n: int) -> RealMatrix:
    return RealMatrix.zeros(m, n)


def mat_mul(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    return a @ b


def mat_add(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    return a + b


def mat_sub(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    return a - b


def transpose(a: RealMatrix) -> RealMatrix:
    return a.T


def rref(a: RealMatrix) -> tuple[RealMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot columns."""
    m, n = a.shape
    rows = [list(r) for r in a]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            f = rows[i][c]
            if i != r and f != 0:
                pr = rows[r]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return RealMatrix._from_rows(rows), tuple(pivots)


def rank(a: RealMatrix) -> int:
    return len(rref(a)[1])


@dataclass(frozen=True)
class FullRankFactors:
    """``A = F @ G`` with ``F`` m x r column full rank, ``G`` r x n row full rank."""

    F: RealMatrix
    G: RealMatrix

    @property
    def r(self) -> int:
        return self.F.cols

    def product(self) -> RealMatrix:
        return self.F @ self.G


def full_rank_decompose(a: RealMatrix) -> FullRankFactors:
    """Pivot columns of ``a`` times the nonzero rows of ``rref(a)``."""
    R, pivots = rref(a)
    if not pivots:
        raise RankError("the zero matrix has no full-rank decomposition")
    return FullRankFactors(a.select_columns(pivots), R.select_rows(range(len(pivots))))


def inverse(a: RealMatrix) -> RealMatrix:
    """Gauss-Jordan inverse; raises :class:`NotInvertibleError` if singular."""
    if not a.is_square():
        raise DimensionError(f"cannot invert a {a.shape} matrix")
    n = a.rows
    aug = [list(r) + [_ONE if i == j else _ZERO for j in range(n)] for i, r in enumerate(a)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise NotInvertibleError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        pr = aug[c]
        for i in range(n):
            f = aug[i][c]
            if i != c and f != 0:
                aug[i] = [x - f * y for x, y in zip(aug[i], pr)]
    return RealMatrix._from_rows([r[n:] for r in aug])


def left_pinv(f: RealMatrix) -> RealMatrix:
    """``(F^T F)^{-1} F^T`` for column-full-rank ``F``."""
    try:
        return inverse(f.T @ f) @ f.T
    except NotInvertibleError:
        raise RankError("matrix does not have full column rank") from None


def right_pinv(g: RealMatrix) -> RealMatrix:
    """``G^T (G G^T)^{-1}`` for row-full-rank ``G``."""
    try:
        return g.T @ inverse(g @ g.T)
    except NotInvertibleError:
        raise RankError("matrix does not have full row rank") from None


def pinv(a: RealMatrix) -> RealMatrix:
    """Moore-Penrose inverse through the canonical full-rank factors.

    >>> pinv(RealMatrix([[1, 0, "1/3"], [0, 1, "1/3"]]))
    RealMatrix([['10/11', '-1/11'], ['-1/11', '10/11'], ['3/11', '3/11']])
    """
    if a.is_zero():
        return RealMatrix.zeros(a.cols, a.rows)
    fg = full_rank_decompose(a)
    return right_pinv(fg.G) @ left_pinv(fg.F)


def range_projector(a: RealMatrix) -> RealMatrix:
    """``A A^+``."""
    return a @ pinv(a)


def complement(p: RealMatrix) -> RealMatrix:
    """``I - P``."""
    return RealMatrix.identity(p.rows) - p


def sample_one_inverse(a: RealMatrix, v: RealMatrix, w: RealMatrix) -> RealMatrix:
    """A {1}-inverse ``A^+ + (I - A^+A)V + W(I - AA^+)`` of ``a``."""
    m, n = a.shape
    if v.shape != (n, m) or w.shape != (n, m):
        raise DimensionError(f"V and W must be {n}x{m}")
    ap = pinv(a)
    return ap + complement(ap @ a) @ v + w @ complement(a @ ap)


@dataclass(frozen=True)
class Witness:
    """Outcome of a ``residual == 0`` existence test; truthy iff it holds."""

    holds: bool
    residual: RealMatrix

    def __bool__(self) -> bool:
        return self.holds


def null_test(residual: RealMatrix) -> Witness:
    return Witness(residual.is_zero(), residual)
