"""Dense exact matrices over Q(zeta_n).

Elimination is plain Gaussian elimination with field division and the first
nonzero entry of a column as pivot, so every result is reproducible.
"""
from __future__ import annotations

from numbers import Rational

from .cyclofield import Cyclotomic, dot
from .errors import ConductorMismatch, DimensionMismatch, NotSquare, Singular

__all__ = [
    "CycMatrix",
    "matmul",
    "transpose",
    "conj_entries",
    "det",
    "inverse",
    "kernel",
    "solve",
]


def _entry(x, n: int) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        if x.conductor != n:
            raise ConductorMismatch(
                f"entry has conductor {x.conductor}, matrix has {n}"
            )
        return x
    if isinstance(x, (int, Rational)):
        return Cyclotomic.rational(x, n)
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


class CycMatrix:
    """Immutable r x c matrix with entries in one cyclotomic field."""

    __slots__ = ("_n", "_rows", "_hash")

    def __init__(self, conductor: int, rows):
        rows = [list(r) for r in rows]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("ragged rows")
        self._n = conductor
        self._rows = tuple(tuple(_entry(x, conductor) for x in r) for r in rows)
        self._hash = None

    @classmethod
    def _wrap(cls, n, rows) -> CycMatrix:
        obj = cls.__new__(cls)
        obj._n = n
        obj._rows = tuple(tuple(r) for r in rows)
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, conductor: int, d: int) -> CycMatrix:
        one = Cyclotomic.rational(1, conductor)
        zero = Cyclotomic.rational(0, conductor)
        return cls._wrap(
            conductor, [[one if i == j else zero for j in range(d)] for i in range(d)]
        )

    @classmethod
    def zeros(cls, conductor: int, rows: int, cols: int | None = None) -> CycMatrix:
        zero = Cyclotomic.rational(0, conductor)
        cols = rows if cols is None else cols
        return cls._wrap(conductor, [[zero] * cols for _ in range(rows)])

    @classmethod
    def diag(cls, conductor: int, values) -> CycMatrix:
        values = [_entry(v, conductor) for v in values]
        zero = Cyclotomic.rational(0, conductor)
        d = len(values)
        return cls._wrap(
            conductor,
            [[values[i] if i == j else zero for j in range(d)] for i in range(d)],
        )

    @classmethod
    def from_columns(cls, conductor: int, columns) -> CycMatrix:
        columns = [list(c) for c in columns]
        return cls(conductor, [list(r) for r in zip(*columns)])

    # shape and access ------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij) -> Cyclotomic:
        i, j = ij
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Cyclotomic, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Cyclotomic, ...]:
        return tuple(r[j] for r in self._rows)

    def tolist(self) -> list[list[Cyclotomic]]:
        return [list(r) for r in self._rows]

    def entries(self):
        for r in self._rows:
            yield from r

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._rows))
        return self._hash

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self._rows)
        return f"CycMatrix({self._n}, [{body}])"

    # arithmetic ---------------------------------------------------------

    def _check(self, other: CycMatrix):
        if other._n != self._n:
            raise ConductorMismatch(f"conductors {self._n} and {other._n} differ")

    def __add__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return CycMatrix._wrap(
            self._n,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
        )

    def __sub__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return CycMatrix._wrap(self._n, [[-a for a in r] for r in self._rows])

    def __mul__(self, scalar):
        if isinstance(scalar, CycMatrix):
            return NotImplemented
        if isinstance(scalar, Cyclotomic) and scalar.conductor != self._n:
            raise ConductorMismatch(
                f"scalar conductor {scalar.conductor}, matrix {self._n}"
            )
        return CycMatrix._wrap(self._n, [[a * scalar for a in r] for r in self._rows])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = _entry(scalar, self._n)
        return self * s.inv()

    def __matmul__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return matmul(self, other)

    @property
    def T(self) -> CycMatrix:
        return transpose(self)

    def conj_entries(self) -> CycMatrix:
        return conj_entries(self)

    def trace(self) -> Cyclotomic:
        if not self.is_square():
            raise NotSquare(f"trace of {self.shape} matrix")
        total = Cyclotomic.rational(0, self._n)
        for i in range(self.rows):
            total = total + self._rows[i][i]
        return total

    def det(self) -> Cyclotomic:
        return det(self)

    def inverse(self) -> CycMatrix:
        return inverse(self)

    def is_real(self) -> bool:
        return all(x.is_real() for x in self.entries())

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries())

    def scalar_value(self) -> Cyclotomic | None:
        """The c with self == c*I, or None when self is not scalar."""
        if not self.is_square() or not self._rows:
            return None
        c = self._rows[0][0]
        for i, r in enumerate(self._rows):
            for j, x in enumerate(r):
                if (i == j and x != c) or (i != j and not x.is_zero()):
                    return None
        return c

    def matvec(self, v) -> tuple[Cyclotomic, ...]:
        if len(v) != self.cols:
            raise DimensionMismatch(f"{self.shape} times vector of length {len(v)}")
        return tuple(dot(r, v, self._n) for r in self._rows)

    def lift(self, conductor: int) -> CycMatrix:
        return CycMatrix._wrap(
            conductor, [[x.lift(conductor) for x in r] for r in self._rows]
        )


def matmul(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    A._check(B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"{A.shape} @ {B.shape}")
    n = A._n
    Bcols = [B.column(j) for j in range(B.cols)]
    out = [[dot(r, col, n) for col in Bcols] for r in A._rows]
    return CycMatrix._wrap(n, out)


def transpose(A: CycMatrix) -> CycMatrix:
    return CycMatrix._wrap(A._n, [list(c) for c in zip(*A._rows)] if A._rows else [])


def conj_entries(A: CycMatrix) -> CycMatrix:
    return CycMatrix._wrap(A._n, [[x.conj() for x in r] for r in A._rows])


def _eliminate(rows, ncols, reduced: bool):
    """Row-reduce ``rows`` in place; returns (pivot columns, swap count)."""
    pivots = []
    swaps = 0
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            swaps += 1
        pinv = rows[r][c].inv()
        if reduced:
            rows[r] = [x * pinv for x in rows[r]]
            targets = [i for i in range(nrows) if i != r]
        else:
            targets = range(r + 1, nrows)
        for i in targets:
            f = rows[i][c]
            if f.is_zero():
                continue
            if not reduced:
                f = f * pinv
            src = rows[r]
            rows[i] = [
                x - f * y if not y.is_zero() else x for x, y in zip(rows[i], src)
            ]
        pivots.append(c)
        r += 1
    return pivots, swaps


def det(A: CycMatrix) -> Cyclotomic:
    """Determinant as the signed product of elimination pivots."""
    if not A.is_square():
        raise NotSquare(f"det of {A.shape} matrix")
    d = A.rows
    rows = [list(r) for r in A._rows]
    pivots, swaps = _eliminate(rows, d, reduced=False)
    if len(pivots) < d:
        return Cyclotomic.rational(0, A._n)
    result = Cyclotomic.rational(-1 if swaps % 2 else 1, A._n)
    for i in range(d):
        result = result * rows[i][i]
    return result


def inverse(A: CycMatrix) -> CycMatrix:
    if not A.is_square():
        raise NotSquare(f"inverse of {A.shape} matrix")
    d = A.rows
    n = A._n
    one = Cyclotomic.rational(1, n)
    zero = Cyclotomic.rational(0, n)
    rows = [
        list(r) + [one if i == j else zero for j in range(d)]
        for i, r in enumerate(A._rows)
    ]
    pivots, _ = _eliminate(rows, d, reduced=True)
    if len(pivots) < d:
        raise Singular("matrix is not invertible")
    return CycMatrix._wrap(n, [r[d:] for r in rows])


def kernel(A: CycMatrix) -> list[tuple[Cyclotomic, ...]]:
    """Basis of the right null space, one vector per free column."""
    n = A._n
    ncols = A.cols
    rows = [list(r) for r in A._rows]
    pivots, _ = _eliminate(rows, ncols, reduced=True)
    pivset = set(pivots)
    one = Cyclotomic.rational(1, n)
    zero = Cyclotomic.rational(0, n)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [zero] * ncols
        v[free] = one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        basis.append(tuple(v))
    return basis


def solve(A: CycMatrix, B: CycMatrix) -> CycMatrix:
    """The unique X with A @ X == B, for A of full column rank."""
    A._check(B)
    if A.rows != B.rows:
        raise DimensionMismatch(f"{A.shape} vs right-hand side {B.shape}")
    k = A.cols
    rows = [list(a) + list(b) for a, b in zip(A._rows, B._rows)]
    pivots, _ = _eliminate(rows, k, reduced=True)
    if len(pivots) < k:
        raise Singular("coefficient matrix does not have full column rank")
    for r in rows[k:]:
        if any(not x.is_zero() for x in r[k:]):
            raise Singular("inconsistent system")
    return CycMatrix._wrap(A._n, [r[k:] for r in rows[:k]])
