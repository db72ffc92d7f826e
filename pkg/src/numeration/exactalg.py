"""Exact matrices and vectors over N, Z and Q.

Scalars are plain Python ``int`` (N and Z) or ``fractions.Fraction`` (Q), so
arithmetic never overflows and rationals stay reduced. Every matrix and vector
carries its semiring tag; mixing tags is an error rather than a silent
promotion, use :func:`embed` to move N -> Z -> Q explicitly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class DimensionError(ValueError):
    pass


class SemiringError(ValueError):
    pass


class Semiring(enum.Enum):
    N = "N"
    Z = "Z"
    Q = "Q"

    @property
    def rank(self) -> int:
        return _RANK[self]

    def coerce(self, x) -> Scalar:
        """Convert ``x`` into a canonical scalar of this semiring or raise."""
        if isinstance(x, bool):
            x = int(x)
        if self is Semiring.Q:
            if isinstance(x, str):
                return Fraction(x.strip())
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise SemiringError(f"cannot read {x!r} as an exact rational")
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise SemiringError(f"{x} is not an integer")
            x = x.numerator
        if not isinstance(x, int):
            raise SemiringError(f"cannot read {x!r} as an exact integer")
        if self is Semiring.N and x < 0:
            raise SemiringError(f"{x} is negative, not in N")
        return x

    @classmethod
    def parse(cls, name: str) -> "Semiring":
        try:
            return cls(name.strip().upper())
        except ValueError:
            raise SemiringError(f"unknown semiring {name!r} (expected N, Z or Q)") from None


_RANK = {Semiring.N: 0, Semiring.Z: 1, Semiring.Q: 2}


def join(*semirings: Semiring) -> Semiring:
    """Smallest semiring containing all the given ones."""
    return max(semirings, key=lambda s: s.rank)


def format_scalar(x: Scalar) -> str:
    return str(x)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples
    semiring: Semiring = Semiring.N

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError(f"entries do not form a {self.rows}x{self.cols} grid")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], semiring: Semiring = Semiring.N) -> "Matrix":
        grid = tuple(tuple(semiring.coerce(x) for x in r) for r in rows)
        ncols = len(grid[0]) if grid else 0
        return cls(len(grid), ncols, grid, semiring)

    @classmethod
    def zero(cls, rows: int, cols: int | None = None, semiring: Semiring = Semiring.N) -> "Matrix":
        cols = rows if cols is None else cols
        z = semiring.coerce(0)
        return cls(rows, cols, tuple((z,) * cols for _ in range(rows)), semiring)

    @classmethod
    def identity(cls, n: int, semiring: Semiring = Semiring.N) -> "Matrix":
        one, z = semiring.coerce(1), semiring.coerce(0)
        return cls(n, n, tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)), semiring)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        _same_semiring(self.semiring, other.semiring)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.rows, self.cols,
                      tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)),
                      self.semiring)

    def __neg__(self) -> "Matrix":
        if self.semiring is Semiring.N:
            raise SemiringError("N has no additive inverses; embed into Z first")
        return Matrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries), self.semiring)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def map(self, f, semiring: Semiring | None = None) -> "Matrix":
        sr = semiring or self.semiring
        return Matrix(self.rows, self.cols, tuple(tuple(sr.coerce(f(x)) for x in r) for r in self.entries), sr)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def tolist(self) -> list[list[Scalar]]:
        return [list(r) for r in self.entries]

    def __repr__(self):
        return f"Matrix[{self.semiring.value}]({self.tolist()})"


@dataclass(frozen=True)
class Vector:
    """A row or column vector. Rows multiply matrices from the left."""
    orientation: str  # "row" | "column"
    entries: tuple
    semiring: Semiring = Semiring.N

    def __post_init__(self):
        if self.orientation not in ("row", "column"):
            raise ValueError(f"bad orientation {self.orientation!r}")

    @classmethod
    def row(cls, entries: Iterable, semiring: Semiring = Semiring.N) -> "Vector":
        return cls("row", tuple(semiring.coerce(x) for x in entries), semiring)

    @classmethod
    def column(cls, entries: Iterable, semiring: Semiring = Semiring.N) -> "Vector":
        return cls("column", tuple(semiring.coerce(x) for x in entries), semiring)

    @classmethod
    def zeros(cls, n: int, orientation: str = "row", semiring: Semiring = Semiring.N) -> "Vector":
        return cls(orientation, (semiring.coerce(0),) * n, semiring)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def is_row(self) -> bool:
        return self.orientation == "row"

    def transpose(self) -> "Vector":
        return Vector("column" if self.is_row else "row", self.entries, self.semiring)

    def __add__(self, other: "Vector") -> "Vector":
        _same_semiring(self.semiring, other.semiring)
        if self.orientation != other.orientation or len(self) != len(other):
            raise DimensionError("cannot add vectors of different shapes")
        return Vector(self.orientation, tuple(x + y for x, y in zip(self, other)), self.semiring)

    def __neg__(self) -> "Vector":
        if self.semiring is Semiring.N:
            raise SemiringError("N has no additive inverses; embed into Z first")
        return Vector(self.orientation, tuple(-x for x in self), self.semiring)

    def scale(self, c) -> "Vector":
        c = self.semiring.coerce(c)
        return Vector(self.orientation, tuple(c * x for x in self), self.semiring)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __repr__(self):
        return f"Vector[{self.semiring.value}].{self.orientation}({list(self.entries)})"


def _same_semiring(a: Semiring, b: Semiring) -> None:
    if a is not b:
        raise SemiringError(f"semiring mismatch: {a.value} vs {b.value}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _same_semiring(a.semiring, b.semiring)
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    bt = list(zip(*b.entries)) if b.rows else [()] * b.cols
    zero = a.semiring.coerce(0)
    out = tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x and y), zero) for col in bt)
        for row in a.entries
    )
    return Matrix(a.rows, b.cols, out, a.semiring)


def mat_pow(m: Matrix, e: int) -> Matrix:
    if not m.is_square:
        raise DimensionError(f"cannot raise a {m.shape} matrix to a power")
    if e < 0:
        raise ValueError("negative exponent")
    result = Matrix.identity(m.rows, m.semiring)
    base = m
    while e:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result


def vec_mat(v: Vector, m: Matrix) -> Vector:
    if not v.is_row:
        raise DimensionError("vec_mat needs a row vector")
    _same_semiring(v.semiring, m.semiring)
    if len(v) != m.rows:
        raise DimensionError(f"row vector of length {len(v)} against {m.shape} matrix")
    acc = [m.semiring.coerce(0)] * m.cols
    for x, row in zip(v.entries, m.entries):
        if x:
            for j, y in enumerate(row):
                if y:
                    acc[j] += x * y
    return Vector("row", tuple(acc), m.semiring)


def mat_vec(m: Matrix, v: Vector) -> Vector:
    if v.is_row:
        raise DimensionError("mat_vec needs a column vector")
    _same_semiring(v.semiring, m.semiring)
    if len(v) != m.cols:
        raise DimensionError(f"{m.shape} matrix against column vector of length {len(v)}")
    zero = m.semiring.coerce(0)
    return Vector("column", tuple(sum((x * y for x, y in zip(row, v.entries) if x and y), zero)
                                  for row in m.entries), m.semiring)


def dot(v: Vector, w: Vector) -> Scalar:
    """Contract a row vector with a column vector."""
    if not v.is_row or w.is_row:
        raise DimensionError("dot expects (row, column)")
    _same_semiring(v.semiring, w.semiring)
    if len(v) != len(w):
        raise DimensionError(f"length mismatch {len(v)} vs {len(w)}")
    return sum((x * y for x, y in zip(v.entries, w.entries)), v.semiring.coerce(0))


def embed(x, source: Semiring, target: Semiring):
    """Reinterpret a Matrix or Vector tagged ``source`` in the wider ``target``."""
    if x.semiring is not source:
        raise SemiringError(f"object is tagged {x.semiring.value}, not {source.value}")
    if target.rank < source.rank:
        raise SemiringError(f"cannot narrow {source.value} to {target.value}")
    if target is source:
        return x
    if isinstance(x, Matrix):
        return x.map(lambda v: v, target)
    return Vector(x.orientation, tuple(target.coerce(v) for v in x.entries), target)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; index (i, j) of ``a`` times (k, l) of ``b`` lands at (i*b.rows+k, j*b.cols+l)."""
    _same_semiring(a.semiring, b.semiring)
    rows = []
    for ra in a.entries:
        for rb in b.entries:
            rows.append(tuple(x * y for x in ra for y in rb))
    return Matrix(a.rows * b.rows, a.cols * b.cols, tuple(rows), a.semiring)


def kron_vec(v: Vector, w: Vector) -> Vector:
    _same_semiring(v.semiring, w.semiring)
    if v.orientation != w.orientation:
        raise DimensionError("Kronecker product of a row and a column vector")
    return Vector(v.orientation, tuple(x * y for x in v for y in w), v.semiring)


def block(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a block matrix; all blocks in a block-row share their height."""
    sr = grid[0][0].semiring
    rows = []
    for brow in grid:
        h = brow[0].rows
        for m in brow:
            _same_semiring(sr, m.semiring)
            if m.rows != h:
                raise DimensionError("ragged block row")
        for i in range(h):
            rows.append(tuple(x for m in brow for x in m.entries[i]))
    width = len(rows[0]) if rows else 0
    if any(len(r) != width for r in rows):
        raise DimensionError("ragged block columns")
    return Matrix(len(rows), width, tuple(rows), sr)


def direct_sum(a: Matrix, b: Matrix) -> Matrix:
    _same_semiring(a.semiring, b.semiring)
    return block([[a, Matrix.zero(a.rows, b.cols, a.semiring)],
                  [Matrix.zero(b.rows, a.cols, a.semiring), b]])


class RowEchelon:
    """Incrementally maintained echelon basis of a subspace of Q^n.

    ``add`` reduces a vector against the current basis and keeps it when it
    is independent. Pivot choice is the first nonzero entry; no tolerances.
    """

    def __init__(self, n: int):
        self.n = n
        self._rows: list[list[Fraction]] = []  # reduced rows, each normalised to pivot 1
        self._pivots: list[int] = []

    def __len__(self):
        return len(self._rows)

    def reduce(self, v: Sequence) -> list[Fraction]:
        r = [Fraction(x) for x in v]
        if len(r) != self.n:
            raise DimensionError(f"vector of length {len(r)} in a space of dimension {self.n}")
        for row, p in zip(self._rows, self._pivots):
            c = r[p]
            if c:
                for j in range(p, self.n):
                    if row[j]:
                        r[j] -= c * row[j]
        return r

    def add(self, v: Sequence) -> bool:
        r = self.reduce(v)
        for p, x in enumerate(r):
            if x:
                break
        else:
            return False
        inv = 1 / r[p]
        r = [x * inv for x in r]
        # keep the basis fully reduced so later reductions touch each pivot once
        for row in self._rows:
            c = row[p]
            if c:
                for j in range(self.n):
                    if r[j]:
                        row[j] -= c * r[j]
        self._rows.append(r)
        self._pivots.append(p)
        return True

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))
