"""Exact linear algebra over GF(2) and over the field with 2^64 elements.

GF(2) rows are bit-packed into Python integers (bit k = column k), so row
elimination is a single word-parallel XOR regardless of width.  The 2^64
extension field uses the irreducible pentanomial X^64 + X^4 + X^3 + X + 1;
its hot paths (determinant, rank of evaluated matrices) are compiled, see
``_gf2k_kernels``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch

REDUCTION_POLY = (1 << 64) | 0b11011  # X^64 + X^4 + X^3 + X + 1
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Gf2Vector:
    """Fixed-length bit vector; ``bits`` packs component k at bit k."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise DimensionMismatch(f"bits do not fit in {self.n} components")

    @classmethod
    def from_bits(cls, seq: Iterable[int]) -> "Gf2Vector":
        bits = 0
        n = 0
        for b in seq:
            if b & 1:
                bits |= 1 << n
            n += 1
        return cls(bits, n)

    @classmethod
    def zero(cls, n: int) -> "Gf2Vector":
        return cls(0, n)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, k: int) -> int:
        if not 0 <= k < self.n:
            raise IndexError(k)
        return (self.bits >> k) & 1

    def __xor__(self, other: "Gf2Vector") -> "Gf2Vector":
        if self.n != other.n:
            raise DimensionMismatch("vector lengths differ")
        return Gf2Vector(self.bits ^ other.bits, self.n)

    __add__ = __xor__

    def is_zero(self) -> bool:
        return self.bits == 0

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def support(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.n) if (self.bits >> k) & 1)

    def to_tuple(self) -> tuple[int, ...]:
        return tuple((self.bits >> k) & 1 for k in range(self.n))

    def __repr__(self) -> str:
        return f"Gf2Vector({''.join(str(b) for b in self.to_tuple())})"


@dataclass(frozen=True)
class Gf2Matrix:
    """Dense GF(2) matrix stored as one packed integer per row."""

    row_bits: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        for r in self.row_bits:
            if r < 0 or r >> self.ncols:
                raise DimensionMismatch(f"row does not fit in {self.ncols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "Gf2Matrix":
        rows = list(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        packed = []
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatch("ragged rows")
            bits = 0
            for k, b in enumerate(row):
                if b & 1:
                    bits |= 1 << k
            packed.append(bits)
        return cls(tuple(packed), ncols)

    @classmethod
    def from_row_ints(cls, row_bits: Iterable[int], ncols: int) -> "Gf2Matrix":
        return cls(tuple(row_bits), ncols)

    @classmethod
    def from_columns(cls, col_bits: Sequence[int], nrows: int) -> "Gf2Matrix":
        rows = []
        for r in range(nrows):
            bits = 0
            for k, c in enumerate(col_bits):
                if (c >> r) & 1:
                    bits |= 1 << k
            rows.append(bits)
        return cls(tuple(rows), len(col_bits))

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(tuple(1 << k for k in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.row_bits)

    def row(self, i: int) -> Gf2Vector:
        return Gf2Vector(self.row_bits[i], self.ncols)

    def rows(self) -> list[Gf2Vector]:
        return [Gf2Vector(r, self.ncols) for r in self.row_bits]

    def entry(self, i: int, j: int) -> int:
        return (self.row_bits[i] >> j) & 1

    def transpose(self) -> "Gf2Matrix":
        cols = []
        for j in range(self.ncols):
            bits = 0
            for i, r in enumerate(self.row_bits):
                if (r >> j) & 1:
                    bits |= 1 << i
            cols.append(bits)
        return Gf2Matrix(tuple(cols), self.nrows)

    def mat_vec(self, v: Gf2Vector) -> Gf2Vector:
        if v.n != self.ncols:
            raise DimensionMismatch("vector length != ncols")
        bits = 0
        for i, r in enumerate(self.row_bits):
            if bin(r & v.bits).count("1") & 1:
                bits |= 1 << i
        return Gf2Vector(bits, self.nrows)


def _reduced_echelon(row_bits: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; pivots scan columns left to right."""
    rows = list(row_bits)
    pivot_cols = []
    r = 0
    for c in range(ncols):
        mask = 1 << c
        pivot = next((i for i in range(r, len(rows)) if rows[i] & mask), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & mask:
                rows[i] ^= rows[r]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivot_cols


def rank(m: Gf2Matrix) -> int:
    """Rank over GF(2)."""
    _, pivot_cols = _reduced_echelon(m.row_bits, m.ncols)
    return len(pivot_cols)


def kernel_basis(m: Gf2Matrix) -> list[Gf2Vector]:
    """Basis of the right null space, one vector per free column."""
    rows, pivot_cols = _reduced_echelon(m.row_bits, m.ncols)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        bits = 1 << free
        for i, c in enumerate(pivot_cols):
            if (rows[i] >> free) & 1:
                bits |= 1 << c
        basis.append(Gf2Vector(bits, m.ncols))
    return basis


def rank_of_columns(col_bits: Iterable[int]) -> int:
    """Rank of a set of packed column vectors, via an XOR basis."""
    basis: dict[int, int] = {}
    r = 0
    for v in col_bits:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                r += 1
                break
    return r


def gf2k_mul_int(a: int, b: int) -> int:
    """Multiply two field elements given as plain 64-bit integers."""
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    # reduce the up-to-127-degree product
    for k in range(acc.bit_length() - 1, 63, -1):
        if (acc >> k) & 1:
            acc ^= REDUCTION_POLY << (k - 64)
    return acc


@dataclass(frozen=True)
class Gf2kElement:
    """Element of the field with 2^64 elements, as a 64-bit word."""

    value: int

    def __post_init__(self):
        if not 0 <= self.value <= _MASK64:
            raise ValueError("value does not fit in 64 bits")

    def __add__(self, other: "Gf2kElement") -> "Gf2kElement":
        return Gf2kElement(self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: "Gf2kElement") -> "Gf2kElement":
        return Gf2kElement(gf2k_mul_int(self.value, other.value))

    def __pow__(self, e: int) -> "Gf2kElement":
        result = Gf2kElement(1)
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "Gf2kElement":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self ** (2**64 - 2)

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"Gf2kElement({self.value:#018x})"


def _as_u64_matrix(m):
    import numpy as np

    rows = [[e.value if isinstance(e, Gf2kElement) else int(e) for e in row] for row in m]
    n = len(rows)
    for row in rows:
        if len(row) != (len(rows[0]) if rows else 0):
            raise DimensionMismatch("ragged rows")
    arr = np.array(rows, dtype=np.uint64).reshape(n, len(rows[0]) if rows else 0)
    return arr


def det_gf2k(m) -> Gf2kElement:
    """Exact determinant in the 2^64-element field.

    Accepts a square array-like of :class:`Gf2kElement` or plain integers.
    Elimination picks the first nonzero pivot scanning top to bottom; row
    swaps cost nothing in characteristic 2.
    """
    arr = _as_u64_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch("determinant of a non-square matrix")
    if arr.shape[0] == 0:
        return Gf2kElement(1)
    from . import _gf2k_kernels as k

    return Gf2kElement(int(k.det_u64(arr.copy())))


def rank_gf2k(m) -> int:
    """Rank over the 2^64-element field."""
    arr = _as_u64_matrix(m)
    if arr.size == 0:
        return 0
    from . import _gf2k_kernels as k

    return int(k.rank_u64(arr.copy()))
