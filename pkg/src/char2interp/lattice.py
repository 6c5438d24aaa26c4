"""Lattice-point combinatorics underlying the interpolation matrices.

A point (i, j) is the exponent pair of the monomial x^i y^j.  Row and column
indices of every matrix in this package follow the total-degree order

    (0,0) < (0,1) < (1,0) < (0,2) < (1,1) < (2,0) < (0,3) < ...

Column vectors are "Lucas vectors": their entries are products of binomial
coefficients mod 2, which by Lucas' theorem are bitwise submask tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .errors import PointFormatError
from .gf2 import Gf2Vector

Point = tuple[int, int]


def binom_mod2(n: int, k: int) -> int:
    """binom(n, k) mod 2: 1 iff the bits of k are a submask of n."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    return int(k & ~n == 0)


def degree_order_index(a: int, b: int) -> int:
    """Position of (a, b) in the total-degree order."""
    d = a + b
    return d * (d + 1) // 2 + a


@lru_cache(maxsize=None)
def triangle(m: int) -> tuple[Point, ...]:
    """All (i, j) with i + j <= m - 1, in total-degree order."""
    return tuple((a, d - a) for d in range(m) for a in range(d + 1))


@lru_cache(maxsize=None)
def box(t: int) -> tuple[Point, ...]:
    """The full 2^t x 2^t grid of residues, row-major."""
    side = 1 << t
    return tuple((i, j) for i in range(side) for j in range(side))


def in_box(p: Point, t: int) -> bool:
    side = 1 << t
    return 0 <= p[0] < side and 0 <= p[1] < side


def lucas_dim(t: int) -> int:
    """Number of rows of the level-t system, |T_{2^t}|."""
    side = 1 << t
    return side * (side + 1) // 2


@lru_cache(maxsize=None)
def column_bits(m: int, p: Point) -> int:
    """Column of x^i y^j over the rows T_m, packed with bit r = row r."""
    i, j = p
    bits = 0
    for r, (a, b) in enumerate(triangle(m)):
        if a & ~i == 0 and b & ~j == 0:
            bits |= 1 << r
    return bits


def lucas_bits(t: int, p: Point) -> int:
    """Level-t Lucas vector of x^i y^j, packed with bit r = row r."""
    return column_bits(1 << t, p)


@dataclass(frozen=True)
class LucasVector:
    """A column of the level-t interpolation matrix, with its provenance."""

    t: int
    point: Point
    vec: Gf2Vector


def lucas_vector(t: int, p: Point) -> LucasVector:
    """Lucas vector of p at level t; p need not lie in the level's box."""
    return LucasVector(t, p, Gf2Vector(lucas_bits(t, p), lucas_dim(t)))


class PointMultiset:
    """Finite multiset of lattice points with positive multiplicities."""

    __slots__ = ("_counts",)

    def __init__(self, points: Union[Iterable[Point], Mapping[Point, int], "PointMultiset"] = ()):
        counts: dict[Point, int] = {}
        if isinstance(points, PointMultiset):
            counts.update(points._counts)
        elif isinstance(points, Mapping):
            for p, c in points.items():
                if c < 1:
                    raise ValueError(f"multiplicity of {p} must be >= 1")
                q = _check_point(p)
                counts[q] = counts.get(q, 0) + int(c)
        else:
            for p in points:
                p = _check_point(p)
                counts[p] = counts.get(p, 0) + 1
        self._counts = counts

    @classmethod
    def of(cls, s) -> "PointMultiset":
        return s if isinstance(s, PointMultiset) else cls(s)

    @property
    def size(self) -> int:
        return sum(self._counts.values())

    def support(self) -> frozenset[Point]:
        return frozenset(self._counts)

    def multiplicity(self, p: Point) -> int:
        return self._counts.get(p, 0)

    def max_multiplicity(self) -> int:
        return max(self._counts.values(), default=0)

    def items(self) -> Iterator[tuple[Point, int]]:
        return iter(sorted(self._counts.items(), key=lambda pc: degree_order_index(*pc[0])))

    def points(self) -> list[Point]:
        """All points with multiplicity, in total-degree order."""
        out = []
        for p, c in self.items():
            out.extend([p] * c)
        return out

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points())

    def __contains__(self, p: Point) -> bool:
        return p in self._counts

    def __eq__(self, other) -> bool:
        if isinstance(other, PointMultiset):
            return self._counts == other._counts
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._counts.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{p}" + (f"x{c}" if c > 1 else "") for p, c in self.items())
        return f"PointMultiset({{{inner}}})"


def _check_point(p) -> Point:
    i, j = p
    if i < 0 or j < 0:
        raise ValueError(f"point coordinates must be nonnegative, got {(i, j)}")
    return (int(i), int(j))


def reduce_mod(s, t: int) -> PointMultiset:
    """Reduce every point coordinate-wise mod 2^t, accumulating multiplicity."""
    side = 1 << t
    counts: dict[Point, int] = {}
    for p, c in PointMultiset.of(s)._counts.items():
        q = (p[0] % side, p[1] % side)
        counts[q] = counts.get(q, 0) + c
    return PointMultiset(counts)


def parse_points(text: str) -> PointMultiset:
    """Parse the point-set text format.

    One point per line as two decimal integers; repeated lines accumulate
    multiplicity; blank lines and lines starting with '#' are ignored.
    """
    points = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PointFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise PointFormatError(f"line {lineno}: {exc}") from exc
        if i < 0 or j < 0:
            raise PointFormatError(f"line {lineno}: coordinates must be nonnegative")
        points.append((i, j))
    return PointMultiset(points)


def parse_inline_points(text: str) -> PointMultiset:
    """Parse the inline set syntax, e.g. ``0,0;1,2;1,2;3,3``."""
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise PointFormatError(f"expected 'i,j' pair, got {chunk!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise PointFormatError(str(exc)) from exc
        if i < 0 or j < 0:
            raise PointFormatError("coordinates must be nonnegative")
        points.append((i, j))
    return PointMultiset(points)


def format_points(s) -> str:
    """Serialize a multiset in the point-set text format."""
    lines = []
    for p, c in PointMultiset.of(s).items():
        lines.extend([f"{p[0]} {p[1]}"] * c)
    return "\n".join(lines) + ("\n" if lines else "")
