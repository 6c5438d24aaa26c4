"""Derived sets: projections of a subset of B_{t+1} onto B_t.

Each cell (i, j) of B_t owns four lifts in B_{t+1}:

    A = (i, j)          B = (i + 2^t, j)
    C = (i, j + 2^t)    D = (i + 2^t, j + 2^t)

and six lift pairs grouped as horizontal {A,B}, {C,D}, vertical {A,C},
{B,D}, and diagonal {A,D}, {C,B}.  A cell enters a derived set when the
source contains one of the pairs selected by the kind; it becomes a double
element (multiplicity 2) exactly when all four lifts are present.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import MultiplePoints, OutOfBox
from .lattice import Point, PointMultiset, box, in_box

KINDS = ("hv", "vd", "dh", "hori", "vert", "diag")


def lifts(p: Point, t: int) -> tuple[Point, Point, Point, Point]:
    """The four lifts (A, B, C, D) of a cell of B_t into B_{t+1}."""
    i, j = p
    s = 1 << t
    return ((i, j), (i + s, j), (i, j + s), (i + s, j + s))


def lift_pairs(p: Point, t: int, group: str) -> tuple[tuple[Point, Point], tuple[Point, Point]]:
    """The two lift pairs of one group; the first listed is the preferred one."""
    a, b, c, d = lifts(p, t)
    if group == "hori":
        return ((a, b), (c, d))
    if group == "vert":
        return ((a, c), (b, d))
    if group == "diag":
        return ((a, d), (c, b))
    raise ValueError(f"unknown pair group {group!r}")


_KIND_GROUPS = {
    "hv": ("hori", "vert"),
    "vd": ("vert", "diag"),
    "dh": ("diag", "hori"),
    "hori": ("hori",),
    "vert": ("vert",),
    "diag": ("diag",),
}


@dataclass(frozen=True)
class DerivedSet:
    """A derived multiset over B_t; multiplicities are 1 or 2."""

    kind: str
    t: int
    counts: dict[Point, int]

    def support(self) -> frozenset[Point]:
        return frozenset(self.counts)

    def multiplicity(self, p: Point) -> int:
        return self.counts.get(p, 0)

    def max_multiplicity(self) -> int:
        return max(self.counts.values(), default=0)

    def as_multiset(self) -> PointMultiset:
        return PointMultiset(self.counts)

    def __contains__(self, p: Point) -> bool:
        return p in self.counts

    def grid_lines(self) -> list[str]:
        """Render as the usual box picture, top row = largest j."""
        side = 1 << self.t
        return [
            " ".join(str(self.counts.get((i, j), 0)) for i in range(side))
            for j in reversed(range(side))
        ]


def _checked_set(s, t: int) -> frozenset[Point]:
    ms = PointMultiset.of(s)
    if ms.max_multiplicity() > 1:
        raise MultiplePoints("derived sets are defined for sets without multiple points")
    pts = ms.support()
    for p in pts:
        if not in_box(p, t + 1):
            raise OutOfBox(f"{p} lies outside the 2^{t + 1} box")
    return pts


def derive(s: Iterable[Point] | PointMultiset, t: int, kind: str) -> DerivedSet:
    """Derived set of kind ``kind`` for s, a subset of B_{t+1}."""
    if kind not in _KIND_GROUPS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    pts = _checked_set(s, t)
    counts: dict[Point, int] = {}
    for cell in box(t):
        member = False
        for group in _KIND_GROUPS[kind]:
            for pair in lift_pairs(cell, t, group):
                if pair[0] in pts and pair[1] in pts:
                    member = True
                    break
            if member:
                break
        if member:
            counts[cell] = 2 if all(q in pts for q in lifts(cell, t)) else 1
    return DerivedSet(kind, t, counts)


def four_lift_cells(s, t: int) -> list[Point]:
    """Cells of B_t whose four lifts all lie in s (its double elements)."""
    pts = _checked_set(s, t)
    return [cell for cell in box(t) if all(q in pts for q in lifts(cell, t))]
