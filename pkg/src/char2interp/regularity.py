"""Deciding 2^t-independence, with constructive dependence witnesses.

The central decision procedure is :func:`theorem_check`, which reduces
almost-regularity at level t+1 (multiplicity 2^{t+1} at one generic point)
to a single GF(2) kernel computation over the derived sets of the input.
A nonzero kernel element yields a triple witness (U, V, W); the reverse
conversions between triples and explicit zero-sum monomial subsets are
implemented by :func:`triple_to_dependency` and :func:`dependency_to_triple`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from . import gf2
from .derive import derive, four_lift_cells, lift_pairs, lifts
from .errors import (
    DimensionMismatch,
    FourLiftCell,
    InvalidWitness,
    NotACircuit,
    NotDependent,
)
from .lattice import (
    Point,
    PointMultiset,
    box,
    column_bits,
    degree_order_index,
    in_box,
    lucas_bits,
    lucas_dim,
    reduce_mod,
    triangle,
)

REGULAR = "regular"
INCONCLUSIVE = "inconclusive"

_deg = degree_order_index


def independence_level(m: int) -> int:
    """Smallest t with 2^t >= m; reduction level used for m-independence."""
    return (m - 1).bit_length() if m > 0 else 0


def _xor_sum(points: Iterable[Point], m: int) -> int:
    acc = 0
    for p in points:
        acc ^= column_bits(m, p)
    return acc


def zero_sum(points: Iterable[Point], level: int) -> bool:
    """Whether the level-``level`` Lucas vectors of ``points`` sum to zero."""
    return _xor_sum(points, 1 << level) == 0


@dataclass(frozen=True)
class KernelSolution:
    """Support of a monomial-sum solution: sum of columns over T_m is zero."""

    m: int
    support: PointMultiset

    def verify(self) -> bool:
        if self.support.size == 0:
            return False
        acc = 0
        for p, c in self.support.items():
            if c & 1:
                acc ^= column_bits(self.m, p)
        return acc == 0


@dataclass(frozen=True)
class IndependenceResult:
    independent: bool
    rank: int
    size: int
    witness: Optional[KernelSolution]


def m_independence(s, m: int) -> IndependenceResult:
    """Full column-rank test of the T_m interpolation matrix of s.

    The input is first reduced mod 2^ceil(log2 m), which leaves the matrix
    unchanged; a multiplicity >= 2 after reduction is an immediate
    dependence (two equal columns).
    """
    ms = PointMultiset.of(s)
    level = independence_level(m)
    reduced = reduce_mod(ms, level)
    if reduced.max_multiplicity() > 1:
        side = 1 << level
        seen: dict[Point, Point] = {}
        for p in sorted(ms.support(), key=lambda q: _deg(*q)):
            r = (p[0] % side, p[1] % side)
            if ms.multiplicity(p) > 1:
                pair = PointMultiset({p: 2})
                break
            if r in seen:
                pair = PointMultiset([seen[r], p])
                break
            seen[r] = p
        cols = [column_bits(m, p) for p in reduced.support()]
        return IndependenceResult(False, gf2.rank_of_columns(cols), ms.size, KernelSolution(m, pair))
    points = sorted(reduced.support(), key=lambda q: _deg(*q))
    cols = [column_bits(m, p) for p in points]
    rk = gf2.rank_of_columns(cols)
    if rk == len(points):
        return IndependenceResult(True, rk, ms.size, None)
    matrix = gf2.Gf2Matrix.from_columns(cols, m * (m + 1) // 2)
    vec = gf2.kernel_basis(matrix)[0]
    support = PointMultiset([points[k] for k in vec.support()])
    return IndependenceResult(False, rk, ms.size, KernelSolution(m, support))


def is_m_independent(s, m: int) -> bool:
    """True iff the monomials of s keep full rank at multiplicity m."""
    return m_independence(s, m).independent


@dataclass(frozen=True)
class TripleWitness:
    """Triple (U, V, W) certifying dependence at level t+1.

    U, V, W live in the three mixed derived sets of the source; each sums
    to zero at level t, they are linked by symmetric differences, and at
    most one is empty.
    """

    t: int
    u: frozenset[Point]
    v: frozenset[Point]
    w: frozenset[Point]

    def validate(self) -> None:
        u, v, w = self.u, self.v, self.w
        if not (u or v or w):
            raise InvalidWitness("all three subsets are empty")
        if u ^ v != w or v ^ w != u or w ^ u != v:
            raise InvalidWitness("symmetric-difference conditions fail")
        for name, part in (("U", u), ("V", v), ("W", w)):
            if _xor_sum(part, 1 << self.t) != 0:
                raise InvalidWitness(f"{name} is not a zero-sum set at level {self.t}")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except InvalidWitness:
            return False
        return True


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of the recursive regularity criterion at level t+1."""

    t: int
    regular: bool
    reason: str  # "regular" | "duplicate-input" | "double-element" | "triple"
    duplicate: Optional[Point] = None
    double_element: Optional[Point] = None
    witness: Optional[TripleWitness] = None


def theorem_check(s, t: int) -> TheoremVerdict:
    """Decide 2^{t+1}-independence through the level-t derived sets.

    The input is reduced mod 2^{t+1} first.  Duplicates and cells with all
    four lifts present are immediate dependencies and are reported as their
    own witness kinds.  Otherwise a triple (U, V, W) exists iff the combined
    GF(2) system below has a nonzero solution: unknowns are indicators of U
    over S|h,v and of V over S|v,d, the two zero-sum conditions are linear,
    and W = U xor V is forced to lie inside S|d,h by parity constraints on
    the complement.  The zero-sum of W is implied by the other two.
    """
    reduced = reduce_mod(PointMultiset.of(s), t + 1)
    if reduced.max_multiplicity() > 1:
        dup = next(p for p, c in reduced.items() if c > 1)
        return TheoremVerdict(t, False, "duplicate-input", duplicate=dup)
    pts = reduced.support()
    for cell in four_lift_cells(pts, t):
        return TheoremVerdict(t, False, "double-element", double_element=cell)

    hv = sorted(derive(pts, t, "hv").support(), key=lambda q: _deg(*q))
    vd = sorted(derive(pts, t, "vd").support(), key=lambda q: _deg(*q))
    dh_support = derive(pts, t, "dh").support()
    nu = len(hv)
    ncols = nu + len(vd)
    hv_index = {p: k for k, p in enumerate(hv)}
    vd_index = {p: nu + k for k, p in enumerate(vd)}

    dim = lucas_dim(t)
    rows = [0] * (2 * dim)
    for p, k in hv_index.items():
        col = lucas_bits(t, p)
        for r in range(dim):
            if (col >> r) & 1:
                rows[r] |= 1 << k
    for p, k in vd_index.items():
        col = lucas_bits(t, p)
        for r in range(dim):
            if (col >> r) & 1:
                rows[dim + r] |= 1 << k
    for cell in box(t):
        if cell in dh_support:
            continue
        bits = 0
        if cell in hv_index:
            bits |= 1 << hv_index[cell]
        if cell in vd_index:
            bits |= 1 << vd_index[cell]
        if bits:
            rows.append(bits)

    kernel = gf2.kernel_basis(gf2.Gf2Matrix.from_row_ints(rows, ncols))
    if not kernel:
        return TheoremVerdict(t, True, "regular")
    vec = kernel[0]
    u = frozenset(hv[k] for k in range(nu) if vec[k])
    v = frozenset(vd[k - nu] for k in range(nu, ncols) if vec[k])
    return TheoremVerdict(t, False, "triple", witness=TripleWitness(t, u, v, u ^ v))


@dataclass(frozen=True)
class CorollaryOneVerdict:
    """Necessary-condition filter: a failing single-direction derived set."""

    dependent: bool
    failing_kind: Optional[str] = None
    double_element: Optional[Point] = None
    solution: Optional[KernelSolution] = None
    triple: Optional[TripleWitness] = None

    @property
    def verdict(self) -> str:
        return "dependent" if self.dependent else INCONCLUSIVE


def corollary1_filter(s, t: int) -> CorollaryOneVerdict:
    """Dependence of any of S|hori, S|vert, S|diag forces dependence of s.

    The returned triple places the failing kernel support U in the slots
    whose pair groups it actually certifies: (U, {}, U) for hori, (U, U, {})
    for vert, ({}, U, U) for diag.
    """
    cells = four_lift_cells(s, t)
    if cells:
        cell = cells[0]
        solution = KernelSolution(1 << (t + 1), PointMultiset(lifts(cell, t)))
        return CorollaryOneVerdict(True, double_element=cell, solution=solution)
    for kind in ("hori", "vert", "diag"):
        d = derive(s, t, kind)
        points = sorted(d.support(), key=lambda q: _deg(*q))
        cols = [lucas_bits(t, p) for p in points]
        matrix = gf2.Gf2Matrix.from_columns(cols, lucas_dim(t))
        kernel = gf2.kernel_basis(matrix)
        if kernel:
            u = frozenset(points[k] for k in kernel[0].support())
            triple = {
                "hori": TripleWitness(t, u, frozenset(), u),
                "vert": TripleWitness(t, u, u, frozenset()),
                "diag": TripleWitness(t, frozenset(), u, u),
            }[kind]
            solution = KernelSolution(1 << t, PointMultiset(u))
            return CorollaryOneVerdict(True, failing_kind=kind, solution=solution, triple=triple)
    return CorollaryOneVerdict(False)


def corollary2_filter(s, t: int) -> str:
    """Regular if at least two of S|h,v, S|v,d, S|d,h are 2^t-independent."""
    m = 1 << t
    good = sum(
        is_m_independent(derive(s, t, kind).as_multiset(), m)
        for kind in ("hv", "vd", "dh")
    )
    return REGULAR if good >= 2 else INCONCLUSIVE


def triple_to_dependency(s, t: int, witness: TripleWitness) -> KernelSolution:
    """Expand a triple witness into an explicit zero-sum subset of s.

    Cells of U - V contribute a horizontal lift pair, cells of U n V a
    vertical pair, cells of V - U a diagonal pair; the first listed pair of
    each group is preferred when both lie in s.
    """
    witness.validate()
    pts = PointMultiset.of(s).support()
    for name, part, kind in (("U", witness.u, "hv"), ("V", witness.v, "vd"), ("W", witness.w, "dh")):
        outside = part - derive(pts, t, kind).support()
        if outside:
            raise InvalidWitness(f"{name} is not contained in the {kind} derived set")
    chosen: list[Point] = []
    groups = (
        (witness.u - witness.v, "hori"),
        (witness.u & witness.v, "vert"),
        (witness.v - witness.u, "diag"),
    )
    for part, group in groups:
        for cell in sorted(part, key=lambda q: _deg(*q)):
            for pair in lift_pairs(cell, t, group):
                if pair[0] in pts and pair[1] in pts:
                    chosen.extend(pair)
                    break
            else:
                raise InvalidWitness(f"no {group} lift pair of {cell} lies in s")
    solution = KernelSolution(1 << (t + 1), PointMultiset(chosen))
    if not solution.verify():
        raise InvalidWitness("chosen lift pairs do not sum to zero")
    return solution


def minimal_dependent_subset(s, t: int) -> PointMultiset:
    """A circuit of s at level t+1, by greedy single-element elimination.

    Starting from the support of one kernel vector, repeatedly try to drop
    an element and re-solve inside the remainder; the survivor is minimal
    dependent (a circuit), though not necessarily of minimum size.
    """
    ms = PointMultiset.of(s)
    for p, c in ms.items():
        if c > 1:
            return PointMultiset({p: 2})
    level = t + 1
    points = sorted(ms.support(), key=lambda q: _deg(*q))

    def kernel_support(candidates: list[Point]) -> Optional[list[Point]]:
        cols = [lucas_bits(level, p) for p in candidates]
        matrix = gf2.Gf2Matrix.from_columns(cols, lucas_dim(level))
        kernel = gf2.kernel_basis(matrix)
        if not kernel:
            return None
        return [candidates[k] for k in kernel[0].support()]

    current = kernel_support(points)
    if current is None:
        raise NotDependent(f"the set is {1 << level}-independent")
    while True:
        for drop in current:
            smaller = kernel_support([p for p in current if p != drop])
            if smaller is not None:
                current = smaller
                break
        else:
            return PointMultiset(current)


def dependency_to_triple(sprime, t: int) -> TripleWitness:
    """Classify a circuit at level t+1 into a triple witness.

    Every cell of B_t meets a zero-sum set in an even number of lifts; for a
    circuit without a fully contained cell each nonempty intersection is one
    lift pair, sorted into horizontal, vertical, or diagonal buckets.
    """
    ms = PointMultiset.of(sprime)
    if ms.max_multiplicity() > 1:
        raise NotACircuit("multiple points cannot be classified into lift pairs")
    pts = ms.support()
    if not pts:
        raise NotACircuit("empty set")
    outside = [p for p in pts if not in_box(p, t + 1)]
    if outside:
        raise NotACircuit(f"points outside the 2^{t + 1} box: {sorted(outside)}")
    if _xor_sum(pts, 1 << (t + 1)) != 0:
        raise NotACircuit("the given subset does not sum to zero")
    buckets: dict[str, set[Point]] = {"hori": set(), "vert": set(), "diag": set()}
    for cell in box(t):
        inter = sorted(set(lifts(cell, t)) & pts)
        if len(inter) == 4:
            raise FourLiftCell(cell)
        if not inter:
            continue
        if len(inter) != 2:
            raise NotACircuit(f"cell {cell} meets the set in {len(inter)} lifts")
        (i1, j1), (i2, j2) = inter
        if j1 == j2:
            buckets["hori"].add(cell)
        elif i1 == i2:
            buckets["vert"].add(cell)
        else:
            buckets["diag"].add(cell)
    cols = [lucas_bits(t + 1, p) for p in sorted(pts, key=lambda q: _deg(*q))]
    if gf2.rank_of_columns(cols) != len(cols) - 1:
        raise NotACircuit("a proper nonempty subset already sums to zero")
    s1, s2, s3 = (frozenset(buckets[g]) for g in ("hori", "vert", "diag"))
    witness = TripleWitness(t, s1 | s2, s2 | s3, s1 | s3)
    witness.validate()
    return witness


@dataclass(frozen=True)
class TauSplit:
    """Permutation of a level-(t+1) vector into its (w, y, z) blocks."""

    w: gf2.Gf2Vector
    y: gf2.Gf2Vector
    z: gf2.Gf2Vector


@lru_cache(maxsize=None)
def _tau_routing(t: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    side = 1 << t
    w_pos, y_pos, z_pos = [], [], []
    for idx, (a, b) in enumerate(triangle(2 * side)):
        if a < side and b < side:
            w_pos.append(idx)
        elif b >= side:
            y_pos.append(idx)
        else:
            z_pos.append(idx)
    return tuple(w_pos), tuple(y_pos), tuple(z_pos)


def tau_decompose(v: gf2.Gf2Vector, t: int) -> TauSplit:
    """Split a level-(t+1) vector by row position: box rows to w, rows with
    b >= 2^t to y, rows with a >= 2^t to z, each block in degree order."""
    if v.n != lucas_dim(t + 1):
        raise DimensionMismatch(f"expected dimension {lucas_dim(t + 1)}, got {v.n}")
    w_pos, y_pos, z_pos = _tau_routing(t)

    def gather(positions: tuple[int, ...]) -> gf2.Gf2Vector:
        bits = 0
        for k, idx in enumerate(positions):
            if (v.bits >> idx) & 1:
                bits |= 1 << k
        return gf2.Gf2Vector(bits, len(positions))

    return TauSplit(gather(w_pos), gather(y_pos), gather(z_pos))
