"""Multi-knot interpolation schemes and the randomized regularity certifier.

A scheme prescribes vanishing of all Hasse derivatives of order below m_q at
each of n symbolic knots, for polynomials supported on a fixed monomial set.
Coordinates are only chosen at evaluation time, in the 2^64-element field;
a single nonzero determinant of the square evaluated matrix proves that the
generic determinant polynomial is nonzero, hence the scheme is almost
regular.  All-zero trials are reported as evidence with a Schwartz-Zippel
bound, never as proof.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .errors import DuplicateKnot, SchemeFormatError, ZeroCoordinate
from .gf2 import Gf2kElement
from .lattice import Point, PointMultiset, parse_points, triangle
from .regularity import is_m_independent
from .rng import SplitMix64

Coord = tuple[int, int]


@dataclass(frozen=True)
class Scheme:
    """Knot multiplicities plus a monomial support."""

    mults: tuple[int, ...]
    support: PointMultiset

    def __post_init__(self):
        if len(self.mults) < 1:
            raise ValueError("a scheme needs at least one knot")
        if any(m < 1 for m in self.mults):
            raise ValueError("multiplicities must be positive")

    @classmethod
    def single(cls, support, m: int) -> "Scheme":
        return cls((m,), PointMultiset.of(support))

    @classmethod
    def with_triangle_support(cls, d: int, mults: Sequence[int]) -> "Scheme":
        return cls(tuple(mults), PointMultiset(triangle(d + 1)))

    @property
    def nknots(self) -> int:
        return len(self.mults)

    @property
    def nrows(self) -> int:
        return sum(m * (m + 1) // 2 for m in self.mults)

    @property
    def ncols(self) -> int:
        return self.support.size

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def degree_bound(self) -> int:
        """Bound on the total degree of the generic determinant polynomial."""
        return sum((i + j) * c for (i, j), c in self.support.items())


@dataclass(frozen=True)
class EvaluatedMatrix:
    """The interpolation matrix at concrete knot coordinates."""

    values: np.ndarray  # uint64, shape (rows, cols)
    row_meta: tuple[tuple[int, int, int], ...]  # (knot, alpha, beta) per row
    col_points: tuple[Point, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def det(self) -> Gf2kElement:
        from . import _gf2k_kernels as k

        if self.values.shape[0] != self.values.shape[1]:
            raise ValueError("determinant of a non-square evaluated matrix")
        return Gf2kElement(int(k.det_u64(self.values.copy())))

    def rank(self) -> int:
        from . import _gf2k_kernels as k

        return int(k.rank_u64(self.values.copy()))


def build_matrix(scheme: Scheme, coords: Sequence[Coord]) -> EvaluatedMatrix:
    """Evaluate the scheme's matrix at the given knot coordinates.

    Row (q, alpha, beta) and column (i, j) meet in
    binom(i, alpha) binom(j, beta) x_q^(i-alpha) y_q^(j-beta), the Hasse
    derivative of x^i y^j; rows per knot and columns follow degree order.
    """
    if len(coords) != scheme.nknots:
        raise ValueError(f"expected {scheme.nknots} coordinate pairs, got {len(coords)}")
    pairs = []
    for x, y in coords:
        x = x.value if isinstance(x, Gf2kElement) else int(x)
        y = y.value if isinstance(y, Gf2kElement) else int(y)
        if x == 0 or y == 0:
            raise ZeroCoordinate("knot coordinates must be nonzero")
        pairs.append((x, y))
    if len(set(pairs)) != len(pairs):
        raise DuplicateKnot("knots must be pairwise distinct")

    row_meta = tuple(
        (q, a, b)
        for q, m in enumerate(scheme.mults)
        for (a, b) in triangle(m)
    )
    col_points = tuple(scheme.support.points())
    from . import _gf2k_kernels as k

    out = np.empty((len(row_meta), len(col_points)), dtype=np.uint64)
    k.fill_evaluated(
        np.array([r[0] for r in row_meta], dtype=np.int64),
        np.array([r[1] for r in row_meta], dtype=np.int64),
        np.array([r[2] for r in row_meta], dtype=np.int64),
        np.array([p[0] for p in col_points], dtype=np.int64),
        np.array([p[1] for p in col_points], dtype=np.int64),
        np.array([p[0] for p in pairs], dtype=np.uint64),
        np.array([p[1] for p in pairs], dtype=np.uint64),
        out,
    )
    return EvaluatedMatrix(out, row_meta, col_points)


def draw_coords(rng: SplitMix64, nknots: int) -> list[Coord]:
    """One coordinate tuple: uniform nonzero words, distinct knot pairs."""
    used: set[Coord] = set()
    coords = []
    for _ in range(nknots):
        while True:
            x = rng.next()
            y = rng.next()
            if x == 0 or y == 0 or (x, y) in used:
                continue
            used.add((x, y))
            coords.append((x, y))
            break
    return coords


@dataclass(frozen=True)
class McVerdict:
    """Outcome of the Monte Carlo certifier.

    ``certified`` is a proof; ``observed-dependent`` only bounds the chance
    that a regular scheme slipped through; ``not-square`` reports ranks.
    """

    status: str  # "certified" | "observed-dependent" | "not-square"
    trials_requested: int
    trials_used: int
    seed: int
    rows: int
    cols: int
    degree_bound: int
    per_trial_failure_bound: float
    overall_failure_bound: Optional[float] = None
    determinant: Optional[int] = None
    max_rank: Optional[int] = None
    coords_per_trial: tuple[tuple[Coord, ...], ...] = field(default=(), repr=False)


def _thread_cap() -> int:
    raw = os.environ.get("CHAR2_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def almost_regular_mc(scheme: Scheme, trials: int, seed: int) -> McVerdict:
    """Randomized almost-regularity certificate by determinant evaluation.

    Coordinate tuples for all trials are drawn up front from splitmix64, so
    the verdict depends only on (scheme, trials, seed).  Square schemes stop
    at the first nonzero determinant.  CHAR2_THREADS > 1 evaluates trials in
    parallel batches without changing the verdict.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = SplitMix64(seed)
    all_coords = [tuple(draw_coords(rng, scheme.nknots)) for _ in range(trials)]
    bound = scheme.degree_bound() / 2.0**64
    common = dict(
        trials_requested=trials,
        seed=seed,
        rows=scheme.nrows,
        cols=scheme.ncols,
        degree_bound=scheme.degree_bound(),
        per_trial_failure_bound=bound,
        coords_per_trial=tuple(all_coords),
    )

    threads = min(_thread_cap(), trials)

    def run_batch(fn, batch):
        if threads > 1 and len(batch) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                return list(pool.map(fn, batch))
        return [fn(c) for c in batch]

    if scheme.is_square():
        dets: list[int] = []
        for start in range(0, trials, max(threads, 1)):
            batch = all_coords[start : start + max(threads, 1)]
            dets.extend(run_batch(lambda c: build_matrix(scheme, c).det().value, batch))
            for k, d in enumerate(dets):
                if d != 0:
                    return McVerdict(
                        status="certified",
                        trials_used=k + 1,
                        determinant=d,
                        **common,
                    )
        return McVerdict(
            status="observed-dependent",
            trials_used=trials,
            overall_failure_bound=bound**trials,
            **common,
        )

    ranks = run_batch(lambda c: build_matrix(scheme, c).rank(), all_coords)
    return McVerdict(
        status="not-square",
        trials_used=trials,
        max_rank=max(ranks),
        **common,
    )


def single_point_consistency(s, m: int, trials: int = 2, seed: int = 1) -> bool:
    """Check that the evaluated-rank certifier agrees with the GF(2) rank.

    For one knot the evaluated matrix is a diagonal scaling of the 0/1
    matrix, so agreement is exact at any nonzero coordinates.
    """
    ms = PointMultiset.of(s)
    verdict = almost_regular_mc(Scheme.single(ms, m), trials, seed)
    if verdict.status == "certified":
        observed = True
    elif verdict.status == "observed-dependent":
        observed = False
    else:
        observed = verdict.max_rank == ms.size
    return observed == is_m_independent(ms, m)


def parse_scheme(text: str, base_dir: Optional[Path] = None) -> Scheme:
    """Parse the scheme text format.

    Lines are ``key=value``; '#' starts a comment.  ``m`` is the knot
    multiplicity list.  The support is either ``d=<int>`` (all monomials of
    degree <= d) or ``support=<path>`` naming a point-set file, resolved
    relative to ``base_dir``.
    """
    d: Optional[int] = None
    support_path: Optional[str] = None
    mults: Optional[tuple[int, ...]] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SchemeFormatError(f"line {lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key == "d":
            try:
                d = int(value)
            except ValueError as exc:
                raise SchemeFormatError(f"line {lineno}: bad degree {value!r}") from exc
            if d < 0:
                raise SchemeFormatError(f"line {lineno}: degree must be nonnegative")
        elif key == "support":
            support_path = value
        elif key == "m":
            try:
                mults = tuple(int(v) for v in value.split(",") if v.strip())
            except ValueError as exc:
                raise SchemeFormatError(f"line {lineno}: bad multiplicity list") from exc
        else:
            raise SchemeFormatError(f"line {lineno}: unknown key {key!r}")
    if mults is None or not mults:
        raise SchemeFormatError("missing multiplicity line 'm=...'")
    if (d is None) == (support_path is None):
        raise SchemeFormatError("exactly one of 'd=' or 'support=' is required")
    if d is not None:
        support = PointMultiset(triangle(d + 1))
    else:
        path = Path(support_path)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        try:
            support = parse_points(path.read_text())
        except OSError as exc:
            raise SchemeFormatError(f"cannot read support file {path}: {exc}") from exc
    return Scheme(mults, support)


def parse_scheme_file(path: str | Path) -> Scheme:
    path = Path(path)
    return parse_scheme(path.read_text(), base_dir=path.parent)
