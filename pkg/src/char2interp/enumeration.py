"""Agreement scans: the recursive criterion versus the direct rank oracle."""
from __future__ import annotations

from dataclasses import dataclass

from .lattice import Point, box
from .regularity import is_m_independent, theorem_check
from .rng import SplitMix64


@dataclass(frozen=True)
class AgreementScan:
    t: int
    mode: str  # "exhaustive" | "sample"
    total: int
    agreements: int
    disagreements: tuple[frozenset[Point], ...]
    seed: int | None = None

    @property
    def all_agree(self) -> bool:
        return self.agreements == self.total


def _subset(points: tuple[Point, ...], mask: int) -> frozenset[Point]:
    return frozenset(p for k, p in enumerate(points) if (mask >> k) & 1)


def _agree(s: frozenset[Point], t: int) -> bool:
    return theorem_check(s, t).regular == is_m_independent(s, 1 << (t + 1))


def exhaustive_agreement(t: int) -> AgreementScan:
    """Compare the two deciders on every subset of B_{t+1}."""
    points = box(t + 1)
    npoints = len(points)
    if npoints > 20:
        raise ValueError(f"exhaustive scan over 2^{npoints} subsets is not feasible")
    bad = []
    total = 1 << npoints
    for mask in range(total):
        s = _subset(points, mask)
        if not _agree(s, t):
            bad.append(s)
    return AgreementScan(t, "exhaustive", total, total - len(bad), tuple(bad))


def sampled_agreement(t: int, count: int, seed: int) -> AgreementScan:
    """Compare the deciders on seeded uniform subsets of B_{t+1}."""
    points = box(t + 1)
    npoints = len(points)
    rng = SplitMix64(seed)
    bad = []
    for _ in range(count):
        mask = 0
        remaining = npoints
        while remaining > 0:
            take = min(64, remaining)
            mask = (mask << take) | rng.bits(take)
            remaining -= take
        s = _subset(points, mask)
        if not _agree(s, t):
            bad.append(s)
    return AgreementScan(t, "sample", count, count - len(bad), tuple(bad), seed=seed)
