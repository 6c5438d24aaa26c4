"""Division diagrams: digit triangles assigning each monomial to one knot.

A diagram for degree d is a triangle of d+1 text lines; line r from the top
carries r single-digit tokens, and token k of line r labels the lattice
point (k-1, d+1-r).  Digits name knots in the order '1' ... '9', '0', so a
ten-knot diagram uses '0' for knot 10.  Verification checks, per knot, that
its block of monomials stays nonsingular at that knot's multiplicity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BadToken, RaggedTriangle, SizeMismatch, UnknownLabel
from .lattice import Point, degree_order_index, reduce_mod
from .regularity import is_m_independent, theorem_check

CANONICAL_LABELS = "1234567890"


@dataclass(frozen=True)
class Diagram:
    """Degree plus a total labeling of the monomials of degree <= d."""

    d: int
    cells: dict[Point, str]

    def labels_used(self) -> tuple[str, ...]:
        present = set(self.cells.values())
        return tuple(c for c in CANONICAL_LABELS if c in present)

    def label_map(self) -> dict[str, int]:
        """Label -> knot index, pairing used labels with knots 1, 2, ..."""
        return {lab: q for q, lab in enumerate(self.labels_used(), 1)}

    def knot_label(self, q: int) -> str:
        used = self.labels_used()
        if not 1 <= q <= len(used):
            raise UnknownLabel(f"no label for knot {q}; diagram has {len(used)} labels")
        return used[q - 1]


def parse_diagram(text: str) -> Diagram:
    """Parse a digit triangle; line r must hold exactly r digit tokens."""
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        raise RaggedTriangle("empty diagram")
    nlines = len(lines)
    cells: dict[Point, str] = {}
    for r, tokens in enumerate(lines, 1):
        if len(tokens) != r:
            raise RaggedTriangle(f"line {r} has {len(tokens)} tokens, expected {r}")
        for k, tok in enumerate(tokens, 1):
            if len(tok) != 1 or not tok.isdigit():
                raise BadToken(f"line {r}, token {k}: {tok!r} is not a single digit")
            cells[(k - 1, nlines - r)] = tok
    return Diagram(nlines - 1, cells)


def serialize_diagram(dg: Diagram) -> str:
    """Canonical text: one space between tokens, apex first."""
    nlines = dg.d + 1
    rows = [
        " ".join(dg.cells[(k - 1, nlines - r)] for k in range(1, r + 1))
        for r in range(1, nlines + 1)
    ]
    return "\n".join(rows) + "\n"


def block_support(dg: Diagram, q: int) -> frozenset[Point]:
    """All cells labeled for knot q."""
    label = dg.knot_label(q)
    return frozenset(p for p, c in dg.cells.items() if c == label)


@dataclass(frozen=True)
class BlockCheck:
    knot: int
    label: str
    size: int
    expected_size: int
    independent: bool
    theorem_agrees: Optional[bool]  # None when m is not a power of two >= 2

    @property
    def passed(self) -> bool:
        return (
            self.size == self.expected_size
            and self.independent
            and self.theorem_agrees is not False
        )


@dataclass(frozen=True)
class DivisionReport:
    d: int
    mults: tuple[int, ...]
    blocks: tuple[BlockCheck, ...]

    @property
    def all_nonsingular(self) -> bool:
        return all(b.passed for b in self.blocks)

    @property
    def verdict(self) -> str:
        return "all-blocks-nonsingular" if self.all_nonsingular else "block-failure"


def verify_division(dg: Diagram, mults: Sequence[int]) -> DivisionReport:
    """Per-knot nonsingularity of the diagram's blocks.

    Block q must have exactly m_q(m_q+1)/2 cells and be m_q-independent.
    For m_q a power of two the recursive criterion is run on the reduced
    block as well and must agree with the direct rank.
    """
    mults = tuple(mults)
    used = dg.labels_used()
    if len(mults) != len(used):
        raise SizeMismatch(
            f"{len(mults)} multiplicities for a diagram with {len(used)} labels"
        )
    total = sum(m * (m + 1) // 2 for m in mults)
    ncells = len(dg.cells)
    if total != ncells:
        raise SizeMismatch(f"sum of block sizes {total} != {ncells} diagram cells")
    blocks = []
    for q, m in enumerate(mults, 1):
        support = sorted(block_support(dg, q), key=lambda p: degree_order_index(*p))
        independent = is_m_independent(support, m)
        agrees = None
        if m >= 2 and m & (m - 1) == 0:
            t = m.bit_length() - 2
            reduced = reduce_mod(support, t + 1)
            agrees = theorem_check(reduced, t).regular == independent
        blocks.append(
            BlockCheck(
                knot=q,
                label=dg.knot_label(q),
                size=len(support),
                expected_size=m * (m + 1) // 2,
                independent=independent,
                theorem_agrees=agrees,
            )
        )
    return DivisionReport(dg.d, mults, tuple(blocks))
