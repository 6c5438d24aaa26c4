from __future__ import annotations

from pathlib import Path

import pytest

from char2interp.lattice import box

REPO_ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = REPO_ROOT / "data"

# the ten-point running example: regular at multiplicity 4
EXAMPLE10 = (
    (0, 0), (0, 1), (1, 0), (0, 2), (1, 1),
    (2, 0), (1, 2), (2, 1), (3, 0), (1, 3),
)


def subset_of_box(t: int, mask: int) -> frozenset:
    pts = box(t)
    return frozenset(p for k, p in enumerate(pts) if (mask >> k) & 1)


@pytest.fixture(scope="session")
def degree26_text() -> str:
    return (DATA_DIR / "degree26.diagram").read_text()
