"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines as they complete.
"""
import json
import time

import pytest

from char2interp.cli import main
from char2interp.derive import derive, four_lift_cells, lifts
from char2interp.diagram import block_support, parse_diagram, verify_division
from char2interp.lattice import (
    PointMultiset,
    box,
    lucas_vector,
    reduce_mod,
)
from char2interp.regularity import (
    REGULAR,
    corollary1_filter,
    corollary2_filter,
    is_m_independent,
    minimal_dependent_subset,
    theorem_check,
    triple_to_dependency,
)
from char2interp.rng import SplitMix64

from conftest import DATA_DIR, EXAMPLE10, subset_of_box

DEGREE26_MULTS = (9, 9, 8, 8, 8, 8, 8, 8, 8, 8)


def _report(name: str, ok: bool) -> None:
    print(f"\nACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, name


def _run_cli(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, json.loads(out)


@pytest.fixture(scope="session")
def warm_kernels():
    from char2interp.gf2 import det_gf2k

    det_gf2k([[1]])


@pytest.fixture(scope="module")
def t1_verdicts():
    """theorem_check and the rank oracle over every subset of B_2."""
    out = {}
    for mask in range(1 << 16):
        s = subset_of_box(2, mask)
        out[s] = (theorem_check(s, 1), is_m_independent(s, 4))
    return out


def test_criterion_1_theorem_equivalence(capsys):
    start = time.monotonic()
    code0, rep0 = _run_cli(capsys, "enumerate", "--t", "0", "--mode", "exhaustive")
    code1, rep1 = _run_cli(capsys, "enumerate", "--t", "1", "--mode", "exhaustive")
    code2, rep2 = _run_cli(
        capsys, "enumerate", "--t", "2", "--mode", "sample", "--count", "10000",
        "--seed", "20260810",
    )
    elapsed = time.monotonic() - start
    ok = (
        code0 == 0 and rep0["total"] == rep0["agreements"] == 16
        and code1 == 0 and rep1["total"] == rep1["agreements"] == 65536
        and code2 == 0 and rep2["total"] == rep2["agreements"] == 10000
        and elapsed < 60.0
    )
    _report(f"1 theorem-equivalence ({elapsed:.1f}s)", ok)


def test_criterion_2_worked_example():
    ok = is_m_independent(EXAMPLE10, 4)
    ok &= derive(EXAMPLE10, 1, "vd").grid_lines() == ["0 1", "1 1"]
    ok &= derive(EXAMPLE10, 1, "dh").grid_lines() == ["1 0", "1 1"]
    ok &= corollary2_filter(EXAMPLE10, 1) == REGULAR
    _report("2 worked-ten-point-example", ok)


def test_criterion_3_displayed_vectors():
    expected = {
        (1, (0, 0)): (1, 0, 0),
        (1, (0, 1)): (1, 1, 0),
        (1, (1, 0)): (1, 0, 1),
        (1, (1, 1)): (1, 1, 1),
        (2, (0, 0)): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
        (2, (1, 2)): (1, 0, 1, 1, 0, 0, 0, 1, 0, 0),
        (2, (3, 3)): (1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    }
    ok = all(
        lucas_vector(t, p).vec.to_tuple() == bits
        for (t, p), bits in expected.items()
    )
    _report("3 displayed-vectors", ok)


def test_criterion_4_degree26_application(capsys, tmp_path, warm_kernels):
    dg = parse_diagram((DATA_DIR / "degree26.diagram").read_text())
    sizes = sorted(len(block_support(dg, q)) for q in range(1, 11))
    ok = len(dg.cells) == 378 and sizes == [36] * 8 + [45, 45]
    ok &= verify_division(dg, DEGREE26_MULTS).all_nonsingular

    scheme_file = tmp_path / "degree26.scheme"
    scheme_file.write_text("d=26\nm=" + ",".join(map(str, DEGREE26_MULTS)) + "\n")
    start = time.monotonic()
    code, rep = _run_cli(
        capsys, "scheme", "--scheme", str(scheme_file), "--trials", "3", "--seed", "0"
    )
    elapsed = time.monotonic() - start
    ok &= code == 0
    ok &= rep["verdict"] == "certified"
    ok &= rep["trials_used"] <= 3
    ok &= rep["per_trial_failure_bound"] < 1e-9
    ok &= elapsed < 10.0
    _report(f"4 degree26-application ({elapsed:.2f}s)", ok)


def test_criterion_5a_reduction_invariance():
    rng = SplitMix64(5001)
    failures = 0
    for _ in range(1000):
        t = rng.next() % 3
        side = 1 << t
        npts = len(box(t))
        s = sorted(subset_of_box(t, rng.bits(npts)))
        shifted = [
            (i + side * (rng.next() % 5), j + side * (rng.next() % 5))
            for (i, j) in s
        ]
        if is_m_independent(s, side) != is_m_independent(shifted, side):
            failures += 1
        if reduce_mod(shifted, t) != PointMultiset(s):
            failures += 1
    _report("5a reduction-invariance (1000 cases)", failures == 0)


def test_criterion_5b_even_intersections():
    rng = SplitMix64(5002)
    checked = 0
    failures = 0
    while checked < 500:
        t = rng.next() % 2
        npts = len(box(t + 1))
        s = subset_of_box(t + 1, rng.bits(npts))
        if is_m_independent(s, 1 << (t + 1)):
            continue
        circuit = minimal_dependent_subset(s, t).support()
        for cell in box(t):
            if len(set(lifts(cell, t)) & circuit) not in (0, 2, 4):
                failures += 1
        checked += 1
    _report("5b even-cell-intersections (500 circuits)", failures == 0)


def test_criterion_5c_splitting_identities():
    from char2interp.gf2 import Gf2Vector
    from char2interp.lattice import lucas_bits, lucas_dim
    from char2interp.regularity import tau_decompose

    ok = True
    for t in (1, 2):
        side = 1 << t
        zero = Gf2Vector(0, lucas_dim(t))
        zero_w = Gf2Vector(0, side * side)
        for (i, j) in box(t):
            vt = Gf2Vector(lucas_bits(t, (i, j)), lucas_dim(t))

            def lift_vec(p):
                return Gf2Vector(lucas_bits(t + 1, p), lucas_dim(t + 1))

            cases = [
                (((i, j), (i + side, j)), (zero_w, zero, vt)),
                (((i, j + side), (i + side, j + side)), (zero_w, zero, vt)),
                (((i, j), (i, j + side)), (zero_w, vt, zero)),
                (((i + side, j), (i + side, j + side)), (zero_w, vt, zero)),
                (((i, j), (i + side, j + side)), (zero_w, vt, vt)),
                (((i, j + side), (i + side, j)), (zero_w, vt, vt)),
            ]
            for (p, q), expect in cases:
                sp = tau_decompose(lift_vec(p) ^ lift_vec(q), t)
                ok &= (sp.w, sp.y, sp.z) == expect
    _report("5c splitting-pair-identities (t=1,2)", ok)


def test_criterion_6_corollary_soundness(t1_verdicts):
    violations = 0
    for mask in range(1 << 4):
        s = subset_of_box(1, mask)
        regular = theorem_check(s, 0).regular
        if corollary2_filter(s, 0) == REGULAR and not regular:
            violations += 1
        if corollary1_filter(s, 0).dependent and regular:
            violations += 1
    for s, (verdict, _) in t1_verdicts.items():
        if corollary2_filter(s, 1) == REGULAR and not verdict.regular:
            violations += 1
        if corollary1_filter(s, 1).dependent and verdict.regular:
            violations += 1
    _report("6 corollary-soundness (exhaustive t<=1)", violations == 0)


def test_criterion_7_witness_round_trip(t1_verdicts):
    checked = 0
    failures = 0
    for s, (verdict, independent) in t1_verdicts.items():
        if verdict.regular or four_lift_cells(s, 1):
            continue
        assert not independent
        w = verdict.witness
        if w is None or not w.is_valid():
            failures += 1
            continue
        solution = triple_to_dependency(s, 1, w)
        if not solution.verify() or not set(solution.support.support()) <= s:
            failures += 1
        if solution.support.size == 0:
            failures += 1
        checked += 1
    _report(f"7 witness-round-trip ({checked} dependent sets)", failures == 0 and checked > 0)
