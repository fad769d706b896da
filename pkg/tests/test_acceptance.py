"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run on its own with ``pytest tests/test_acceptance.py -v -s`` or
``python3 tests/test_acceptance.py``.  The long sweep (criterion 8) only runs
when ``REGIONUM_LONG=1``.
"""

from __future__ import annotations

import itertools
import os
import sys
import time
from contextlib import contextmanager

import numpy as np
import pytest

from regionum.diagram import (
    apply_region_changes,
    connected_sum,
    crossing_change,
    gen_torus,
    is_reduced,
    mirror,
)
from regionum.goeritz import goeritz_matrices, mg2, smith_normal_form
from regionum.regions import checkerboard_shade, incidence_system, theorem1_reduce
from regionum.search import mri_of_diagram

from conftest import CHECKERBOARD, CORPUS, GRANNY_GOERITZ, GRANNY_PRE_GOERITZ, WORKED, worked
from oracles import bareiss_det, brute_mri_reg


@contextmanager
def criterion(capsys, label: str, budget: float):
    """Report PASS or FAIL for one criterion; the runtime budget is part of it."""
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed <= budget, f"took {elapsed:.1f} s, budget {budget} s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'}  {label}  ({elapsed:.2f} s)")


def same_up_to_permutation(a, b) -> bool:
    n = len(a)
    return len(b) == n and any(
        all(a[p[i]][p[j]] == b[i][j] for i in range(n) for j in range(n))
        for p in itertools.permutations(range(n))
    )


def test_criterion_1_goeritz_worked_example(capsys):
    with criterion(capsys, "1 granny Goeritz matrices, SNF (1,1,3,3), mg2 2, det 9", 1.0):
        g = goeritz_matrices(worked("3_1#3_1"))
        assert same_up_to_permutation(g.pre_goeritz, GRANNY_PRE_GOERITZ)
        assert same_up_to_permutation(g.goeritz, GRANNY_GOERITZ)
        assert g.smith.diagonal == [1, 1, 3, 3]
        assert g.mg2 == 2 and g.det == 9


def test_criterion_2_mri_values(capsys):
    with criterion(capsys, "2 mri(3_1)=2, mri(9_35)=9, mri(8_1)=5, reg(8_1)=7", 60.0):
        assert mri_of_diagram(worked("3_1_region_change")).mri == 2
        assert mri_of_diagram(worked("9_35_pretzel")).mri == 9
        r = mri_of_diagram(worked("8_1_heptagon"))
        assert (r.mri, r.reg) == (5, 7)


def test_criterion_3_coset_reduction(capsys):
    with criterion(capsys, "3 checkerboard {B1,B2,B3} -> {B4}, cost 12 -> 6, same diagram", 1.0):
        d = worked("6_3_checkerboard")
        cost = lambda ids: sum(d.regions[r].cost for r in ids)
        black3 = [CHECKERBOARD[k] for k in ("B1", "B2", "B3")]
        out = theorem1_reduce(d, black3)
        assert out == (CHECKERBOARD["B4"],)
        assert apply_region_changes(d, out) == apply_region_changes(d, black3)
        # the drawn unknotting sets also contain W3, which the reduction keeps
        full = black3 + [CHECKERBOARD["W3"]]
        out = theorem1_reduce(d, full)
        assert sorted(out) == sorted([CHECKERBOARD["B4"], CHECKERBOARD["W3"]])
        assert (cost(full), cost(out)) == (12, 6)
        assert apply_region_changes(d, out) == apply_region_changes(d, full)


def test_criterion_4_torus_family(capsys):
    with criterion(capsys, "4 mri(T(2,2k+1)) = 2, 2, {3,4}, 4 for k = 1..4", 300.0):
        got = [mri_of_diagram(gen_torus(k)).mri for k in (1, 2, 3, 4)]
        assert got[0] == 2 and got[1] == 2 and got[2] in (3, 4) and got[3] == 4


def _generated_family():
    t1, t2 = gen_torus(1), gen_torus(2)
    out = [gen_torus(k) for k in (1, 2, 3, 4)]
    out += [connected_sum(t1, t1), connected_sum(t1, mirror(t1)), connected_sum(t1, t2)]
    out += [connected_sum(t1, CORPUS[1].diagram)]
    out += [r.diagram for r in WORKED.values()]
    return out


def test_criterion_5_theorem_suites(capsys):
    with criterion(capsys, "5 theorem suites (a)-(g) on the corpus and generated families", 1800.0):
        items = [(r.name, r.diagram, r.unknotting_number) for r in CORPUS]
        items += [(d.name or "generated", d, None) for d in _generated_family()]
        violations = []
        for name, d, u in items:
            m = mri_of_diagram(d).mri
            g = mg2(d)
            c = d.crossing_count
            if not m <= 2 * c:
                violations.append((name, "a"))
            if not g < m:
                violations.append((name, "b"))
            if u is not None and not u <= m:
                violations.append((name, "c"))
            if not m >= 2:
                violations.append((name, "d"))
            if any(abs(g - mg2(crossing_change(d, x))) > 1 for x in range(c)):
                violations.append((name, "e"))
            if is_reduced(d):
                if apply_region_changes(d, checkerboard_shade(d).black()) != d:
                    violations.append((name, "f"))
                if len(incidence_system(d).kernel_basis) != 2:
                    violations.append((name, "g"))
        assert len(CORPUS) == 84
        assert violations == []


def test_criterion_6_brute_force_equivalence(capsys):
    with criterion(capsys, "6 pruned = unpruned = brute force on <=7-crossing diagrams", 300.0):
        small = [r.diagram for r in CORPUS if r.diagram.crossing_count <= 7]
        assert len(small) == 14
        for d in small:
            a, b = mri_of_diagram(d), mri_of_diagram(d, prune=False)
            assert (a.mri, a.reg) == (b.mri, b.reg) == brute_mri_reg(d)


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def test_criterion_7_snf_soundness(capsys):
    with criterion(capsys, "7 SNF on 1000 random integer matrices", 10.0):
        rng = np.random.default_rng(20260101)
        for _ in range(1000):
            rows, cols = (int(x) for x in rng.integers(1, 7, size=2))
            m = rng.integers(-9, 10, size=(rows, cols)).tolist()
            s = smith_normal_form(m)
            diag = [[s.diagonal[i] if i == j else 0 for j in range(cols)] for i in range(rows)]
            assert _matmul(_matmul(s.left, m), s.right) == diag
            assert abs(bareiss_det(s.left)) == 1 and abs(bareiss_det(s.right)) == 1
            for a, b in zip(s.diagonal, s.diagonal[1:]):
                assert (b == 0) if a == 0 else (b % a == 0)


@pytest.mark.slow
@pytest.mark.skipif(os.environ.get("REGIONUM_LONG") != "1", reason="long sweep; set REGIONUM_LONG=1")
def test_criterion_8_long_sweep(capsys):
    # informational: which bundled diagrams have mri(D) >= c(D)
    with criterion(capsys, "8 (optional) diagrams with mri >= c on the bundled table", 3600.0):
        heavy = []
        for r in CORPUS:
            m = mri_of_diagram(r.diagram).mri
            if m >= r.diagram.crossing_count:
                heavy.append((r.name, m))
        with capsys.disabled():
            print(f"  mri >= c on {len(heavy)} of {len(CORPUS)} diagrams: {heavy}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
