"""One test per acceptance criterion, each at its full stated scale.

Every check is exact (integer tables, rational bounds compared through floor),
so the pinned tolerance is zero mismatches.  Each test prints one PASS/FAIL
line; run with ``-s`` to see them.
"""

from __future__ import annotations

from edgeideal import acceptance

TOLERANCE = 0  # mismatches allowed per criterion


def _report(result: acceptance.CheckResult) -> None:
    print(result.line())
    for note in result.notes:
        print(f"    note: {note}")
    assert result.checked > 0, "criterion checked nothing"
    assert len(result.mismatches) <= TOLERANCE, result.mismatches[:5]


def test_01_ferrers_closed_form_and_rectangles_match_oracle():
    _report(acceptance.check_ferrers(max_cells=8, sample=10, sample_cells=12))


def test_02_linear_resolution_iff_chordal_complement_on_all_small_graphs():
    _report(acceptance.check_froberg())


def test_03_complement_chordal_formula_and_pdim_depth():
    _report(acceptance.check_complement_chordal(count=200, max_n=9))


def test_04_chordal_graphs_have_vertex_decomposable_independence_complex():
    _report(acceptance.check_chordal_vd(count=200, max_n=10, exhaustive_n=7))


def test_05_whiskered_graphs_and_the_negative_direction():
    _report(acceptance.check_whiskers(count=100, max_n=5, negative=100))


def test_06_ear_cycles():
    _report(acceptance.check_ears(range(3, 9)))


def test_07_golden_betti_tables():
    _report(acceptance.check_golden())


def test_08_generating_function_calculus():
    _report(acceptance.check_genfun(count=300, max_n=8, forests=200, forest_n=12))


def test_09_projective_dimension_bounds():
    _report(acceptance.check_bounds(count=200, max_n=10, component_n=9))


def test_10_low_skeleta_of_bounded_degree_graphs_are_vertex_decomposable():
    _report(acceptance.check_skeleton_vd(count=100, max_n=10))


def test_11_homology_engine_sanity():
    _report(acceptance.check_engine(count=500))


def test_12_determinism_across_workers_and_fold():
    _report(acceptance.check_determinism(worker_counts=(1, 4, 8)))
