import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csmcheck.core.exceptions import ModelMismatchError, RangeError
from csmcheck.models.report import CheckStatus
from csmcheck.models.ring import GradedClass, RingModel
from csmcheck.models.tables import CellTable, TableKind
from csmcheck.services import cell_classes_service, ingest_service, ring_service

TABLE_RINGS = [RingModel.projective(3), RingModel.grassmannian(2, 4), RingModel.grassmannian(2, 5)]


@st.composite
def unitriangular_tables(draw, kind):
    """Rows [X(u)] plus random integers on the classes inside X(u)."""
    ring = draw(st.sampled_from(TABLE_RINGS))
    rows = {}
    for u in ring.basis:
        coeffs = {u: 1}
        for w in ring.basis:
            if w != u and ring.in_closure(w, u):
                coeffs[w] = draw(st.integers(-50, 50))
        rows[u] = GradedClass.build(ring, coeffs)
    return CellTable(ring=ring, kind=kind, rows=rows)


def statuses(checks):
    return {check.name: check.status for check in checks}


def mutate(table, cell, cls_key, delta):
    rows = dict(table.rows)
    row = dict(rows[cell].coeffs)
    row[cls_key] = row.get(cls_key, 0) + delta
    rows[cell] = GradedClass.build(table.ring, row)
    return table.with_rows(table.kind, rows)


def test_ssm_of_the_big_cell_of_p2():
    p2 = RingModel.projective(2)

    ssm = cell_classes_service.ssm_cell_projective(2, 2)

    assert ssm == ring_service.from_polynomial(p2, [1, -1, 1])
    assert str(ssm) == "[P^2] - [P^1] + [pt]"


def test_csm_of_cells_of_p2():
    p2 = RingModel.projective(2)

    assert cell_classes_service.csm_cell_projective(0, 2) == ring_service.point_class(p2)
    assert cell_classes_service.csm_cell_projective(1, 2) == ring_service.from_polynomial(p2, [0, 1, 1])
    assert cell_classes_service.csm_cell_projective(2, 2) == ring_service.from_polynomial(p2, [1, 2, 1])


def test_projective_cell_out_of_range():
    with pytest.raises(RangeError):
        cell_classes_service.csm_cell_projective(3, 2)
    with pytest.raises(RangeError):
        cell_classes_service.cells_pn_tables(-1)


@pytest.mark.parametrize("n", range(0, 11))
def test_cells_pn_checks_pass(n):
    csm, ssm = cell_classes_service.cells_pn_tables(n)

    checks = cell_classes_service.standard_checks(ssm)

    assert not [check.name for check in checks if check.failed]
    assert csm.is_complete and ssm.is_complete
    # C^j has Euler characteristic 1
    assert all(ring_service.degree_of(csm.rows[cell]) == 1 for cell in csm.cells())


def test_gr25_fixture_passes_every_check(gr25_table):
    checks = cell_classes_service.standard_checks(gr25_table)

    assert all(status == CheckStatus.PASSED for status in statuses(checks).values())


def test_gr25_known_entries(gr25_table):
    assert gr25_table.entry((1,), ()) == -4
    assert gr25_table.entry((3, 3), (2, 1)) == -2
    assert gr25_table.entry((3, 3), ()) == 1
    assert gr25_table.row(()) == ring_service.point_class(gr25_table.ring)


def test_gr25_line_cell_matches_tangent_computation(gr25_table):
    # X(1) is a line; s_SM(C) = c(TX)^{-1} (c(TP^1) cap [P^1] - [pt])
    ring = gr25_table.ring
    line = ring_service.schubert_class(ring, (1,))
    csm = ring_service.add(line, ring_service.point_class(ring))
    inverse = ring_service.invert_unit(cell_classes_service.tangent_class(ring))

    assert gr25_table.row((1,)) == ring_service.multiply(inverse, csm)


def test_gr26_printed_row(fixture_repo):
    table, metadata = ingest_service.table_from_fixture(fixture_repo.get_fixture("paper-31"))

    checks = statuses(cell_classes_service.standard_checks(table))

    assert metadata == {"calibrated": False}
    assert table.cells() == [(3, 1)]
    assert checks["alternation"] == CheckStatus.PASSED
    assert checks["unitriangularity"] == CheckStatus.PASSED
    assert checks["top_degree"] == CheckStatus.PASSED
    assert checks["point_row"] == CheckStatus.SKIPPED
    assert checks["partition_of_unity_ssm"] == CheckStatus.SKIPPED


def test_sign_mutation_is_caught(gr25_table):
    broken = mutate(gr25_table, (3, 3), (2, 1), 4)

    outcome = cell_classes_service.alternation_check(broken)

    assert outcome.failed
    assert {"cell": "(3,3)", "class": "(2,1)", "coefficient": "2", "gap": "3"} in outcome.witness


def test_containment_mutation_is_caught(gr25_table):
    broken = mutate(gr25_table, (2, 2), (3,), 1)

    outcome = cell_classes_service.unitriangularity_check(broken)

    assert outcome.failed
    assert outcome.witness == [{"cell": "(2,2)", "class": "(3)", "coefficient": "1"}]


def test_partition_of_unity_sees_single_change(gr25_table):
    broken = mutate(gr25_table, (2, 1), (1,), 2)

    assert cell_classes_service.partition_of_unity_check(broken).failed
    assert not cell_classes_service.alternation_check(broken).failed


def test_top_degree_mutation_is_caught(gr25_table):
    broken = mutate(gr25_table, (2, 1), (2, 1), 1)

    assert cell_classes_service.top_degree_check(broken).failed


def test_csm_ssm_round_trip(gr25_table):
    csm = cell_classes_service.csm_from_ssm(gr25_table)

    assert cell_classes_service.ssm_from_csm(csm).rows == gr25_table.rows
    assert not cell_classes_service.partition_of_unity_check(csm).failed


def test_conversions_check_kind(gr25_table):
    with pytest.raises(ModelMismatchError):
        cell_classes_service.ssm_from_csm(gr25_table)


def test_dual_indexing_is_an_involution(gr25_table):
    ring = gr25_table.ring
    rows = {cell: dict(gr25_table.rows[cell].coeffs) for cell in gr25_table.cells()}

    dual = cell_classes_service.dualize_rows(rows, ring.rectangle)

    assert cell_classes_service.dualize_rows(dual, ring.rectangle) == rows
    assert cell_classes_service.fr_stable_compare(gr25_table) == dual
    # the point cell becomes the codimension-0 index
    assert dual[(3, 3)] == {(3, 3): 1}


def test_dual_indexing_needs_grassmannian():
    _, ssm = cell_classes_service.cells_pn_tables(2)

    with pytest.raises(ModelMismatchError):
        cell_classes_service.fr_stable_compare(ssm)


@pytest.mark.parametrize("n", range(1, 7))
def test_lines_pipeline_agrees_with_projective_tables(n):
    _, transported = cell_classes_service.grassmannian_tables_generative(1, n + 1)

    independent = cell_classes_service.grassmannian_line_pipeline(n)

    assert transported.rows == independent.rows
    assert not [c.name for c in cell_classes_service.standard_checks(independent) if c.failed]


def test_generative_tables_only_for_lines():
    with pytest.raises(RangeError):
        cell_classes_service.grassmannian_tables_generative(2, 5)


def test_transport_rejects_grassmannian_classes(gr25):
    with pytest.raises(ModelMismatchError):
        cell_classes_service.transport_to_grassmannian(ring_service.unit(gr25))


def test_cell_table_rejects_foreign_rows(gr25, gr24):
    with pytest.raises(ValueError):
        CellTable(ring=gr25, kind=TableKind.SSM, rows={(): ring_service.point_class(gr24)})


@settings(max_examples=100, deadline=None)
@given(unitriangular_tables(TableKind.CSM))
def test_random_csm_tables_survive_the_round_trip(csm):
    ssm = cell_classes_service.ssm_from_csm(csm)

    assert ssm.kind == TableKind.SSM
    assert cell_classes_service.csm_from_ssm(ssm).rows == csm.rows


@settings(max_examples=100, deadline=None)
@given(unitriangular_tables(TableKind.SSM))
def test_random_ssm_tables_survive_the_round_trip(ssm):
    csm = cell_classes_service.csm_from_ssm(ssm)

    assert cell_classes_service.ssm_from_csm(csm).rows == ssm.rows
    # the tangent class is a unit with leading term [X]
    assert not cell_classes_service.unitriangularity_check(csm).failed
