"""
CSM and SSM classes of Schubert cells.

Cells of P^n are generated from c_*(1_{P^j}) = (1+h)^{j+1} cap [P^j]; Grassmannian
tables other than Gr(1, n) come from fixtures or files. Both kinds of table
go through the same checks.
"""

from math import comb
from typing import Dict, List, Mapping, Tuple

from loguru import logger

from ..core.exceptions import ModelMismatchError, RangeError
from ..models.partition import Rectangle, dual_in_rectangle
from ..models.report import CheckOutcome
from ..models.ring import BasisKey, GradedClass, RingModel
from ..models.tables import CellTable, TableKind
from . import ring_service
from .tangent_service import tangent_chern_class_grassmannian, tangent_class


def _projective_closure_class(ring: RingModel, j: int) -> GradedClass:
    """c(T P^j) cap [P^j], pushed forward to P^n."""
    tangent = ring_service.from_polynomial(ring, [comb(j + 1, c) for c in range(j + 2)])
    return ring_service.multiply(tangent, ring_service.projective_class(ring, j))


def csm_cell_projective(j: int, n: int) -> GradedClass:
    """c_SM of the cell C^j = P^j minus P^{j-1}, in P^n."""
    if not 0 <= j <= n:
        raise RangeError(f"cell C^{j} does not exist in P^{n}")
    ring = RingModel.projective(n)
    csm = _projective_closure_class(ring, j)
    if j > 0:
        csm = ring_service.subtract(csm, _projective_closure_class(ring, j - 1))
    return csm


def ssm_cell_projective(j: int, n: int) -> GradedClass:
    """s_SM(C^j, P^n) = c(T P^n)^{-1} cap c_SM(C^j)."""
    csm = csm_cell_projective(j, n)
    return ring_service.multiply(ring_service.invert_unit(tangent_class(csm.ring)), csm)


def cell_key_projective(ring: RingModel, j: int) -> BasisKey:
    """Key of the closure [P^j] of the cell C^j."""
    return ring.n - j


def cells_pn_tables(n: int) -> Tuple[CellTable, CellTable]:
    """CSM and SSM tables of every cell of P^n."""
    if n < 0:
        raise RangeError(f"P^{n} does not exist")
    ring = RingModel.projective(n)
    inverse = ring_service.invert_unit(tangent_class(ring))
    csm_rows = {}
    ssm_rows = {}
    for j in range(n + 1):
        csm = csm_cell_projective(j, n)
        csm_rows[cell_key_projective(ring, j)] = csm
        ssm_rows[cell_key_projective(ring, j)] = ring_service.multiply(inverse, csm)
    logger.debug(f"Generated cell tables for P^{n}")
    return (
        CellTable(ring=ring, kind=TableKind.CSM, rows=csm_rows, provenance="generated"),
        CellTable(ring=ring, kind=TableKind.SSM, rows=ssm_rows, provenance="generated"),
    )


# Gr(1, n+1) = P^n

def _line_partition(d: int) -> Tuple[int, ...]:
    return (d,) if d > 0 else ()


def transport_to_grassmannian(x: GradedClass) -> GradedClass:
    """Move a class of P^n to Gr(1, n+1), sending [P^d] to [X((d))]."""
    if not x.ring.is_projective or x.ring.n < 1:
        raise ModelMismatchError("only classes of P^n with n >= 1 transport to Gr(1, n+1)")
    target = RingModel.grassmannian(1, x.ring.n + 1)
    return GradedClass.build(
        target, {_line_partition(x.ring.dim_of(key)): c for key, c in x.coeffs.items()}
    )


def grassmannian_tables_generative(k: int, n: int) -> Tuple[CellTable, CellTable]:
    """
    CSM and SSM tables of Gr(k, n) computed without fixtures.

    Only k = 1 is generative: the projective formulas transported to the
    partition basis, the cell (j) corresponding to C^j.
    """
    if k != 1:
        raise RangeError(f"Gr({k},{n}) tables are not generated; supply a fixture or file")
    if n < 2:
        raise RangeError(f"Gr(1,{n}) requires n >= 2")
    csm_pn, ssm_pn = cells_pn_tables(n - 1)
    ring = RingModel.grassmannian(1, n)

    def transport(table: CellTable) -> CellTable:
        rows = {
            _line_partition(table.ring.dim_of(cell)): transport_to_grassmannian(cls_)
            for cell, cls_ in table.rows.items()
        }
        return CellTable(ring=ring, kind=table.kind, rows=rows, provenance="generated")

    return transport(csm_pn), transport(ssm_pn)


def grassmannian_line_pipeline(n: int) -> CellTable:
    """
    SSM table of Gr(1, n+1) computed inside the Grassmannian ring.

    Uses sigma_1 for h, the LR product, and the Schur expansion of the
    tangent class, so it is independent of the projective formulas.
    """
    ring = RingModel.grassmannian(1, n + 1)
    h = ring_service.schur_class(ring, (1,))
    one_plus_h = ring_service.add(ring_service.unit(ring), h)
    inverse = ring_service.invert_unit(tangent_chern_class_grassmannian(1, n + 1))

    def closure_class(j: int) -> GradedClass:
        schubert = ring_service.schubert_class(ring, _line_partition(j))
        return ring_service.multiply(ring_service.power(one_plus_h, j + 1), schubert)

    rows = {}
    for j in range(n + 1):
        csm = closure_class(j)
        if j > 0:
            csm = ring_service.subtract(csm, closure_class(j - 1))
        rows[_line_partition(j)] = ring_service.multiply(inverse, csm)
    return CellTable(ring=ring, kind=TableKind.SSM, rows=rows, provenance="generated")


# Conversions

def ssm_from_csm(csm: CellTable) -> CellTable:
    if csm.kind != TableKind.CSM:
        raise ModelMismatchError("expected a CSM table")
    inverse = ring_service.invert_unit(tangent_class(csm.ring))
    rows = {cell: ring_service.multiply(inverse, cls_) for cell, cls_ in csm.rows.items()}
    return csm.with_rows(TableKind.SSM, rows)


def csm_from_ssm(ssm: CellTable) -> CellTable:
    if ssm.kind != TableKind.SSM:
        raise ModelMismatchError("expected an SSM table")
    tangent = tangent_class(ssm.ring)
    rows = {cell: ring_service.multiply(tangent, cls_) for cell, cls_ in ssm.rows.items()}
    return ssm.with_rows(TableKind.CSM, rows)


# Checks

def _dim_gap(ring: RingModel, cell: BasisKey, w: BasisKey) -> int:
    return ring.dim_of(cell) - ring.dim_of(w)


def alternation_violations(ssm: CellTable) -> List[Dict[str, str]]:
    ring = ssm.ring
    violations = []
    for cell in ssm.cells():
        for w, a in ssm.rows[cell].coeffs.items():
            gap = _dim_gap(ring, cell, w)
            if (-1) ** gap * a < 0:
                violations.append(
                    {"cell": ring.label(cell), "class": ring.label(w), "coefficient": str(a), "gap": str(gap)}
                )
    return violations


def alternation_check(ssm: CellTable) -> CheckOutcome:
    """(-1)^{dim u - dim w} a(w; u) >= 0 for every listed cell u and class w."""
    violations = alternation_violations(ssm)
    if violations:
        logger.warning(f"{len(violations)} sign alternation violations in {ssm.ring.describe()}")
    return CheckOutcome.expect("alternation", not violations, violations)


def unitriangularity_check(table: CellTable) -> CheckOutcome:
    """Row u is supported on classes in the closure of u, with coefficient 1 on u."""
    ring = table.ring
    witnesses = []
    for cell in table.cells():
        row = table.rows[cell]
        if row.coefficient(cell) != 1:
            witnesses.append(
                {"cell": ring.label(cell), "class": ring.label(cell), "coefficient": str(row.coefficient(cell))}
            )
        for w, a in row.coeffs.items():
            if not ring.in_closure(w, cell):
                witnesses.append({"cell": ring.label(cell), "class": ring.label(w), "coefficient": str(a)})
    return CheckOutcome.expect("unitriangularity", not witnesses, witnesses)


def top_degree_check(table: CellTable) -> CheckOutcome:
    """The only term of top dimension in row u is [X(u)] with coefficient 1."""
    ring = table.ring
    witnesses = []
    for cell in table.cells():
        row = table.rows[cell]
        top = ring_service.homogeneous_component(row, ring.dim_of(cell))
        higher = row.top_dimension() is not None and row.top_dimension() > ring.dim_of(cell)
        if higher or top != ring_service.basis_class(ring, cell):
            witnesses.append({"cell": ring.label(cell), "top": ring_service.to_pairs(top)})
    return CheckOutcome.expect("top_degree", not witnesses, witnesses)


def point_row_check(table: CellTable) -> CheckOutcome:
    ring = table.ring
    if ring.point_key not in table.rows:
        return CheckOutcome.skip("point_row", "point cell not listed")
    row = table.rows[ring.point_key]
    expected = ring_service.point_class(ring)
    return CheckOutcome.expect(
        "point_row", row == expected, {"row": ring_service.to_pairs(row)} if row != expected else None
    )


def partition_of_unity_check(table: CellTable) -> CheckOutcome:
    """
    The cells cover X: CSM rows sum to c(TX) cap [X], SSM rows to [X].
    """
    if not table.is_complete:
        return CheckOutcome.skip(f"partition_of_unity_{table.kind.value}", "table lists only some cells")
    ring = table.ring
    total = ring_service.total(table.rows.values(), ring)
    expected = tangent_class(ring) if table.kind == TableKind.CSM else ring_service.unit(ring)
    witness = None
    if total != expected:
        witness = {
            "sum": ring_service.to_pairs(total),
            "expected": ring_service.to_pairs(expected),
        }
    return CheckOutcome.expect(f"partition_of_unity_{table.kind.value}", total == expected, witness)


def round_trip_check(table: CellTable) -> CheckOutcome:
    if table.kind == TableKind.SSM:
        back = ssm_from_csm(csm_from_ssm(table))
    else:
        back = csm_from_ssm(ssm_from_csm(table))
    differing = [table.ring.label(cell) for cell in table.cells() if back.rows[cell] != table.rows[cell]]
    return CheckOutcome.expect("round_trip", not differing, differing or None)


def standard_checks(ssm: CellTable) -> List[CheckOutcome]:
    """Every check that applies to an SSM table, in report order."""
    return [
        unitriangularity_check(ssm),
        top_degree_check(ssm),
        point_row_check(ssm),
        alternation_check(ssm),
        partition_of_unity_check(ssm),
        partition_of_unity_check(csm_from_ssm(ssm)),
        round_trip_check(ssm),
    ]


# Duality

def dualize_rows(
    rows: Mapping[Tuple[int, ...], Mapping[Tuple[int, ...], int]], rect: Rectangle
) -> Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]]:
    """Reindex rows and columns by lam -> lam^v in `rect`; an involution."""
    return {
        dual_in_rectangle(cell, rect): {dual_in_rectangle(w, rect): a for w, a in row.items()}
        for cell, row in rows.items()
    }


def fr_stable_compare(ssm: CellTable) -> Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]]:
    """
    The table in codimension indexing, as used for stable-limit comparisons.

    Both cells and classes are replaced by their duals; partitions outside
    the rectangle never occur, which is the truncation of the stable limit.
    """
    ring = ssm.ring
    if ring.is_projective:
        raise ModelMismatchError("dual indexing applies to Grassmannian tables")
    rows = {cell: dict(ssm.rows[cell].coeffs) for cell in ssm.cells()}
    return dualize_rows(rows, ring.rectangle)
