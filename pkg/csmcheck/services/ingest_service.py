"""Conversion of parsed input files into domain objects."""

from typing import Dict, Tuple

from loguru import logger
from pydantic import ValidationError

from ..core.exceptions import CalibrationError, FixtureError, InputValidationError
from ..models.arrangement import Arrangement
from ..models.files import ArrangementFile, FixtureFile, PosetFile, TableFile
from ..models.ring import GradedClass
from ..models.strat import ConstructibleFn, StratSpace, Stratum
from ..models.tables import CellTable, TableKind
from . import ring_service
from .calibration_service import calibrate_orientation, read_table


def arrangement_from_file(document: ArrangementFile) -> Arrangement:
    try:
        return Arrangement.from_rows(document.n, document.hyperplanes)
    except ValidationError as e:
        raise InputValidationError(f"invalid arrangement: {e.errors()[0]['msg']}")


def space_from_file(document: PosetFile) -> StratSpace:
    ring = document.ambient.to_ring() if document.ambient else None
    try:
        strata = [Stratum(name=e.name, dim=e.dim, chi_c=e.chi_c) for e in document.strata]
        class_map = {
            e.name: ring_service.from_dense(ring, e.class_map)
            for e in document.strata
            if e.class_map is not None
        }
        return StratSpace.from_covers(
            strata,
            {e.name: e.closure_of for e in document.strata},
            euler_rows={e.name: e.euler_table for e in document.strata if e.euler_table is not None},
            ring=ring,
            class_map=class_map,
        )
    except ValidationError as e:
        raise InputValidationError(f"invalid stratified space: {e.errors()[0]['msg']}")


def functions_from_file(document: PosetFile, space: StratSpace) -> Dict[str, ConstructibleFn]:
    """Named functions; unlisted strata take the value 0."""
    return {name: ConstructibleFn.from_partial(space, values) for name, values in document.functions.items()}


def table_from_file(document: TableFile, kind: TableKind) -> CellTable:
    ring = document.model.to_ring()
    keys = [tuple(lam) for lam in document.basis]
    rows = {}
    for cell, values in zip(keys, document.rows):
        rows[cell] = GradedClass.build(ring, dict(zip(keys, values)))
    return CellTable(ring=ring, kind=kind, rows=rows, provenance="file")


def table_from_fixture(fixture: FixtureFile) -> Tuple[CellTable, Dict[str, object]]:
    """
    Build the table a fixture describes.

    A printed matrix is calibrated first and must agree with the
    orientation recorded in the fixture.

    Returns:
        The table and calibration metadata for the report
    """
    ring = fixture.model.to_ring()
    if fixture.matrix is None:
        rows = {}
        for entry in fixture.rows:
            rows[tuple(entry.cell)] = GradedClass.build(
                ring, {tuple(term.schubert): term.value for term in entry.terms}
            )
        table = CellTable(ring=ring, kind=fixture.kind, rows=rows, provenance=fixture.provenance)
        return table, {"calibrated": False}

    index = [tuple(lam) for lam in fixture.printed_index]
    try:
        orientation, sheet = calibrate_orientation(ring, index, fixture.matrix)
    except CalibrationError as e:
        raise FixtureError(f"fixture {fixture.name}: {e}")
    if orientation != fixture.orientation:
        raise FixtureError(
            f"fixture {fixture.name} records {fixture.orientation.describe()} but calibration selects "
            f"{orientation.describe()}"
        )
    logger.info(f"Fixture {fixture.name} calibrated as {orientation.describe()}")
    table = read_table(ring, index, fixture.matrix, orientation, provenance=fixture.provenance)
    return table, {
        "calibrated": True,
        "orientation": orientation.model_dump(mode="json"),
        "candidates": sheet,
    }
