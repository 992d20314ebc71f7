"""
Orientation calibration of printed SSM matrices.

A printed square matrix with a printed partition index admits four
readings: rows may be cells or classes, and the printed partitions may
index dimension or codimension (in which case each label stands for its
dual). Each reading is turned into an SSM table and scored; exactly one
must survive.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..core.exceptions import CalibrationError
from ..models.files import Orientation, OrientationIndex, OrientationRows
from ..models.partition import dual_in_rectangle
from ..models.ring import GradedClass, RingModel
from ..models.tables import CellTable, TableKind
from .cell_classes_service import (
    alternation_check,
    partition_of_unity_check,
    point_row_check,
    unitriangularity_check,
)

ALL_ORIENTATIONS: Tuple[Orientation, ...] = tuple(
    Orientation(rows=rows, index=index) for rows in OrientationRows for index in OrientationIndex
)


def read_table(
    ring: RingModel,
    printed_index: Sequence[Tuple[int, ...]],
    matrix: Sequence[Sequence[int]],
    orientation: Orientation,
    provenance: Optional[str] = None,
) -> CellTable:
    """Interpret a printed matrix as an SSM table under one orientation."""
    size = len(printed_index)
    if size != len(ring.basis) or len(matrix) != size or any(len(row) != size for row in matrix):
        raise CalibrationError(
            f"printed matrix must be {len(ring.basis)}x{len(ring.basis)} for {ring.describe()}"
        )
    if orientation.index == OrientationIndex.DIMENSION:
        keys = [tuple(lam) for lam in printed_index]
    else:
        keys = [dual_in_rectangle(tuple(lam), ring.rectangle) for lam in printed_index]

    rows: Dict[Tuple[int, ...], Dict[Tuple[int, ...], int]] = {key: {} for key in keys}
    for i, printed_row in enumerate(matrix):
        for j, value in enumerate(printed_row):
            if orientation.rows == OrientationRows.CELLS:
                cell, cls_key = keys[i], keys[j]
            else:
                cell, cls_key = keys[j], keys[i]
            rows[cell][cls_key] = int(value)
    return CellTable(
        ring=ring,
        kind=TableKind.SSM,
        rows={cell: GradedClass.build(ring, coeffs) for cell, coeffs in rows.items()},
        provenance=provenance,
    )


def score_orientation(table: CellTable) -> Dict[str, bool]:
    return {
        "unitriangularity": not unitriangularity_check(table).failed,
        "point_row": not point_row_check(table).failed,
        "alternation": not alternation_check(table).failed,
        "partition_of_unity": not partition_of_unity_check(table).failed,
    }


def calibrate_orientation(
    ring: RingModel,
    printed_index: Sequence[Tuple[int, ...]],
    matrix: Sequence[Sequence[int]],
) -> Tuple[Orientation, List[Dict[str, object]]]:
    """
    Find the unique reading of a printed matrix that passes every criterion.

    Args:
        ring: the Grassmannian model the matrix belongs to
        printed_index: partitions labelling rows and columns, as printed
        matrix: the printed integer matrix

    Returns:
        The surviving orientation and the score sheet of all four readings

    Raises:
        CalibrationError: when no reading or more than one survives
    """
    sheet = []
    survivors = []
    for orientation in ALL_ORIENTATIONS:
        scores = score_orientation(read_table(ring, printed_index, matrix, orientation))
        sheet.append({"orientation": orientation.model_dump(mode="json"), "scores": scores})
        logger.debug(f"orientation {orientation.describe()}: {scores}")
        if all(scores.values()):
            survivors.append(orientation)
    if len(survivors) != 1:
        raise CalibrationError(
            f"{len(survivors)} readings of the printed {ring.describe()} matrix pass every criterion"
        )
    return survivors[0], sheet
