import hashlib
import json
from typing import Any, Dict, List, Sequence

from ..models.report import CheckStatus, RunReport
from ..models.ring import BasisKey, GradedClass
from ..models.tables import CellTable
from ..services import ring_service


def inputs_digest(inputs: Any) -> str:
    """SHA-256 of the canonical JSON of the parsed inputs."""
    canonical = json.dumps(inputs, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def class_data(x: GradedClass) -> Dict[str, Any]:
    """A class as serialized pairs plus its printed form."""
    return {"pairs": [[index, value] for index, value in ring_service.to_pairs(x)], "text": str(x)}


def table_data(table: CellTable) -> Dict[str, Any]:
    """Rows are listed cells, columns every basis class, both in canonical order."""
    ring = table.ring
    return {
        "kind": table.kind.value,
        "basis": [ring.label(key) for key in ring.basis],
        "rows": {ring.label(cell): [str(v) for v in table.rows[cell].dense()] for cell in table.cells()},
    }


def keyed_table_data(ring_labels: Sequence[str], rows: Dict[str, List[str]]) -> Dict[str, Any]:
    return {"basis": list(ring_labels), "rows": rows}


def dual_table_data(table: CellTable, dual_rows: Dict[BasisKey, Dict[BasisKey, int]]) -> Dict[str, Any]:
    ring = table.ring
    cells = [key for key in ring.basis if key in dual_rows]
    return keyed_table_data(
        [ring.label(key) for key in ring.basis],
        {ring.label(cell): [str(dual_rows[cell].get(key, 0)) for key in ring.basis] for cell in cells},
    )


def render_json(report: RunReport) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2, ensure_ascii=False)


def _grid(basis: Sequence[str], rows: Dict[str, Sequence[str]]) -> List[str]:
    row_labels = list(rows)
    label_width = max([len(label) for label in row_labels] + [0])
    widths = [
        max([len(col)] + [len(str(rows[label][i])) for label in row_labels]) for i, col in enumerate(basis)
    ]
    lines = [" " * label_width + "  " + " ".join(col.rjust(w) for col, w in zip(basis, widths))]
    for label in row_labels:
        cells = " ".join(str(v).rjust(w) for v, w in zip(rows[label], widths))
        lines.append(label.rjust(label_width) + "  " + cells)
    return lines


def _render_value(key: str, value: Any, lines: List[str]) -> None:
    if isinstance(value, dict) and "basis" in value and "rows" in value:
        lines.append(f"{key}:")
        lines.extend("  " + line for line in _grid(value["basis"], value["rows"]))
    elif isinstance(value, dict) and "text" in value and "pairs" in value:
        lines.append(f"{key}: {value['text']}")
    elif isinstance(value, dict):
        lines.append(f"{key}:")
        for inner_key, inner in value.items():
            _render_value(f"  {inner_key}", inner, lines)
    else:
        text = value if isinstance(value, str) else json.dumps(value, ensure_ascii=False)
        lines.append(f"{key}: {text}")


_STATUS_MARK = {
    CheckStatus.PASSED: "PASS",
    CheckStatus.FAILED: "FAIL",
    CheckStatus.SKIPPED: "SKIP",
    CheckStatus.OBSERVED: "NOTE",
}


def render_table(report: RunReport) -> str:
    lines = [f"command: {report.command}", f"inputs digest: {report.inputs_digest}"]
    for key, value in report.data.items():
        _render_value(key, value, lines)
    lines.append("checks:")
    for check in report.checks:
        detail = ""
        if check.status == CheckStatus.OBSERVED:
            detail = f" = {str(check.passed).lower()}"
        if check.message:
            detail += f" ({check.message})"
        lines.append(f"  {_STATUS_MARK[check.status]} {check.name}{detail}")
        if check.failed and check.witness:
            lines.append(f"       witness: {json.dumps(check.witness, ensure_ascii=False)}")
    lines.append(f"exit status: {report.exit_status}")
    return "\n".join(lines)


def render(report: RunReport, output: str) -> str:
    return render_json(report) if output == "json" else render_table(report)
