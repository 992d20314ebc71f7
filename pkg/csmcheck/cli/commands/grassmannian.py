import argparse
from typing import Any, Dict, Tuple

from loguru import logger

from ...core.exceptions import InputValidationError, ModelMismatchError
from ...data_access.file_repository import FileRepository
from ...data_access.fixture_repository import FixtureRepository
from ...models.report import CheckOutcome, RunReport
from ...models.ring import RingModel
from ...models.tables import CellTable, TableKind
from ...services import cell_classes_service, ingest_service
from ...services.tangent_service import tangent_chern_class_grassmannian
from ..render import class_data, dual_table_data, inputs_digest, table_data

# Built-in source used when no --fixture or file is given
DEFAULT_FIXTURES = {(2, 5): "paper", (2, 6): "paper-31"}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("grassmannian", help="SSM tables of Schubert cells of Gr(k, n)")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--fixture", help="Built-in table: paper (Gr(2,5)) or paper-31 (Gr(2,6))")
    source.add_argument("--csm-file", help="JSON table of CSM classes of cells")
    source.add_argument("--ssm-file", help="JSON table of SSM classes of cells")
    parser.set_defaults(handler=run)


def _load_source(args: argparse.Namespace, ring: RingModel) -> Tuple[CellTable, Dict[str, Any], Any]:
    """Resolve the table source; returns the SSM table, source metadata and digestible inputs."""
    fixture_name = args.fixture
    if fixture_name is None and args.csm_file is None and args.ssm_file is None:
        if ring.k == 1:
            _, ssm = cell_classes_service.grassmannian_tables_generative(ring.k, ring.n)
            return ssm, {"source": "generative"}, None
        fixture_name = DEFAULT_FIXTURES.get((ring.k, ring.n))
        if fixture_name is None:
            raise InputValidationError(
                f"no built-in table for {ring.describe()}; pass --csm-file or --ssm-file"
            )

    if fixture_name is not None:
        fixture = FixtureRepository().get_fixture(fixture_name)
        if fixture.model.to_ring() != ring:
            raise ModelMismatchError(
                f"fixture {fixture_name} describes {fixture.model.to_ring().describe()}, not {ring.describe()}"
            )
        table, calibration = ingest_service.table_from_fixture(fixture)
        meta = {"source": f"fixture:{fixture_name}", "provenance": fixture.provenance, "calibration": calibration}
        return table, meta, fixture.model_dump(mode="json", by_alias=True)

    path = args.csm_file or args.ssm_file
    kind = TableKind.CSM if args.csm_file else TableKind.SSM
    document = FileRepository().load_table(path)
    table = ingest_service.table_from_file(document, kind)
    if table.ring != ring:
        raise ModelMismatchError(f"{path} describes {table.ring.describe()}, not {ring.describe()}")
    meta = {"source": f"{kind.value}-file"}
    if kind == TableKind.CSM:
        table = cell_classes_service.ssm_from_csm(table)
    return table, meta, document.model_dump(mode="json")


def run(args: argparse.Namespace) -> RunReport:
    """
    Load or generate the SSM table of Gr(k, n) and run every cell-class check.
    """
    try:
        ring = RingModel.grassmannian(args.k, args.n)
    except ValueError:
        raise InputValidationError(f"invalid model: Gr({args.k},{args.n}) requires 1 <= k < n")
    ssm, meta, inputs = _load_source(args, ring)
    logger.info(f"Checking {len(ssm.rows)} cells of {ring.describe()} from {meta['source']}")

    checks = cell_classes_service.standard_checks(ssm)
    if ring.k == 1:
        independent = cell_classes_service.grassmannian_line_pipeline(ring.n - 1)
        differing = [ring.label(c) for c in ssm.cells() if independent.rows.get(c) != ssm.rows[c]]
        checks.append(CheckOutcome.expect("grassmannian_pipeline", not differing, differing or None))

    csm = cell_classes_service.csm_from_ssm(ssm)
    data = {
        "model": ring.describe(),
        **meta,
        "tangent_class": class_data(tangent_chern_class_grassmannian(ring.k, ring.n)),
        "ssm_table": table_data(ssm),
        "csm_table": table_data(csm),
        "dual_table": dual_table_data(ssm, cell_classes_service.fr_stable_compare(ssm)),
    }
    arguments = {
        "k": args.k,
        "n": args.n,
        "fixture": args.fixture,
        "csm_file": args.csm_file,
        "ssm_file": args.ssm_file,
    }
    return RunReport(
        command="grassmannian",
        arguments=arguments,
        inputs_digest=inputs_digest({"model": [ring.k, ring.n], "source": meta["source"], "inputs": inputs}),
        checks=checks,
        data=data,
    )
