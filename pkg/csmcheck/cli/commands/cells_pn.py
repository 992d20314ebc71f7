import argparse

from loguru import logger

from ...core.config import settings
from ...core.exceptions import RangeError
from ...models.report import RunReport
from ...services import cell_classes_service
from ...services.tangent_service import tangent_class_projective
from ..render import class_data, inputs_digest, table_data


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("cells-pn", help="CSM and SSM classes of the cells of P^n")
    parser.add_argument("--n", type=int, required=True)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> RunReport:
    if not 0 <= args.n <= settings.MAX_PROJECTIVE_DIM:
        raise RangeError(f"n must lie in [0, {settings.MAX_PROJECTIVE_DIM}], got {args.n}")
    logger.info(f"Generating cell tables of P^{args.n}")
    csm, ssm = cell_classes_service.cells_pn_tables(args.n)
    return RunReport(
        command="cells-pn",
        arguments={"n": args.n},
        inputs_digest=inputs_digest({"n": args.n}),
        checks=cell_classes_service.standard_checks(ssm),
        data={
            "model": ssm.ring.describe(),
            "tangent_class": class_data(tangent_class_projective(args.n)),
            "csm_table": table_data(csm),
            "ssm_table": table_data(ssm),
        },
    )
