import argparse

from loguru import logger

from ...data_access.file_repository import FileRepository
from ...data_access.fixture_repository import FixtureRepository
from ...models.report import RunReport
from ...services import arrangement_service, ingest_service
from ..render import inputs_digest


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("arrangement", help="Classes of a projective hyperplane arrangement complement")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", help="JSON arrangement: n and a list of hyperplane coefficient rows")
    source.add_argument("--sample", help="Name of an embedded sample arrangement")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> RunReport:
    if args.file:
        document = FileRepository().load_arrangement(args.file)
    else:
        document = FixtureRepository().get_sample_arrangement(args.sample)
    arrangement = ingest_service.arrangement_from_file(document)
    logger.info(f"Arrangement of {arrangement.size} hyperplanes in P^{arrangement.n}")

    data, checks = arrangement_service.effectivity_report(arrangement)
    return RunReport(
        command="arrangement",
        arguments={"file": args.file, "sample": args.sample},
        inputs_digest=inputs_digest(document.model_dump(mode="json")),
        checks=checks,
        data=data,
    )
