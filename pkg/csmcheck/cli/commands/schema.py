import argparse
import json

from ...models.report import RunReport


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("schema", help="Print the JSON schema of command reports")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> str:
    return json.dumps(RunReport.model_json_schema(), indent=2)
