import argparse
from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from ...core.exceptions import InputValidationError
from ...data_access.file_repository import FileRepository
from ...data_access.fixture_repository import FixtureRepository
from ...models.report import CheckOutcome, RunReport
from ...models.strat import ConstructibleFn, StratSpace
from ...services import constructible_service, ingest_service, ring_service
from ..render import class_data, inputs_digest


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("constructible", help="Characteristic cycles of constructible functions")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", help="JSON stratified poset with optional class_map and named functions")
    source.add_argument("--sample", help="Name of an embedded sample poset")
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--function", help="Name of a function defined in the poset file")
    target.add_argument("--behrend", help="Behrend function supports as Y:m,Y:m,...")
    parser.set_defaults(handler=run)


def parse_behrend_spec(spec: str) -> List[Tuple[str, int]]:
    """Parse `Y:m,Y:m` into (closure, multiplicity) pairs."""
    components = []
    for part in spec.split(","):
        name, sep, mult = part.strip().rpartition(":")
        if not sep or not name:
            raise InputValidationError(f"malformed Behrend component {part.strip()!r}; expected NAME:MULT")
        try:
            components.append((name, int(mult)))
        except ValueError:
            raise InputValidationError(f"multiplicity of {name} is not an integer: {mult!r}")
    return components


def class_map_consistency(space: StratSpace) -> Dict[str, Dict[str, str]]:
    """Closures whose Chern-Mather degree differs from chi(Y, Eu_Y)."""
    mismatches = {}
    for closure, cls_ in space.class_map.items():
        chi = sum(space.chi_c(s) * space.euler_value(closure, s) for s in space.below[closure])
        degree = ring_service.degree_of(cls_)
        if degree != chi:
            mismatches[closure] = {"degree": str(degree), "chi": str(chi)}
    return mismatches


def _select_function(
    args: argparse.Namespace, space: StratSpace, functions: Dict[str, ConstructibleFn]
) -> Tuple[ConstructibleFn, Optional[List[Tuple[str, int]]]]:
    if args.function is not None:
        if args.function not in functions:
            available = ", ".join(sorted(functions)) or "none"
            raise InputValidationError(f"unknown function {args.function!r}; available: {available}")
        return functions[args.function], None
    components = parse_behrend_spec(args.behrend)
    return constructible_service.behrend_function(space, components), components


def _class_checks(phi: ConstructibleFn, chi: int, data: Dict[str, Any]) -> List[CheckOutcome]:
    space = phi.space
    cc = constructible_service.to_cc_coefficients(phi)
    missing = sorted(y for y in cc.coeffs if y not in space.class_map)
    if space.ring is None or missing:
        reason = "no ambient model" if space.ring is None else f"no class data for {', '.join(missing)}"
        return [CheckOutcome.skip("degree_equals_euler_characteristic", reason)]

    csm = constructible_service.class_of(phi)
    data["csm"] = class_data(csm)
    data["ssm"] = class_data(constructible_service.ssm_of(phi))
    data["ssm_signed"] = class_data(constructible_service.signed_ssm_of(phi))

    mismatches = class_map_consistency(space)
    if mismatches:
        logger.warning(f"class map degrees disagree with Euler obstruction data: {sorted(mismatches)}")
        return [
            CheckOutcome.skip(
                "degree_equals_euler_characteristic",
                f"class map inconsistent with chi(Y, Eu_Y) at {', '.join(sorted(mismatches))}",
            )
        ]
    degree = ring_service.degree_of(csm)
    return [
        CheckOutcome.expect(
            "degree_equals_euler_characteristic",
            degree == chi,
            {"degree": str(degree), "euler_characteristic": str(chi)},
        )
    ]


def run(args: argparse.Namespace) -> RunReport:
    """
    Decompose a constructible function in the Euler obstruction basis and
    run the positivity checks on it.
    """
    if args.file:
        document = FileRepository().load_poset(args.file)
    else:
        document = FixtureRepository().get_sample_poset(args.sample)
    space = ingest_service.space_from_file(document)
    functions = ingest_service.functions_from_file(document, space)
    phi, components = _select_function(args, space, functions)
    logger.info(f"Constructible function on {len(space.names)} strata")

    cc = constructible_service.to_cc_coefficients(phi)
    effective = constructible_service.is_effective_cc(cc)
    chi = constructible_service.euler_characteristic(phi)
    data: Dict[str, Any] = {
        "values": {name: str(phi.value(name)) for name in space.names},
        "cc_coefficients": {name: str(cc.coefficient(name)) for name in space.names},
        "effective": effective,
        "euler_characteristic": str(chi),
    }
    checks = []
    if cc.is_empty():
        checks.append(CheckOutcome.info("cc_nonzero", False, message="empty cycle, not effective"))
    if components is not None:
        expected = {name: mult for name, mult in components}
        checks.append(
            CheckOutcome.expect(
                "behrend_cc_coefficients",
                dict(cc.coeffs) == expected,
                {name: str(a) for name, a in cc.coeffs.items()},
            )
        )
    rebuilt = constructible_service.reconstruct(cc)
    checks.append(CheckOutcome.expect("reconstruction", rebuilt.values == phi.values))
    checks.extend(_class_checks(phi, chi, data))
    checks.extend(constructible_service.positivity_report(phi))

    arguments = {"file": args.file, "sample": args.sample, "function": args.function, "behrend": args.behrend}
    digest_inputs = {
        "poset": document.model_dump(mode="json"),
        "function": args.function,
        "behrend": [[name, mult] for name, mult in components] if components else None,
    }
    return RunReport(
        command="constructible",
        arguments=arguments,
        inputs_digest=inputs_digest(digest_inputs),
        checks=checks,
        data=data,
    )
