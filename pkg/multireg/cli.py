"""Command line front end for multireg."""
from __future__ import annotations

import argparse
import asyncio
import json
import logging
import sys
from collections.abc import Sequence
from typing import Optional

from .const import (
    CHECK_FAIL,
    CHECK_PASS,
    COORD_BOUND,
    EXIT_INPUT_ERROR,
    EXIT_NOT_GENERIC,
    EXIT_OK,
    EXIT_VERIFY_FAILED,
    MAX_COORD_BOUND,
    NAME,
    STARTUP_MESSAGE,
)
from .diagnostics import run_verification, scheme_summary
from .exceptions import (
    GenericityError,
    SchemeValidationError,
    UnsupportedShapeError,
    UsageError,
)
from .fat_points import random_scheme, require_generic_support
from .hilbert import HilbertTable
from .input_utils import (
    ValidateIntegerList,
    ValidateMultidegreeString,
    ValidateMultiplicityString,
    ValidateShapeString,
)
from .multigraded_ring import box_degrees
from .regularity import (
    acm_check_p1xp1,
    davis_geramita_bounds,
    p1xp1_generic_region,
    reg_region,
    region_from_resvector,
    res_reg_vector,
)
from .scheme_file import dumps_scheme, load_scheme, parse_field_string, resolve_field

_LOGGER = logging.getLogger(__name__)


def _parse_list(validator: ValidateIntegerList, flag: str) -> tuple[int, ...]:
    valid, error = validator.is_valid()
    if not valid:
        raise UsageError(f"Invalid {flag} {validator.list_str!r}: {error}")
    return validator.values


def _load_table(args) -> HilbertTable:
    scheme_file = load_scheme(args.file)
    field = resolve_field(scheme_file, args.field)
    return HilbertTable(scheme_file.scheme, field=field)


def _format_rows(values) -> list[str]:
    if values.ndim == 1:
        return [" ".join(str(int(v)) for v in values)]
    return [" ".join(str(int(v)) for v in row) for row in values]


def cmd_degree(args) -> int:
    """Print deg Z."""
    print(_load_table(args).degree)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    """Print the multigraded Hilbert function over a box."""
    table = _load_table(args)
    if args.box:
        box = _parse_list(ValidateMultidegreeString(args.box, table.k), "--box")
    else:
        box = (table.scheme.sigma,) * table.k
    if args.coarse is not None and args.coarse < 0:
        raise UsageError(f"--coarse {args.coarse} is negative")
    values = asyncio.run(table.async_fill(box))

    if args.csv:
        sys.stdout.write(table.to_csv(box))
    elif table.k <= 2:
        print("\n".join(_format_rows(values)))
    else:
        for d, value in zip(box_degrees(box), values.flat):
            print(",".join(map(str, d)), int(value))

    if args.coarse is not None:
        coarse = [table.coarse_hilbert(t) for t in range(args.coarse + 1)]
        print("coarse: " + ",".join(map(str, coarse)))
    return EXIT_OK


def cmd_region(args) -> int:
    """Print the corners of reg_B(Z)."""
    region = reg_region(_load_table(args))
    if args.render:
        print(region.render())
    else:
        print(json.dumps(region.as_dict(), separators=(",", ":")))
    return EXIT_OK


def cmd_resvector(args) -> int:
    """Print the resolution regularity vector."""
    print(res_reg_vector(_load_table(args)))
    return EXIT_OK


def cmd_bounds(args) -> int:
    """Print the closed-form regions, each tagged with its containment in reg_B(Z)."""
    table = _load_table(args)
    z = table.scheme
    if args.generic:
        require_generic_support(z, table.field)
    region = reg_region(table)

    first, second = davis_geramita_bounds(z, generic=args.generic)
    bounds = [("sigma_bound", first)]
    if second is not None:
        bounds.append(("generic_bound", second))
    if args.generic and z.shape.factors == (1, 1):
        bounds.append(("p1xp1_bound", p1xp1_generic_region(z.multiplicities)))
    vector = res_reg_vector(table)
    bounds.append(
        (
            "resvector_bound",
            region_from_resvector(vector.r, z.shape.dimension + 1, table.k),
        )
    )

    failed = False
    for name, bound in bounds:
        contained = bound.is_subset_of(region)
        failed = failed or not contained
        print(f"{name} {bound.render()} {CHECK_PASS if contained else CHECK_FAIL}")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_acm(args) -> int:
    """Print the first-difference ACM verdict."""
    print(acm_check_p1xp1(_load_table(args)))
    return EXIT_OK


def cmd_verify(args) -> int:
    """Run every applicable invariant and print PASS/FAIL lines."""
    table = _load_table(args)
    if args.generic:
        require_generic_support(table.scheme, table.field)
    results = run_verification(table, generic=args.generic)
    for result in results:
        print(result)
    if all(result.passed for result in results):
        return EXIT_OK
    return EXIT_VERIFY_FAILED


def cmd_random(args) -> int:
    """Print a random scheme file."""
    shape = _parse_list(ValidateShapeString(args.shape), "--shape")
    mults = _parse_list(ValidateMultiplicityString(args.mults), "--mults")
    if not 1 <= args.bound <= MAX_COORD_BOUND:
        raise UsageError(f"--bound {args.bound} must lie in [1, {MAX_COORD_BOUND}]")
    z = random_scheme(shape, len(mults), mults, args.seed, bound=args.bound)
    field = parse_field_string(args.field) if args.field else None
    print(dumps_scheme(z, field))
    return EXIT_OK


def cmd_summary(args) -> int:
    """Print the scheme summary as JSON."""
    print(json.dumps(scheme_summary(_load_table(args)), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser."""
    parser = argparse.ArgumentParser(
        prog=NAME,
        description="Multigraded Hilbert functions and regularity regions of fat points.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--field", help="rational, prime or prime:P; overrides MULTIREG_FIELD and the file"
    )
    scheme = argparse.ArgumentParser(add_help=False, parents=[common])
    scheme.add_argument("file", help="JSON scheme file")

    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("degree", parents=[scheme], help="print deg Z").set_defaults(
        func=cmd_degree
    )

    hilbert = sub.add_parser("hilbert", parents=[scheme], help="print H_Z over a box")
    hilbert.add_argument("--box", help="upper corner i1,...,ik (default sigma,...,sigma)")
    hilbert.add_argument("--coarse", type=int, help="also print H(t) for t <= COARSE")
    hilbert.add_argument("--csv", action="store_true", help="print the box as CSV")
    hilbert.set_defaults(func=cmd_hilbert)

    region = sub.add_parser("region", parents=[scheme], help="print corners of reg_B(Z)")
    region.add_argument("--render", action="store_true", help="print as orthant unions")
    region.set_defaults(func=cmd_region)

    sub.add_parser(
        "resvector", parents=[scheme], help="print the resolution regularity vector"
    ).set_defaults(func=cmd_resvector)

    bounds = sub.add_parser("bounds", parents=[scheme], help="print closed-form regions")
    bounds.add_argument("--generic", action="store_true", help="assert generic support")
    bounds.set_defaults(func=cmd_bounds)

    sub.add_parser(
        "acm", parents=[scheme], help="first-difference ACM test in P^1 x P^1"
    ).set_defaults(func=cmd_acm)

    verify = sub.add_parser("verify", parents=[scheme], help="run the invariant suite")
    verify.add_argument("--generic", action="store_true", help="assert generic support")
    verify.set_defaults(func=cmd_verify)

    rand = sub.add_parser("random", parents=[common], help="print a random scheme file")
    rand.add_argument("--shape", required=True, help="factor dimensions n1,...,nk")
    rand.add_argument("--mults", required=True, help="multiplicities m1,...,ms")
    rand.add_argument("--seed", type=int, default=0)
    rand.add_argument("--bound", type=int, default=COORD_BOUND)
    rand.set_defaults(func=cmd_random)

    sub.add_parser(
        "summary", parents=[scheme], help="print a JSON summary"
    ).set_defaults(func=cmd_summary)
    return parser


def _configure_logging(verbose: int) -> None:
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_OK if error.code in (0, None) else EXIT_INPUT_ERROR

    _configure_logging(args.verbose)
    _LOGGER.info(STARTUP_MESSAGE)

    try:
        code = args.func(args)
    except GenericityError as error:
        _LOGGER.error("%s", error)
        return EXIT_NOT_GENERIC
    except (SchemeValidationError, UsageError, UnsupportedShapeError) as error:
        _LOGGER.error("%s", error)
        return EXIT_INPUT_ERROR
    _LOGGER.info("%s finished with exit code %s", args.command, code)
    return code
