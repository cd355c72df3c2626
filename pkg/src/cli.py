"""
Command line for broken Lefschetz fibration diagrams.

Usage:
    python src/cli.py validate data/examples/cp2.blf
    python src/cli.py euler cp2
    python src/cli.py report cp2
    python src/cli.py check-monodromy cp2 --face outer --class 1,0,0,0
    python src/cli.py apply split_fiber moves.txt -o out.blf
    python src/cli.py connect-fibers split_fiber -o connected.blf
    python src/cli.py export cp2 --format graph

Exit codes: 0 ok, 1 violations or failed moves, 2 usage or parse errors.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

import pandas as pd

# Make `components` importable when run as a script
sys.path.insert(0, str(Path(__file__).resolve().parent))

from components.blf_io import export_graph, export_json, load, parse_cycle, parse_script, serialize  # noqa: E402
from components.config import Settings, load_settings  # noqa: E402
from components.diagram import (  # noqa: E402
    connectivity_report,
    counts,
    euler_characteristic,
    monodromy_image,
    parity_check,
    round_handle_report,
    stratum_table,
    thom_reduction_target,
    validate,
)
from components.errors import BlfError, BlfParseError  # noqa: E402
from components.models import Handedness  # noqa: E402
from components.moves import connect_fibers, pencil_euler, run_script  # noqa: E402
from components.utils.logging import get_logger, setup_logging  # noqa: E402

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = get_logger("blf.cli")


def _cmd_validate(args, settings: Settings) -> int:
    d = load(args.file, settings)
    report = validate(d)
    strict = settings.strict or args.strict
    for line in report.lines(strict=True):
        print(line)
    if not report.ok or (strict and report.warnings):
        return EXIT_FAIL
    print("OK")
    return EXIT_OK


def _valid(args, settings: Settings):
    d = load(args.file, settings)
    report = validate(d)
    if not report.ok:
        for line in report.lines():
            print(line)
        return None
    return d


def _cmd_euler(args, settings: Settings) -> int:
    d = _valid(args, settings)
    if d is None:
        return EXIT_FAIL
    print(pencil_euler(d) if d.is_pencil else euler_characteristic(d))
    return EXIT_OK


def _cmd_report(args, settings: Settings) -> int:
    d = _valid(args, settings)
    if d is None:
        return EXIT_FAIL
    if d.is_pencil:
        print(f"pencil: {d.basepoints} base points")
        print(f"euler: {pencil_euler(d)}")
        return EXIT_OK
    handedness = Handedness(settings.twist_handedness)
    connectivity = connectivity_report(d)
    print(f"euler: {euler_characteristic(d)}")
    print(f"parity: {'ok' if parity_check(d) else 'FAILED'}")
    print(f"thom target: {thom_reduction_target(d)} Lefschetz point(s)")
    for key, value in counts(d).items():
        print(f"{key}: {value}")
    print(f"sections: {d.sections}")
    print(f"connected: {'yes' if connectivity.connected else 'no'}")
    for label, ok in connectivity.faces.items():
        print(f"  {label}: {'connected' if ok else 'disconnected'} ({d.fibers[label]})")
    with pd.option_context("display.width", 120, "display.max_rows", None):
        print(stratum_table(d).to_string(index=False))
        handles = round_handle_report(d, handedness)
        if not handles.empty:
            print(handles.to_string(index=False))
    return EXIT_OK


def _cmd_check_monodromy(args, settings: Settings) -> int:
    d = _valid(args, settings)
    if d is None:
        return EXIT_FAIL
    z = parse_cycle(args.cls)
    image = monodromy_image(d, args.face, z, args.component, Handedness(settings.twist_handedness))
    if image == z or image == -z:
        print("OK (fixed up to sign)")
        return EXIT_OK
    print(f"FAIL ({z} -> {image})")
    return EXIT_FAIL


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def _cmd_apply(args, settings: Settings) -> int:
    d = _valid(args, settings)
    if d is None:
        return EXIT_FAIL
    script = parse_script(Path(args.script).read_text(encoding="utf-8"))
    result, trail = run_script(d, script, settings)
    for line in trail:
        log.info("%s", line)
    _write(serialize(result), args.output)
    return EXIT_OK


def _cmd_connect_fibers(args, settings: Settings) -> int:
    d = _valid(args, settings)
    if d is None:
        return EXIT_FAIL
    _write(serialize(connect_fibers(d, settings.check_intermediates)), args.output)
    return EXIT_OK


def _cmd_export(args, settings: Settings) -> int:
    d = load(args.file, settings)
    _write(export_json(d) if args.format == "json" else export_graph(d), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blf",
        description="Validate, measure and rewrite broken Lefschetz fibration diagrams",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check rules V1-V7")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true", help="warnings count as violations")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("euler", help="euler characteristic of the total space")
    p.add_argument("file")
    p.set_defaults(func=_cmd_euler)

    p = sub.add_parser("report", help="euler, parity, connectivity, counts and strata")
    p.add_argument("file")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("check-monodromy", help="is a class fixed up to sign by a face's monodromy")
    p.add_argument("file")
    p.add_argument("--face", required=True)
    p.add_argument("--class", dest="cls", required=True, help="comma-separated coordinates, e.g. 1,0,0,0")
    p.add_argument("--component", default=None)
    p.set_defaults(func=_cmd_check_monodromy)

    p = sub.add_parser("apply", help="run a move script")
    p.add_argument("file")
    p.add_argument("script")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("connect-fibers", help="flip, flip and slip until every fiber is connected")
    p.add_argument("file")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_connect_fibers)

    p = sub.add_parser("export", help="describe the diagram for external renderers")
    p.add_argument("file")
    p.add_argument("--format", choices=("graph", "json"), default="graph")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_export)
    return parser


def run(argv: Optional[List[str]] = None, settings: Optional[Settings] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    settings = settings or load_settings()
    setup_logging(settings.log_level)
    log.info("command %s", args.command)
    try:
        return args.func(args, settings)
    except BlfParseError as e:
        print(e.diagnostic())
        return EXIT_USAGE
    except BlfError as e:
        print(e.diagnostic())
        return EXIT_FAIL
    except ValueError as e:
        print(f"UsageError - {e}")
        return EXIT_USAGE
    except OSError as e:
        print(f"IOError - {e}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
