"""
Regenerate the Bundled Example Diagrams

Builds each example from its defining data, checks it, and writes the
canonical text to data/examples/. Existing files are only replaced when
--force is given.

Usage:
    python scripts/make_examples.py
    python scripts/make_examples.py --force
"""

import argparse
import sys
from pathlib import Path

# Add src to path
project_root = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(project_root / "src"))

from components.blf_io import serialize  # noqa: E402
from components.config import load_settings  # noqa: E402
from components.diagram import euler_characteristic, validate  # noqa: E402
from components.models import (  # noqa: E402
    ArrangementMap,
    BlfDiagram,
    Circle,
    FiberDescription,
    Fold,
    HomologyClass,
    LefschetzPoint,
    SurgeryDescriptor,
)
from components.moves import split_fiber_start  # noqa: E402
from components.utils.logging import get_logger, setup_logging  # noqa: E402

log = get_logger("blf.make_examples")


def s4() -> BlfDiagram:
    """Round 1-handle over the equator of a torus-fiber disk."""
    return BlfDiagram(
        arrangement=ArrangementMap(circles={"c": Circle("c", "torus", "sphere")}),
        fibers={"torus": FiberDescription.surface(1), "sphere": FiberDescription.surface(0)},
        folds={"c": Fold("c", "torus", "sphere", SurgeryDescriptor.nonseparating("c0"))},
    )


def cp2() -> BlfDiagram:
    """Two nested folds and three Lefschetz points on the genus-2 side."""
    nonsep = SurgeryDescriptor.nonseparating("c0")
    cycles = [(1, 1, 0, 0), (-1, 2, 0, 0), (2, -1, 0, 0)]
    return BlfDiagram(
        arrangement=ArrangementMap(circles={
            "c1": Circle("c1", "mid", "outer"),
            "c2": Circle("c2", "inner", "mid"),
        }),
        fibers={
            "inner": FiberDescription.surface(0),
            "mid": FiberDescription.surface(1),
            "outer": FiberDescription.surface(2),
        },
        folds={"c1": Fold("c1", "outer", "mid", nonsep), "c2": Fold("c2", "mid", "inner", nonsep)},
        lefschetz=tuple(
            LefschetzPoint(f"L{i}", "outer", "c0", i, HomologyClass.of(*cycle))
            for i, cycle in enumerate(cycles, start=1)
        ),
    )


EXAMPLES = {
    "s4": s4,
    "cp2": cp2,
    "split_fiber": lambda: split_fiber_start(1, 2),
}


def main() -> int:
    parser = argparse.ArgumentParser(description="Regenerate data/examples/*.blf")
    parser.add_argument("--force", action="store_true", help="overwrite files that differ")
    args = parser.parse_args()

    settings = load_settings()
    setup_logging(settings.log_level)
    settings.examples_dir.mkdir(parents=True, exist_ok=True)

    failed = 0
    for name, build in EXAMPLES.items():
        d = build()
        report = validate(d)
        if not report.ok:
            log.error("%s is invalid: %s", name, "; ".join(report.lines()))
            failed += 1
            continue
        path = settings.examples_dir / f"{name}.blf"
        text = serialize(d)
        if path.exists() and path.read_text(encoding="utf-8") == text:
            log.info("%s unchanged (euler %d)", name, euler_characteristic(d))
            continue
        if path.exists() and not args.force:
            log.warning("%s differs from the generated diagram; rerun with --force", path)
            failed += 1
            continue
        path.write_text(text, encoding="utf-8")
        log.info("wrote %s (euler %d)", path, euler_characteristic(d))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
