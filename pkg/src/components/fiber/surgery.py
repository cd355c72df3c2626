from __future__ import annotations

from typing import Dict, Tuple

from ..errors import NotApplicable
from ..models import FiberDescription, SurgeryDescriptor


def euler_of_fiber(fiber: FiberDescription) -> int:
    return sum(2 - 2 * c.genus for c in fiber.components)


def split_ids(component: str) -> Tuple[str, str]:
    """Ids of the two pieces a separating surgery leaves behind (lower genus first)."""
    return component + "a", component + "b"


def is_null_homotopic(surgery: SurgeryDescriptor) -> bool:
    # splitting off a sphere means the collapsed circle bounds a disk
    return surgery.is_separating and surgery.g1 == 0


def _check(fiber: FiberDescription, surgery: SurgeryDescriptor) -> str:
    genus = fiber.genus_of(surgery.component)
    if genus is None:
        return f"component {surgery.component} not in fiber {fiber}"
    if surgery.is_separating:
        if genus != surgery.g1 + surgery.g2:
            return f"{surgery} needs genus {surgery.g1 + surgery.g2}, {surgery.component} has genus {genus}"
        taken = set(fiber.ids) - {surgery.component}
        if taken.intersection(split_ids(surgery.component)):
            return f"derived ids {split_ids(surgery.component)} already used in {fiber}"
    elif genus < 1:
        return f"no nonseparating circle on sphere component {surgery.component}"
    return ""


def is_applicable(fiber: FiberDescription, surgery: SurgeryDescriptor) -> bool:
    return not _check(fiber, surgery)


def apply_surgery(fiber: FiberDescription, surgery: SurgeryDescriptor) -> FiberDescription:
    """Fiber on the lower side of a fold whose higher side carries ``fiber``."""
    reason = _check(fiber, surgery)
    if reason:
        raise NotApplicable(reason, surgery.component)

    genera: Dict[str, int] = fiber.genera
    if surgery.is_separating:
        del genera[surgery.component]
        a, b = split_ids(surgery.component)
        genera[a] = surgery.g1
        genera[b] = surgery.g2
    else:
        genera[surgery.component] -= 1
    return FiberDescription.of(genera)


def invert_surgery(fiber: FiberDescription, surgery: SurgeryDescriptor) -> FiberDescription:
    """Fiber on the higher side, i.e. the fiberwise 1-handle read against the arrow."""
    genera: Dict[str, int] = fiber.genera
    if surgery.is_separating:
        a, b = split_ids(surgery.component)
        if genera.get(a) != surgery.g1 or genera.get(b) != surgery.g2:
            raise NotApplicable(f"{fiber} lacks the pieces {a}:{surgery.g1}, {b}:{surgery.g2} of {surgery}", surgery.component)
        if surgery.component in genera:
            raise NotApplicable(f"{surgery.component} already present in {fiber}", surgery.component)
        del genera[a]
        del genera[b]
        genera[surgery.component] = surgery.g1 + surgery.g2
    else:
        if surgery.component not in genera:
            raise NotApplicable(f"component {surgery.component} not in fiber {fiber}", surgery.component)
        genera[surgery.component] += 1
    return FiberDescription.of(genera)


def reverse_crossing(low: FiberDescription, surgery: SurgeryDescriptor, high: FiberDescription) -> bool:
    try:
        return apply_surgery(high, surgery) == low
    except NotApplicable:
        return False
