from __future__ import annotations

from pathlib import Path
from typing import List

from ..config import Settings
from ..models import BlfDiagram
from .format import parse


def bundled_names(settings: Settings) -> List[str]:
    if not settings.examples_dir.is_dir():
        return []
    return sorted(p.stem for p in settings.examples_dir.glob("*.blf"))


def resolve_path(name: str, settings: Settings) -> Path:
    """A path as given if it exists, else a bundled example by bare name or file name."""
    path = Path(name)
    if path.exists():
        return path
    for candidate in (settings.examples_dir / path.name, settings.examples_dir / f"{path.name}.blf"):
        if candidate.exists():
            return candidate
    return path


def load(name: str, settings: Settings) -> BlfDiagram:
    return parse(resolve_path(name, settings).read_bytes())
