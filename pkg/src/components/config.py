import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional


def _load_dotenv_if_available() -> None:
    try:
        from dotenv import load_dotenv
        load_dotenv()
    except Exception:
        pass


@dataclass
class Settings:
    # Logging
    log_level: str = "INFO"

    # Monodromy
    twist_handedness: str = "right"  # right|left, applied to every Lefschetz vanishing cycle

    # Validation
    strict: bool = False  # warnings count as violations
    check_intermediates: bool = True

    # Move scripts
    max_script_steps: int = 10000

    # Paths
    repo_root: Path = Path(__file__).resolve().parents[2]
    examples_dir: Path = Path(__file__).resolve().parents[2] / "data" / "examples"


def load_settings() -> Settings:
    _load_dotenv_if_available()

    def pick(*keys: str, default: Optional[str] = None) -> Optional[str]:
        for k in keys:
            v = os.getenv(k)
            if v:
                return v
        return default

    def flag(*keys: str, default: str) -> bool:
        return str(pick(*keys, default=default)).lower() in {"1", "true", "yes"}

    handedness = str(pick("BLF_TWIST_HANDEDNESS", default="right")).lower()
    if handedness not in {"right", "left"}:
        handedness = "right"

    try:
        max_steps = int(pick("BLF_MAX_SCRIPT_STEPS", default="10000"))
    except ValueError:
        max_steps = 10000

    settings = Settings(
        log_level=pick("LOG_LEVEL", default="INFO"),
        twist_handedness=handedness,
        strict=flag("BLF_STRICT", default="false"),
        check_intermediates=flag("BLF_CHECK_INTERMEDIATES", default="true"),
        max_script_steps=max_steps,
    )
    examples_dir = pick("BLF_EXAMPLES_DIR")
    if examples_dir:
        settings.examples_dir = Path(examples_dir)
    return settings
