"""Run manifests: a JSON sidecar written next to every data file."""

from __future__ import annotations

import json
import platform
from dataclasses import asdict, dataclass, field
from importlib import metadata
from pathlib import Path
from typing import Dict, List, Optional


def tool_version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        from . import __version__

        return __version__


@dataclass
class RunManifest:
    command: List[str]
    config: Dict[str, object]
    data_file: Optional[str] = None
    tool_version: str = field(default_factory=tool_version)
    python: str = field(default_factory=platform.python_version)
    wall_time_seconds: float = 0.0
    per_p_seconds: Dict[str, float] = field(default_factory=dict)
    failures: List[Dict[str, str]] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"


def manifest_path(out: str) -> Path:
    return Path(f"{out}.manifest.json")


def write_manifest(out: str, manifest: RunManifest) -> Path:
    path = manifest_path(out)
    path.write_text(manifest.to_json(), encoding="utf-8")
    return path
