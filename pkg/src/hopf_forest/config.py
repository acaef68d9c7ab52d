"""Enumeration caps.

The caps can be overridden by a ``key=value`` config file and, last, by the
``HOPF_FOREST_MAX_DEGREE`` environment variable (which sets both caps).
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass
from pathlib import Path

ENV_VAR = "HOPF_FOREST_MAX_DEGREE"


@dataclass(frozen=True)
class Limits:
    max_tree_degree: int = 8
    max_perm_degree: int = 7

    def with_overrides(self, **changes: int) -> "Limits":
        return dataclasses.replace(self, **changes)


def read_config_file(path: str | os.PathLike) -> dict[str, str]:
    """Parse a ``key = value`` file. Blank lines and ``#`` comments are skipped."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key] = value.strip("\"'")
    return out


def load_limits(config_path: str | os.PathLike | None = None,
                environ: dict[str, str] | None = None) -> Limits:
    environ = os.environ if environ is None else environ
    limits = Limits()
    if config_path is not None:
        fields = {f.name for f in dataclasses.fields(Limits)}
        values = read_config_file(config_path)
        unknown = set(values) - fields - {"max_degree"}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        if "max_degree" in values:
            d = int(values["max_degree"])
            limits = limits.with_overrides(max_tree_degree=d, max_perm_degree=d)
        limits = limits.with_overrides(**{k: int(v) for k, v in values.items() if k in fields})
    if environ.get(ENV_VAR):
        d = int(environ[ENV_VAR])
        limits = limits.with_overrides(max_tree_degree=d, max_perm_degree=d)
    return limits


_current = load_limits()


def get_limits() -> Limits:
    return _current


def set_limits(limits: Limits) -> None:
    global _current
    _current = limits
