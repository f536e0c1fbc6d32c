"""Run-wide limits.

Library functions take explicit keyword overrides; when omitted they fall back
to the process-wide :data:`limits` object, which reads ``SQUIRAL_MAX_LEVEL``
and ``SQUIRAL_MEM_BUDGET`` from the environment at import time.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

HARD_MAX_LEVEL = 12

#: largest supertile the generator will build (19683 x 19683)
DEFAULT_MAX_LEVEL = 9
#: largest supertile the saturation search will enumerate
DEFAULT_SEARCH_LEVEL = 8
DEFAULT_MEMORY_BUDGET = 2 * 1024**3

OUTPUT_FORMATS = ("text", "csv", "json", "pbm")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


@dataclass
class RunConfig:
    max_level: int = DEFAULT_MAX_LEVEL
    memory_budget: int = DEFAULT_MEMORY_BUDGET
    output_format: str = "text"
    verbosity: int = 0
    threads: int = 1
    search_level: int = DEFAULT_SEARCH_LEVEL

    def __post_init__(self):
        if not 0 <= self.max_level <= HARD_MAX_LEVEL:
            raise ValueError(
                f"max_level must lie in [0, {HARD_MAX_LEVEL}], got {self.max_level}"
            )
        if self.memory_budget <= 0:
            raise ValueError("memory_budget must be positive")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.threads < 0:
            raise ValueError("threads must be >= 0")
        self.search_level = min(self.search_level, self.max_level)

    @classmethod
    def from_env(cls, **overrides) -> "RunConfig":
        """Build a config from the environment; explicit non-None overrides win."""
        values = {
            "max_level": _env_int("SQUIRAL_MAX_LEVEL", DEFAULT_MAX_LEVEL),
            "memory_budget": _env_int("SQUIRAL_MEM_BUDGET", DEFAULT_MEMORY_BUDGET),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def worker_count(self) -> int:
        if self.threads == 0:
            return os.cpu_count() or 1
        return self.threads


limits = RunConfig.from_env()
