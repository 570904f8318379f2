"""Runtime settings: command-line flags override ``UNIVOQUE_*`` environment variables, which override defaults."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from typing import Mapping, Optional

from .expansions import DEFAULT_DEPTH, DEFAULT_TOL
from .subshift import DEFAULT_MAX_REDUCTIONS

ENV_PREFIX = "UNIVOQUE_"


@dataclass(frozen=True)
class Settings:
    tol: float = DEFAULT_TOL
    depth: int = DEFAULT_DEPTH
    threads: int = os.cpu_count() or 1
    oracle_depth: int = 14
    max_reductions: int = DEFAULT_MAX_REDUCTIONS

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        for name in ("depth", "threads", "oracle_depth", "max_reductions"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


def from_env(env: Optional[Mapping[str, str]] = None) -> Settings:
    env = os.environ if env is None else env
    values = {}
    for f in fields(Settings):
        raw = env.get(ENV_PREFIX + f.name.upper())
        if raw is not None:
            cast = float if f.type in ("float", float) else int
            try:
                values[f.name] = cast(raw)
            except ValueError:
                raise ValueError(f"{ENV_PREFIX}{f.name.upper()}={raw!r} is not a valid {cast.__name__}") from None
    return Settings(**values)


def resolve(env: Optional[Mapping[str, str]] = None, **flags) -> Settings:
    """Settings from the environment, with any non-None ``flags`` applied on top."""
    base = from_env(env)
    return replace(base, **{k: v for k, v in flags.items() if v is not None})
