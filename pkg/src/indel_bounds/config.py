"""Enumeration and search caps. ``INDEL_BOUNDS_MAX_ENUM`` overrides the
default cap on exhaustive word enumerations."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MAX_ENUM = "INDEL_BOUNDS_MAX_ENUM"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {raw!r}")
    return value


@dataclass(frozen=True)
class Limits:
    max_enum: int = 5000  # q^n words (oracle graph) or q^(n-s+t) centers
    ball_len: int = 16  # |z| for explicit ball enumeration
    ball_radius: int = 4  # t for explicit ball enumeration
    cw_max_n: int = 14
    cw_max_vertices: int = 4000  # C(n, w) after complement normalization
    cw_node_limit: int = 2_000_000

    @classmethod
    def from_env(cls) -> "Limits":
        return cls(max_enum=_env_int(ENV_MAX_ENUM, cls.max_enum))


def default_limits() -> Limits:
    return Limits.from_env()
