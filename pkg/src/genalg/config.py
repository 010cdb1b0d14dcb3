"""Parameter sets for the benchmark commands."""
from __future__ import annotations

from dataclasses import dataclass, fields, replace


def _scaled(value: int, scale: float, floor: int = 1) -> int:
    return max(floor, round(value * scale))


@dataclass(frozen=True)
class FatemanConfig:
    n: int = 10
    oracle_max_n: int = 5

    def scaled(self, s: float) -> "FatemanConfig":
        return replace(self, n=_scaled(self.n, s))


@dataclass(frozen=True)
class PearceConfig:
    n: int = 4
    oracle_max_n: int = 3

    def scaled(self, s: float) -> "PearceConfig":
        return replace(self, n=_scaled(self.n, s, floor=0))


@dataclass(frozen=True)
class ResultantTowerConfig:
    e: int = 12
    p: int = 17
    k: int = 11
    field_seed: int = 0
    oracle_max_e: int = 2

    def scaled(self, s: float) -> "ResultantTowerConfig":
        return replace(self, e=_scaled(self.e, s))


@dataclass(frozen=True)
class NFDetConfig:
    dim: int = 80
    seed: int = 42
    defining_poly: tuple[int, ...] = (1, 3, 0, 1)  # x^3 + 3x + 1, low degree first
    entry_bound: int = 100
    oracle_max_dim: int = 6

    def scaled(self, s: float) -> "NFDetConfig":
        return replace(self, dim=_scaled(self.dim, s))


@dataclass(frozen=True)
class IdealBenchConfig:
    n: int = 16
    count: int = 100
    bound: int = 400
    seed: int = 7
    hnf_check_max_count: int = 20

    def scaled(self, s: float) -> "IdealBenchConfig":
        return replace(self, count=_scaled(self.count, s))


@dataclass(frozen=True)
class MinpolyBenchConfig:
    dim: int = 20
    seed: int = 3
    coeff_bound: int = 5
    conjugation_steps: int | None = None

    def scaled(self, s: float) -> "MinpolyBenchConfig":
        return replace(self, dim=_scaled(self.dim, s, floor=2))


@dataclass(frozen=True)
class TorsionDemoConfig:
    field: str = "x^2+1"
    elem: str = "x"


def as_params(cfg) -> dict:
    return {f.name: getattr(cfg, f.name) for f in fields(cfg)}
