"""Why u_n = f(u_{n-1}) / k stops enumerating anything once k >= 4.

For k >= 4 the map f_k = f / k has real fixed points gamma_k <= delta_k in
(0, 1), roots of k x^2 - k x + 1.  The orbit from 0 climbs monotonically
towards gamma_k and never leaves [0, gamma_k], so every rational above
gamma_k is missed.  The helpers below compute the fixed points, iterate the
orbit exactly or in double precision, and summarise the evidence.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import as_rational

EXACT_STEP_LIMIT = 200
BOUND_SLACK = 1e-12
# float orbits may repeat a value once within this distance of gamma
SATURATION_GAP = 4 * sys.float_info.epsilon


@dataclass(frozen=True)
class FixedPoints:
    k: int
    gamma: float
    delta: float

    def residuals(self) -> tuple[float, float]:
        return fixed_point_residual(self.k, self.gamma), fixed_point_residual(self.k, self.delta)


@dataclass
class OrbitSummary:
    k: int
    steps: int
    mode: str
    first: list = field(default_factory=list)
    last: Fraction | float = 0
    monotone_increasing: bool = True


@dataclass
class DivergenceReport:
    k: int
    gamma: float
    delta: float
    steps: int
    monotone_increasing: bool
    bounded_by_gamma: bool
    final_value: float
    final_gap: float
    witness: Fraction
    closest_approach: float
    witness_missing: Fraction | None

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "gamma": self.gamma,
            "delta": self.delta,
            "steps": self.steps,
            "monotone": self.monotone_increasing,
            "bounded": self.bounded_by_gamma,
            "final_value": self.final_value,
            "final_gap": self.final_gap,
            "witness": f"{self.witness.numerator}/{self.witness.denominator}",
            "closest_approach": self.closest_approach,
            "witness_missing": self.witness_missing is not None,
        }


def _require_k(k: int) -> None:
    if k < 4:
        raise ValueError(
            f"fixed points are relevant only for k >= 4; k={k} gives the "
            + {1: "binary (Calkin-Wilf)", 2: "ternary", 3: "quinary"}.get(k, "degenerate")
            + " enumeration of the nonnegative rationals instead"
        )


def fixed_points(k: int) -> FixedPoints:
    _require_k(k)
    root = math.sqrt(1.0 - 4.0 / k)
    delta = (1.0 + root) / 2.0
    # gamma * delta = 1/k avoids cancellation in (1 - root) / 2
    gamma = 1.0 / (k * delta)
    return FixedPoints(k, gamma, delta)


def fixed_point_residual(k: int, x) -> float | Fraction:
    """k x^2 - k x + 1; exact when ``x`` is a Fraction."""
    return k * x * x - k * x + 1


def below_gamma(k: int, u: Fraction) -> bool:
    """Exact test ``u < gamma_k`` for rational ``u``.

    gamma_k is the smaller root of k x^2 - k x + 1 and never exceeds 1/2, so
    u < gamma_k iff u < 1/2 and the polynomial is positive at u.
    """
    _require_k(k)
    return u < Fraction(1, 2) and fixed_point_residual(k, u) > 0


def step_exact(k: int, u: Fraction) -> Fraction:
    a, b = u.numerator, u.denominator
    return Fraction(b, k * ((1 + 2 * (a // b)) * b - a))


def step_float(k: int, u: float) -> float:
    return 1.0 / (k * (1.0 + 2.0 * math.floor(u) - u))


def orbit_exact(k: int, steps: int) -> list[Fraction]:
    """u_0 .. u_steps in exact arithmetic."""
    if steps > EXACT_STEP_LIMIT:
        raise ValueError(f"exact mode is limited to {EXACT_STEP_LIMIT} steps")
    u = Fraction(0)
    out = [u]
    for _ in range(steps):
        u = step_exact(k, u)
        out.append(u)
    return out


def orbit_float(k: int, steps: int) -> list[float]:
    u = 0.0
    out = [u]
    for _ in range(steps):
        u = step_float(k, u)
        out.append(u)
    return out


def iterate_fk(k: int, steps: int, mode: str = "float", keep: int = 10) -> OrbitSummary:
    if k < 1:
        raise ValueError("k must be positive")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if mode == "exact":
        orbit = orbit_exact(k, steps)
        monotone = all(x < y for x, y in zip(orbit, orbit[1:]))
    elif mode == "float":
        orbit = orbit_float(k, steps)
        monotone = _float_monotone(k, orbit) if k >= 4 else all(x < y for x, y in zip(orbit, orbit[1:]))
    else:
        raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
    return OrbitSummary(k, steps, mode, orbit[1:keep + 1], orbit[-1], monotone)


def _float_monotone(k, orbit):
    gamma = fixed_points(k).gamma
    for x, y in zip(orbit, orbit[1:]):
        if y > x:
            continue
        if y == x and gamma - x < SATURATION_GAP:
            continue
        return False
    return True


def divergence_report(k: int, steps: int = 10_000, witness=1) -> DivergenceReport:
    fp = fixed_points(k)
    witness = as_rational(witness)
    if witness <= fp.gamma:
        raise ValueError(f"witness must exceed gamma ({fp.gamma!r})")
    orbit = orbit_float(k, steps)
    monotone = _float_monotone(k, orbit)
    bounded = all(0.0 <= u <= fp.gamma + BOUND_SLACK for u in orbit)
    w = float(witness)
    closest = min(abs(w - u) for u in orbit)
    # the orbit never exceeds gamma, so nothing closer than witness - gamma can occur
    missing = witness if bounded and closest >= (w - fp.gamma) - BOUND_SLACK else None
    return DivergenceReport(
        k=k,
        gamma=fp.gamma,
        delta=fp.delta,
        steps=steps,
        monotone_increasing=monotone,
        bounded_by_gamma=bounded,
        final_value=orbit[-1],
        final_gap=fp.gamma - orbit[-1],
        witness=witness,
        closest_approach=closest,
        witness_missing=missing,
    )
