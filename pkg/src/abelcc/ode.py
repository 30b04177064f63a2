"""Fixed-step RK4 integration of dr/dt = l_hat(t) r**3 + m_hat(t) r**2 over one period."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import InputError
from .trig import TrigPoly

DEFAULT_STEPS = 100_000
DEFAULT_BOUND = 1e6
DEFAULT_R0S = (0.01, -0.01, 0.05, -0.05)

CONVERGED = "Converged"
BLOWUP = "Blowup"


class Blowup(ArithmeticError):
    """The solution left the ball ``|r| <= bound`` or became non-finite."""

    def __init__(self, theta: float, value: float):
        super().__init__(f"solution escaped at t={theta:.6g} (r={value!r})")
        self.theta = theta
        self.value = value


@dataclass(frozen=True)
class AbelInstance:
    l_hat: TrigPoly
    m_hat: TrigPoly

    @classmethod
    def from_json(cls, obj) -> "AbelInstance":
        if not isinstance(obj, dict) or not {"l_hat", "m_hat"} <= set(obj):
            raise InputError('Abel instance must be an object with "l_hat" and "m_hat"')
        return cls(TrigPoly.from_json(obj["l_hat"]), TrigPoly.from_json(obj["m_hat"]))

    def to_json(self) -> dict:
        return {"l_hat": self.l_hat.to_json(), "m_hat": self.m_hat.to_json()}


def sample_trig(f: TrigPoly, theta: np.ndarray) -> np.ndarray:
    """Vectorized evaluation of ``f`` on an array of angles."""
    out = np.full(theta.shape, float(f.a0))
    for k, a, b in f.terms:
        if a:
            out += float(a) * np.cos(k * theta)
        if b:
            out += float(b) * np.sin(k * theta)
    return out


def _half_grid(inst: AbelInstance, steps: int) -> tuple[list, list, float]:
    h = 2.0 * math.pi / steps
    theta = np.arange(2 * steps + 1) * (h / 2)
    return sample_trig(inst.l_hat, theta).tolist(), sample_trig(inst.m_hat, theta).tolist(), h


def _rk4(lv: list, mv: list, h: float, r0: float, steps: int, bound: float) -> float:
    r = float(r0)
    half = h / 2
    for n in range(steps):
        j = 2 * n
        l0, m0 = lv[j], mv[j]
        l1, m1 = lv[j + 1], mv[j + 1]
        l2, m2 = lv[j + 2], mv[j + 2]
        k1 = (l0 * r + m0) * r * r
        y = r + half * k1
        k2 = (l1 * y + m1) * y * y
        y = r + half * k2
        k3 = (l1 * y + m1) * y * y
        y = r + h * k3
        k4 = (l2 * y + m2) * y * y
        r = r + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        if not abs(r) <= bound:  # also catches nan
            raise Blowup((n + 1) * h, r)
    return r


def integrate_abel(inst: AbelInstance, r0: float, steps: int = DEFAULT_STEPS,
                   bound: float = DEFAULT_BOUND) -> float:
    """Return ``r(2 pi)`` for ``r(0) = r0``; raises :class:`Blowup` on escape."""
    if steps < 1:
        raise InputError("steps must be positive")
    lv, mv, h = _half_grid(inst, steps)
    return _rk4(lv, mv, h, r0, steps, bound)


@dataclass(frozen=True)
class Sample:
    r0: float
    r_end: float | None
    status: str

    @property
    def displacement(self) -> float | None:
        return None if self.r_end is None else self.r_end - self.r0

    def to_json(self) -> dict:
        return {"r0": self.r0, "r_end": self.r_end,
                "displacement": self.displacement, "status": self.status}


@dataclass(frozen=True)
class OdeReport:
    samples: list[Sample] = field(default_factory=list)

    def converged(self) -> list[Sample]:
        return [s for s in self.samples if s.status == CONVERGED]

    def max_displacement(self) -> float:
        return max((abs(s.displacement) for s in self.converged()), default=0.0)

    def to_json(self) -> dict:
        return {"samples": [s.to_json() for s in self.samples]}


def poincare_report(inst: AbelInstance, r0s: Iterable[float] = DEFAULT_R0S,
                    steps: int = DEFAULT_STEPS, bound: float = DEFAULT_BOUND) -> OdeReport:
    if steps < 1:
        raise InputError("steps must be positive")
    lv, mv, h = _half_grid(inst, steps)
    samples = []
    for r0 in r0s:
        try:
            samples.append(Sample(float(r0), _rk4(lv, mv, h, r0, steps, bound), CONVERGED))
        except Blowup:
            samples.append(Sample(float(r0), None, BLOWUP))
    return OdeReport(samples)
