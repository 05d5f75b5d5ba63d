"""Linear canonical transform kernel parameterization and evaluation.

Each axis carries one unimodular 2x2 matrix (a, b, c, d).  The axis-1
kernel lives in span{1, i}, the axis-2 kernel in span{1, j}:

    b != 0:  (2*pi*|b|)^{-1/2} * exp(unit * (a/(2b) x^2 - x u / b
                                             + d/(2b) u^2 - pi/4))
    b == 0:  sqrt(d) * exp(unit * (c d / 2) u^2)            (requires d > 0)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quaternion import Quaternion

__all__ = [
    "LctParams",
    "TransformParams",
    "kernel_i",
    "kernel_j",
    "inverse_params",
    "fourier_params",
    "kernel_matrix",
]

_DET_TOL = 1e-9


@dataclass(frozen=True)
class LctParams:
    """Entries of one unimodular matrix ((a, b), (c, d))."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > _DET_TOL:
            raise ValueError(f"det(A) != 1 (got {det!r})")
        if self.b == 0.0 and self.d == 0.0:
            raise ValueError("b = 0 requires d != 0")

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}

    @classmethod
    def from_dict(cls, d: dict) -> "LctParams":
        return cls(float(d["a"]), float(d["b"]), float(d["c"]), float(d["d"]))


@dataclass(frozen=True)
class TransformParams:
    """Per-axis matrices: A1 drives the i-kernel, A2 the j-kernel."""

    A1: LctParams
    A2: LctParams

    def to_dict(self) -> dict:
        return {"A1": self.A1.to_dict(), "A2": self.A2.to_dict()}

    @classmethod
    def from_dict(cls, d: dict) -> "TransformParams":
        return cls(LctParams.from_dict(d["A1"]), LctParams.from_dict(d["A2"]))


def _kernel_amp_phase(p: LctParams, x: float, u: float) -> tuple[float, float]:
    if p.b != 0.0:
        amp = 1.0 / math.sqrt(2.0 * math.pi * abs(p.b))
        phase = (p.a / (2.0 * p.b)) * x * x - x * u / p.b \
            + (p.d / (2.0 * p.b)) * u * u - math.pi / 4.0
        return amp, phase
    if p.d <= 0.0:
        raise ValueError("b = 0 kernel requires d > 0 (real amplitude sqrt(d))")
    return math.sqrt(p.d), (p.c * p.d / 2.0) * u * u


def kernel_i(p: LctParams, x1: float, u1: float) -> Quaternion:
    """Axis-1 kernel value; lies in span{1, i}."""
    amp, phase = _kernel_amp_phase(p, x1, u1)
    return Quaternion(amp * math.cos(phase), amp * math.sin(phase), 0.0, 0.0)


def kernel_j(p: LctParams, x2: float, u2: float) -> Quaternion:
    """Axis-2 kernel value; lies in span{1, j}."""
    amp, phase = _kernel_amp_phase(p, x2, u2)
    return Quaternion(amp * math.cos(phase), 0.0, amp * math.sin(phase), 0.0)


def inverse_params(p: LctParams) -> LctParams:
    """Matrix inverse (d, -b, -c, a) of a unimodular (a, b, c, d)."""
    return LctParams(p.d, -p.b, -p.c, p.a)


def fourier_params() -> TransformParams:
    """Both axes set to (0, 1, -1, 0): the transform reduces to the 2DQFT."""
    f = LctParams(0.0, 1.0, -1.0, 0.0)
    return TransformParams(f, f)


def kernel_matrix(p: LctParams, x: np.ndarray, u: np.ndarray,
                  conjugate: bool = False) -> np.ndarray:
    """Kernel values K(x_r, u_c) as a complex (len(x), len(u)) array.

    The imaginary axis stands for the kernel's own unit (i for axis 1,
    j for axis 2).  With conjugate=True the unit-conjugated kernel
    exp(-unit * phase) is returned, which is the exact inverse kernel.
    """
    x = np.asarray(x, dtype=float)
    u = np.asarray(u, dtype=float)
    if p.b != 0.0:
        amp = 1.0 / math.sqrt(2.0 * math.pi * abs(p.b))
        phase = ((p.a / (2.0 * p.b)) * x[:, None] ** 2
                 - np.outer(x, u) / p.b
                 + (p.d / (2.0 * p.b)) * u[None, :] ** 2
                 - math.pi / 4.0)
    else:
        if p.d <= 0.0:
            raise ValueError("b = 0 kernel requires d > 0 "
                             "(real amplitude sqrt(d))")
        amp = math.sqrt(p.d)
        phase = np.broadcast_to((p.c * p.d / 2.0) * u[None, :] ** 2,
                                (x.size, u.size))
    if conjugate:
        phase = -phase
    return amp * np.exp(1j * phase)
