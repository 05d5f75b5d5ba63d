"""Probability layer: quaternion densities, characteristic functions,
moments and covariance.

A quaternion density is a sampled field whose four real components are
density-like.  The characteristic function is the two-sided sandwich
integral

    phi(u, v) = integral e^{i u x1} f(x1, x2) e^{j v x2} dx1 dx2

in fourier mode (no amplitude factor, positive exponents), or the
kernel sandwich of the linear canonical transform in lct mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .field import (GridSpec, SampledField, integrate, qnorm_values,
                    quad_weights_1d, _weights_2d)
from .lct import TransformParams
from .quaternion import I, J, Quaternion, inverse, mul
from .transform import Spectrum, forward, inverse as lct_inverse, _sandwich

__all__ = [
    "Qpdf",
    "QpdfReport",
    "CharFn",
    "MomentReport",
    "validate_qpdf",
    "expectation",
    "charfn",
    "charfn_properties",
    "invert_charfn",
    "fd_moment",
    "covariance",
]

_COMPONENT_NAMES = ("a", "b", "c", "d")


@dataclass(frozen=True)
class Qpdf:
    """A sampled quaternion density; support is the sampling box."""

    field: SampledField

    @property
    def support(self) -> GridSpec:
        return self.field.spec


@dataclass(frozen=True)
class QpdfReport:
    """Validation outcome for a candidate quaternion density.

    Both the strict verdict (every component a real PDF: nonnegative
    and unit mass) and the relaxed verdict (components nonnegative,
    total integral recorded but not forced) are always stated.  qpdf
    is set when the requested mode accepted the input.
    """

    strict_ok: bool
    relaxed_ok: bool
    mode: str
    component_integrals: tuple[float, float, float, float]
    component_minima: tuple[float, float, float, float]
    total_integral: Quaternion
    violations: tuple[str, ...]
    qpdf: Qpdf | None

    def to_dict(self) -> dict:
        return {
            "strict_ok": self.strict_ok,
            "relaxed_ok": self.relaxed_ok,
            "mode": self.mode,
            "accepted": self.qpdf is not None,
            "component_integrals": list(self.component_integrals),
            "component_minima": list(self.component_minima),
            "total_integral": list(self.total_integral.components()),
            "violations": list(self.violations),
        }


@dataclass(frozen=True)
class CharFn:
    """Sampled characteristic function with its kernel convention.

    mode "fourier" means the unnormalized kernels e^{iux1}, e^{jvx2};
    mode "lct" means the canonical-transform kernels, whose parameters
    travel inside the spectrum.
    """

    spectrum: Spectrum
    mode: str

    def __post_init__(self):
        if self.mode not in ("fourier", "lct"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "lct" and self.spectrum.params is None:
            raise ValueError("lct mode requires transform parameters")

    def at(self, r: int, c: int) -> Quaternion:
        return self.spectrum.as_field().at(r, c)


def _field_of(f) -> SampledField:
    if isinstance(f, Qpdf):
        return f.field
    if isinstance(f, SampledField):
        return f
    raise TypeError(f"expected Qpdf or SampledField, got {type(f).__name__}")


def validate_qpdf(f: SampledField, mode: str = "relaxed",
                  mass_tol: float = 1e-6,
                  neg_tol: float = 1e-12) -> QpdfReport:
    """Check the density axioms and report both verdicts.

    Strict mode demands each of the four components be a real PDF:
    everywhere >= -neg_tol and integrating to 1 within mass_tol.
    Relaxed mode demands only nonnegativity; the total quaternion
    integral is recorded, not constrained.  Violations are data, not
    exceptions.
    """
    if mode not in ("strict", "relaxed"):
        raise ValueError(f"unknown mode {mode!r}")
    f = _field_of(f)
    w = _weights_2d(f.spec)
    integrals = tuple(float(np.sum(w * f.values[..., l])) for l in range(4))
    minima = tuple(float(np.min(f.values[..., l])) for l in range(4))
    total = Quaternion(*integrals)

    violations = []
    for name, lo in zip(_COMPONENT_NAMES, minima):
        if lo < -neg_tol:
            violations.append(f"component {name} is negative (min {lo!r})")
    relaxed_ok = not violations
    strict_violations = list(violations)
    for name, mass in zip(_COMPONENT_NAMES, integrals):
        if abs(mass - 1.0) > mass_tol:
            strict_violations.append(
                f"component {name} integrates to {mass!r}, not 1")
    strict_ok = not strict_violations

    ok = strict_ok if mode == "strict" else relaxed_ok
    listed = strict_violations if mode == "strict" else violations
    return QpdfReport(strict_ok, relaxed_ok, mode, integrals, minima, total,
                      tuple(listed), Qpdf(f) if ok else None)


def _weight_powers(weight) -> tuple[int, int]:
    named = {"x1": (1, 0), "x2": (0, 1), "x1x2": (1, 1),
             "x1^2": (2, 0), "x2^2": (0, 2)}
    if isinstance(weight, str):
        if weight not in named:
            raise ValueError(f"unknown weight {weight!r}")
        return named[weight]
    m, n = weight
    if m < 0 or n < 0:
        raise ValueError("weight powers must be nonnegative")
    return int(m), int(n)


def expectation(f, weight) -> Quaternion:
    """Weighted moment integral x1^m x2^n against the density.

    weight is one of the names "x1", "x2", "x1x2", "x1^2", "x2^2" or a
    pair (m, n).  The weight is real and commutes; the result is the
    componentwise quadrature of w(x) f(x).
    """
    f = _field_of(f)
    m, n = _weight_powers(weight)
    x1 = f.spec.x1_nodes() ** m
    x2 = f.spec.x2_nodes() ** n
    w = _weights_2d(f.spec) * np.outer(x1, x2)
    comps = np.einsum("rc,rcl->l", w, f.values)
    return Quaternion(*comps)


def charfn(f, freq: GridSpec, mode: str = "fourier",
           params: TransformParams | None = None) -> CharFn:
    """Characteristic function on a frequency grid.

    Fourier mode sandwiches f between e^{iux1} (left) and e^{jvx2}
    (right) with positive exponents and no amplitude factor.  Lct mode
    uses the canonical-transform kernels and requires params.
    """
    f = _field_of(f)
    if mode == "lct":
        if params is None:
            raise ValueError("lct mode requires transform parameters")
        return CharFn(forward(f, params, freq), "lct")
    if mode != "fourier":
        raise ValueError(f"unknown mode {mode!r}")
    x1, x2 = f.spec.x1_nodes(), f.spec.x2_nodes()
    u, v = freq.x1_nodes(), freq.x2_nodes()
    w1 = quad_weights_1d(f.spec.n1, f.spec.h1)
    w2 = quad_weights_1d(f.spec.n2, f.spec.h2)
    kl = np.exp(1j * np.outer(u, x1)) * w1[None, :]
    kr = np.exp(1j * np.outer(x2, v)) * w2[:, None]
    return CharFn(Spectrum(freq, _sandwich(f.values, kl, kr), None), "fourier")


def _abs_integral(f: SampledField, extra: np.ndarray | None = None) -> float:
    w = _weights_2d(f.spec)
    mod = qnorm_values(f.values)
    if extra is not None:
        mod = mod * extra
    return float(np.sum(w * mod))


def _origin_index(spec: GridSpec) -> tuple[int, int]:
    r = int(round(-spec.x1_min / spec.h1))
    c = int(round(-spec.x2_min / spec.h2))
    if (abs(spec.x1_min + r * spec.h1) > 1e-9 * max(1.0, spec.h1)
            or abs(spec.x2_min + c * spec.h2) > 1e-9 * max(1.0, spec.h2)
            or not (0 <= r < spec.n1) or not (0 <= c < spec.n2)):
        raise ValueError("frequency grid has no node at the origin")
    return r, c


def charfn_properties(cf: CharFn, f) -> dict:
    """Empirical property report for a characteristic function.

    Checks normalization phi(0,0) against the density integral, the
    modulus bound against integral |f| (which is 1 for a real PDF),
    component parity under (u,v) -> (-u,-v) for real densities on a
    symmetric frequency grid, and a small-shift continuity bound with
    constant C = integral |x1| |f| dx.
    """
    f = _field_of(f)
    spec = cf.spectrum.spec
    vals = cf.spectrum.values
    report: dict = {"mode": cf.mode}

    total = integrate(f)
    r0, c0 = _origin_index(spec)
    phi0 = Quaternion(*vals[r0, c0])
    report["phi_origin"] = list(phi0.components())
    report["density_integral"] = list(total.components())
    report["normalization_error"] = (phi0 - total).norm()

    mod = qnorm_values(vals)
    bound = _abs_integral(f)
    report["max_modulus"] = float(np.max(mod))
    report["modulus_bound"] = bound
    report["modulus_bound_satisfied"] = bool(np.max(mod) <= bound + 1e-9)

    f_is_real = bool(np.max(np.abs(f.values[..., 1:])) < 1e-14)
    report["density_is_real"] = f_is_real
    symmetric = (abs(spec.x1_min + spec.x1_max) < 1e-9
                 and abs(spec.x2_min + spec.x2_max) < 1e-9)
    if f_is_real and symmetric:
        flipped = vals[::-1, ::-1]
        # real density: components of phi are (even, odd, odd, even)
        # under point reflection of (u, v).
        signs = (1.0, -1.0, -1.0, 1.0)
        err = max(float(np.max(np.abs(flipped[..., l] - s * vals[..., l])))
                  for l, s in enumerate(signs))
        report["parity_max_error"] = err

    c_bound = _abs_integral(f, np.abs(f.spec.x1_nodes())[:, None])
    step = float(np.max(qnorm_values(np.diff(vals, axis=0))))
    report["continuity_max_step"] = step
    report["continuity_bound"] = c_bound * spec.h1
    report["continuity_satisfied"] = bool(step <= c_bound * spec.h1 + 1e-9)
    return report


def invert_charfn(cf: CharFn, space: GridSpec) -> SampledField:
    """Recover the density from its characteristic function.

    Fourier mode integrates e^{-iux1} phi e^{-jvx2} over the frequency
    box with normalization 1/(2*pi)^2; lct mode delegates to the
    canonical-transform inverse (b != 0 axes only).
    """
    if cf.mode == "lct":
        return lct_inverse(cf.spectrum, space)
    spec = cf.spectrum.spec
    u, v = spec.x1_nodes(), spec.x2_nodes()
    x1, x2 = space.x1_nodes(), space.x2_nodes()
    wu = quad_weights_1d(spec.n1, spec.h1)
    wv = quad_weights_1d(spec.n2, spec.h2)
    kl = np.exp(-1j * np.outer(x1, u)) * wu[None, :]
    kr = np.exp(-1j * np.outer(v, x2)) * wv[:, None]
    scale = 1.0 / (2.0 * math.pi) ** 2
    return SampledField(space, scale * _sandwich(cf.spectrum.values, kl, kr))


def fd_moment(f, m: int, n: int, h: float = 1e-3) -> Quaternion:
    """Moment E[X1^m X2^n] from finite differences of the fourier-mode
    characteristic function at the origin.

    Central differences on a 3x3 stencil of spacing h give the raw
    derivative; the kernel sides contribute i^m on the left and j^n on
    the right, so the moment is i^{-m} (FD) j^{-n}.  Limited to
    m + n <= 2; h below 1e-5 is rejected to avoid cancellation.
    """
    if m < 0 or n < 0 or m + n > 2:
        raise ValueError("fd_moment supports orders with m + n <= 2")
    if h < 1e-5:
        raise ValueError("h below 1e-5 loses the moment to cancellation")
    f = _field_of(f)
    stencil = GridSpec(-h, h, -h, h, 3, 3)
    phi = charfn(f, stencil, mode="fourier").spectrum.values

    def q(r, c):
        return Quaternion(*phi[r, c])

    if (m, n) == (0, 0):
        return q(1, 1)
    if (m, n) == (1, 0):
        fd = (q(2, 1) - q(0, 1)) / (2.0 * h)
    elif (m, n) == (0, 1):
        fd = (q(1, 2) - q(1, 0)) / (2.0 * h)
    elif (m, n) == (1, 1):
        fd = (q(2, 2) - q(2, 0) - q(0, 2) + q(0, 0)) / (4.0 * h * h)
    elif (m, n) == (2, 0):
        fd = (q(2, 1) - 2.0 * q(1, 1) + q(0, 1)) / (h * h)
    else:
        fd = (q(1, 2) - 2.0 * q(1, 1) + q(1, 0)) / (h * h)

    left = Quaternion(1.0)
    for _ in range(m):
        left = mul(left, inverse(I))
    right = Quaternion(1.0)
    for _ in range(n):
        right = mul(right, inverse(J))
    return mul(mul(left, fd), right)


@dataclass(frozen=True)
class MomentReport:
    """First and second moments with covariance in both factor orders.

    cov_12 = E[X1X2] - E[X1] E[X2] and cov_21 = E[X1X2] - E[X2] E[X1];
    the two differ by the commutator of the means.
    """

    e_x1: Quaternion
    e_x2: Quaternion
    e_x1x2: Quaternion
    e_x1sq: Quaternion
    e_x2sq: Quaternion
    var_x1: Quaternion
    var_x2: Quaternion
    cov_12: Quaternion
    cov_21: Quaternion
    resolution: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {k: list(getattr(self, k).components())
             for k in ("e_x1", "e_x2", "e_x1x2", "e_x1sq", "e_x2sq",
                       "var_x1", "var_x2", "cov_12", "cov_21")}
        d["resolution"] = dict(self.resolution)
        return d


def covariance(f) -> MomentReport:
    """Moments, variances and both covariance orders of the density."""
    f = _field_of(f)
    e1 = expectation(f, "x1")
    e2 = expectation(f, "x2")
    e12 = expectation(f, "x1x2")
    e1sq = expectation(f, "x1^2")
    e2sq = expectation(f, "x2^2")
    return MomentReport(
        e_x1=e1, e_x2=e2, e_x1x2=e12, e_x1sq=e1sq, e_x2sq=e2sq,
        var_x1=e1sq - mul(e1, e1),
        var_x2=e2sq - mul(e2, e2),
        cov_12=e12 - mul(e1, e2),
        cov_21=e12 - mul(e2, e1),
        resolution=f.spec.to_dict(),
    )
