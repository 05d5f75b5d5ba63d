"""Probability layer: density validation, characteristic functions,
moments, covariance."""

import math

import numpy as np
import pytest

from qlct2d.field import GridSpec, SampledField, integrate
from qlct2d.lct import fourier_params
from qlct2d.prob import (CharFn, Qpdf, charfn, charfn_properties, covariance,
                         expectation, fd_moment, invert_charfn, validate_qpdf)
from qlct2d.quaternion import Quaternion, isclose, mul
from qlct2d.transform import forward


def _uniform(n: int = 65) -> SampledField:
    spec = GridSpec(0.0, 1.0, 0.0, 1.0, n, n)
    v = np.zeros((n, n, 4))
    v[..., 0] = 1.0
    return SampledField(spec, v)


def _gaussian_pdf(n: int = 129, box: float = 8.0) -> SampledField:
    spec = GridSpec(-box, box, -box, box, n, n)
    x1 = spec.x1_nodes()[:, None]
    x2 = spec.x2_nodes()[None, :]
    v = np.zeros((n, n, 4))
    v[..., 0] = np.exp(-(x1 ** 2 + x2 ** 2) / 2.0) / (2.0 * math.pi)
    return SampledField(spec, v)


def _example2(n: int = 129) -> SampledField:
    spec = GridSpec(0.0, 1.0, 0.0, 1.0, n, n)
    x1 = spec.x1_nodes()[:, None]
    x2 = spec.x2_nodes()[None, :]
    v = np.zeros((n, n, 4))
    v[..., 0] = np.broadcast_to(x1, (n, n))
    v[..., 2] = np.broadcast_to(x2, (n, n))
    return SampledField(spec, v)


def test_validate_relaxed_accepts_real_pdf():
    rep = validate_qpdf(_gaussian_pdf(), "relaxed")
    assert rep.relaxed_ok
    assert rep.qpdf is not None
    assert isinstance(rep.qpdf, Qpdf)
    assert rep.total_integral.q0 == pytest.approx(1.0, abs=1e-6)
    # strict mode also runs: the three zero components have no mass
    assert not rep.strict_ok


def test_validate_strict_requires_unit_mass_components():
    # uniform value 1/4 on [0,2]^2: scalar mass 1, the rest 0
    spec = GridSpec(0.0, 2.0, 0.0, 2.0, 33, 33)
    v = np.zeros((33, 33, 4))
    v[..., 0] = 0.25
    rep = validate_qpdf(SampledField(spec, v), "strict")
    assert rep.relaxed_ok and not rep.strict_ok
    assert rep.qpdf is None
    assert any("integrates to" in s for s in rep.violations)
    # with all four components unit-mass it passes strict
    v4 = np.full((33, 33, 4), 0.25)
    rep4 = validate_qpdf(SampledField(spec, v4), "strict")
    assert rep4.strict_ok and rep4.qpdf is not None


def test_validate_reports_negativity():
    spec = GridSpec(0.0, 2.0, 0.0, 2.0, 33, 33)
    x1 = spec.x1_nodes()[:, None]
    x2 = spec.x2_nodes()[None, :]
    v = np.zeros((33, 33, 4))
    v[..., 0] = 1.0
    v[..., 1] = np.broadcast_to(x1 ** 2 - x2 ** 2, (33, 33))
    rep = validate_qpdf(SampledField(spec, v), "relaxed")
    assert not rep.relaxed_ok
    assert rep.qpdf is None
    assert any("negative" in s for s in rep.violations)
    d = rep.to_dict()
    assert d["accepted"] is False and d["violations"]


def test_validate_rejects_unknown_mode():
    with pytest.raises(ValueError, match="mode"):
        validate_qpdf(_uniform(), "lenient")


def test_expectation_named_and_tuple_weights():
    u = _uniform()
    assert expectation(u, "x1").q0 == pytest.approx(0.5, abs=1e-12)
    assert expectation(u, "x2").q0 == pytest.approx(0.5, abs=1e-12)
    assert expectation(u, "x1x2").q0 == pytest.approx(0.25, abs=1e-12)
    assert expectation(u, "x1^2").q0 == pytest.approx(1.0 / 3.0, abs=1e-12)
    assert expectation(u, (2, 1)).q0 == pytest.approx(1.0 / 6.0, abs=1e-12)
    with pytest.raises(ValueError):
        expectation(u, "x3")
    with pytest.raises(ValueError):
        expectation(u, (-1, 0))


def test_charfn_origin_equals_mass():
    u = _uniform()
    freq = GridSpec(-4.0, 4.0, -4.0, 4.0, 17, 17)
    cf = charfn(u, freq)
    assert cf.mode == "fourier"
    assert isclose(cf.at(8, 8), Quaternion(1.0), rel_tol=1e-9, abs_tol=1e-9)


def test_charfn_uniform_closed_form():
    # phi(u, v) = [(e^{iu}-1)/(iu)]_i [(e^{jv}-1)/(jv)]_j
    u = _uniform(257)
    freq = GridSpec(-3.0, 3.0, -3.0, 3.0, 13, 13)
    cf = charfn(u, freq)
    uu = freq.x1_nodes()
    vv = freq.x2_nodes()

    def factor(t):
        out = np.full(t.shape, 1.0 + 0.0j)
        nz = t != 0.0
        out[nz] = (np.exp(1j * t[nz]) - 1.0) / (1j * t[nz])
        return out

    fu = factor(uu)
    fv = factor(vv)
    expected = np.empty((13, 13, 4))
    expected[..., 0] = fu.real[:, None] * fv.real[None, :]
    expected[..., 1] = fu.imag[:, None] * fv.real[None, :]
    expected[..., 2] = fu.real[:, None] * fv.imag[None, :]
    expected[..., 3] = fu.imag[:, None] * fv.imag[None, :]
    assert np.max(np.abs(cf.spectrum.values - expected)) <= 1e-8


def test_charfn_properties_real_pdf():
    g = _gaussian_pdf()
    freq = GridSpec(-4.0, 4.0, -4.0, 4.0, 33, 33)
    props = charfn_properties(charfn(g, freq), g)
    assert props["normalization_error"] <= 1e-6
    assert props["max_modulus"] <= 1.0 + 1e-9
    assert props["modulus_bound_satisfied"]
    assert props["parity_max_error"] <= 1e-8
    assert props["continuity_satisfied"]


def test_charfn_modulus_bound_quaternion_density():
    # four equal gaussian components: integral |f| = 2 and max |phi|
    # approaches it at the origin, exceeding the real-PDF bound of 1
    g = _gaussian_pdf()
    v = np.repeat(g.values[..., :1], 4, axis=-1)
    q = SampledField(g.spec, v)
    freq = GridSpec(-2.0, 2.0, -2.0, 2.0, 9, 9)
    props = charfn_properties(charfn(q, freq), q)
    assert props["modulus_bound"] == pytest.approx(2.0, abs=1e-6)
    assert 1.5 <= props["max_modulus"] <= 2.0 + 1e-9
    assert props["modulus_bound_satisfied"]


def test_charfn_factorizes_for_independent_marginals():
    g = _gaussian_pdf(129)
    freq = GridSpec(-3.0, 3.0, -3.0, 3.0, 13, 13)
    cf = charfn(g, freq)
    # standard normal marginals: phi(u, v) = e^{-u^2/2} e^{-v^2/2},
    # purely scalar
    uu = freq.x1_nodes()[:, None]
    vv = freq.x2_nodes()[None, :]
    expected = np.zeros((13, 13, 4))
    expected[..., 0] = np.exp(-(uu ** 2 + vv ** 2) / 2.0)
    assert np.max(np.abs(cf.spectrum.values - expected)) <= 1e-6


def test_charfn_lct_mode_is_forward_transform():
    f = _example2()
    freq = GridSpec(-4.0, 4.0, -4.0, 4.0, 9, 9)
    cf = charfn(f, freq, mode="lct", params=fourier_params())
    s = forward(f, fourier_params(), freq)
    assert np.array_equal(cf.spectrum.values, s.values)
    with pytest.raises(ValueError):
        charfn(f, freq, mode="lct")
    with pytest.raises(ValueError):
        charfn(f, freq, mode="mellin")


def test_charfn_mode_validation():
    f = _uniform()
    freq = GridSpec(-1.0, 1.0, -1.0, 1.0, 5, 5)
    s = charfn(f, freq).spectrum
    with pytest.raises(ValueError):
        CharFn(s, "banana")
    with pytest.raises(ValueError):
        CharFn(s, "lct")  # no params on a fourier-built spectrum


def test_charfn_properties_need_origin_node():
    f = _uniform()
    freq = GridSpec(0.5, 1.5, 0.5, 1.5, 5, 5)
    cf = charfn(f, freq)
    with pytest.raises(ValueError, match="origin"):
        charfn_properties(cf, f)


def test_inversion_roundtrip_gaussian():
    g = _gaussian_pdf(129)
    freq = GridSpec(-8.0, 8.0, -8.0, 8.0, 129, 129)
    rec = invert_charfn(charfn(g, freq), g.spec)
    rel = np.sqrt(np.sum((rec.values - g.values) ** 2)) \
        / np.sqrt(np.sum(g.values ** 2))
    assert rel <= 1e-3


def test_inversion_roundtrip_lct_mode():
    g = _gaussian_pdf(129)
    freq = GridSpec(-8.0, 8.0, -8.0, 8.0, 129, 129)
    cf = charfn(g, freq, mode="lct", params=fourier_params())
    rec = invert_charfn(cf, g.spec)
    rel = np.sqrt(np.sum((rec.values - g.values) ** 2)) \
        / np.sqrt(np.sum(g.values ** 2))
    assert rel <= 1e-3


def test_inversion_roundtrip_example2_interior():
    # bounded support causes Gibbs ringing at the box edge; compare on
    # the interior only
    f = _example2(129)
    freq = GridSpec(-200.0, 200.0, -200.0, 200.0, 801, 801)
    rec = invert_charfn(charfn(f, freq), f.spec)
    sl = slice(20, -20)
    diff = rec.values[sl, sl] - f.values[sl, sl]
    rel = np.sqrt(np.sum(diff ** 2)) / np.sqrt(np.sum(f.values[sl, sl] ** 2))
    assert rel <= 1e-2


def test_fd_moment_uniform():
    u = _uniform(201)
    assert isclose(fd_moment(u, 0, 0), Quaternion(1.0),
                   rel_tol=1e-8, abs_tol=1e-8)
    assert isclose(fd_moment(u, 1, 0), Quaternion(0.5),
                   rel_tol=0.0, abs_tol=1e-5)
    assert isclose(fd_moment(u, 0, 1), Quaternion(0.5),
                   rel_tol=0.0, abs_tol=1e-5)
    assert isclose(fd_moment(u, 1, 1), Quaternion(0.25),
                   rel_tol=0.0, abs_tol=1e-4)
    assert isclose(fd_moment(u, 2, 0), Quaternion(1.0 / 3.0),
                   rel_tol=0.0, abs_tol=1e-3)


def test_fd_moment_convergence_order():
    u = _uniform(201)
    exact = Quaternion(0.5)
    err = [max(abs(a - b) for a, b in zip(
        fd_moment(u, 1, 0, h).components(), exact.components()))
        for h in (2e-3, 1e-3)]
    assert err[0] / err[1] >= 3.5


def test_fd_moment_guards():
    u = _uniform()
    with pytest.raises(ValueError):
        fd_moment(u, 2, 1)
    with pytest.raises(ValueError):
        fd_moment(u, -1, 0)
    with pytest.raises(ValueError):
        fd_moment(u, 1, 0, h=1e-6)


def test_covariance_uniform():
    mr = covariance(_uniform(201))
    assert mr.cov_12.norm() <= 1e-8
    assert mr.cov_21.norm() <= 1e-8
    assert isclose(mr.var_x1, Quaternion(1.0 / 12.0),
                   rel_tol=0.0, abs_tol=1e-8)
    assert isclose(mr.var_x2, Quaternion(1.0 / 12.0),
                   rel_tol=0.0, abs_tol=1e-8)
    d = mr.to_dict()
    assert d["resolution"]["n1"] == 201
    assert len(d["cov_12"]) == 4


def test_covariance_commutator_identity():
    spec = GridSpec(0.0, 2.0, 0.0, 2.0, 129, 129)
    x1 = spec.x1_nodes()[:, None]
    x2 = spec.x2_nodes()[None, :]
    v = np.empty((129, 129, 4))
    v[..., 0] = 2.0 * x1 + x2
    v[..., 1] = x1 ** 2 - x2 ** 2
    v[..., 2] = x1 * x2
    v[..., 3] = 3.0 * x1 - x2
    mr = covariance(SampledField(spec, v))
    delta = mr.cov_12 - mr.cov_21
    comm = mul(mr.e_x2, mr.e_x1) - mul(mr.e_x1, mr.e_x2)
    assert isclose(delta, comm, rel_tol=1e-10, abs_tol=1e-10)


def test_covariance_can_be_negative():
    spec = GridSpec(0.0, 1.0, 0.0, 1.0, 201, 201)
    x1 = spec.x1_nodes()[:, None]
    x2 = spec.x2_nodes()[None, :]
    v = np.zeros((201, 201, 4))
    v[..., 0] = 1.0 - (x1 - 0.5) * (x2 - 0.5)
    mr = covariance(SampledField(spec, v))
    assert mr.cov_12.q0 == pytest.approx(-1.0 / 144.0, abs=1e-8)


def test_covariance_shift_invariance():
    def density(x1_min):
        spec = GridSpec(x1_min, x1_min + 1.0, 0.0, 1.0, 201, 201)
        t1 = np.linspace(0.0, 1.0, 201)[:, None]
        x2 = spec.x2_nodes()[None, :]
        v = np.zeros((201, 201, 4))
        v[..., 0] = (1.0 + t1 * x2) / 1.25
        return SampledField(spec, v)

    base = covariance(density(0.0))
    shifted = covariance(density(0.5))
    assert isclose(base.cov_12, shifted.cov_12, rel_tol=0.0, abs_tol=1e-6)


def test_covariance_real_scaling_is_linear():
    spec = GridSpec(0.0, 1.0, 0.0, 1.0, 201, 201)
    x1 = spec.x1_nodes()[:, None]
    x2 = spec.x2_nodes()[None, :]
    v = np.zeros((201, 201, 4))
    v[..., 0] = (1.0 + x1 * x2) / 1.25
    base = covariance(SampledField(spec, v))
    # stretch x1 by a = 2: same samples on [0,2] x [0,1], density halved
    wide = GridSpec(0.0, 2.0, 0.0, 1.0, 201, 201)
    scaled = covariance(SampledField(wide, v / 2.0))
    assert isclose(scaled.cov_12, 2.0 * base.cov_12,
                   rel_tol=1e-8, abs_tol=1e-8)
    assert not isclose(scaled.cov_12, 4.0 * base.cov_12,
                       rel_tol=1e-3, abs_tol=1e-3)


def test_qpdf_support_property():
    g = _gaussian_pdf()
    q = Qpdf(g)
    assert q.support == g.spec
    assert integrate(q.field).q0 == pytest.approx(1.0, abs=1e-6)
    # probability functions accept Qpdf wrappers directly
    assert expectation(q, "x1").q0 == pytest.approx(0.0, abs=1e-9)
