import numpy as np
import pytest
from hypothesis import given, strategies as st

from helpers import FD_REL, effective_mismatches, random_inputs
from mcxc.effective import (
    effective_eval, effective_first_derivs, effective_integrand, effective_second_derivs,
)
from mcxc.functionals import LOCAL_TOYS, LinearCombination, PairPower, get_functional

LOCAL = ["slater_lsda", *LOCAL_TOYS]
# degree of each homogeneous integrand in its odd variables
HOMOGENEOUS = {"toy1_gga": 2, "toy2_gga": 2, "toy3_mgga": 2, "toy6_mgga_u": 2}


def test_toy1_effective_is_three_times_collinear(rng):
    func = get_functional("toy1_gga")
    x = rng.normal(size=(10, 3))
    c = func.evaluate(x, 1)
    assert np.allclose(effective_integrand(c, x), 3 * c.f, rtol=1e-15)


def test_toy5_pair_integrand_effective_is_five_times(rng):
    func = PairPower(2)
    x = rng.normal(size=(10, 2))
    c = func.evaluate(x, 1)
    assert np.allclose(effective_integrand(c, x), 5 * c.f, rtol=1e-14)


def test_zero_odd_values_leave_integrand_unchanged(rng):
    func = get_functional("slater_lsda")
    x = random_inputs(func, rng, 10)
    x[:, 1] = 0.0
    c = func.evaluate(x, 2)
    assert np.array_equal(effective_integrand(c, x[:, 1:]), c.f)
    d1 = effective_first_derivs(c, x[:, 1:])
    assert np.array_equal(d1[:, 0], c.d1[:, 0])
    assert np.array_equal(d1[:, 1], 2 * c.d1[:, 1])


def test_toy1_first_derivative_example():
    func = get_functional("toy1_gga")
    x = np.array([1.0, 0.0, 0.0])
    d1 = effective_first_derivs(func.evaluate(x, 2), x)
    assert np.array_equal(d1, [6.0, 0.0, 0.0])


def test_toy3_first_derivative_example():
    func = get_functional("toy3_mgga")
    x = np.array([1.0, 0.0])
    d1 = effective_first_derivs(func.evaluate(x, 2), x)
    assert d1[0] == 0.0 and d1[1] == 3.0


def test_toy1_second_derivative_example():
    func = get_functional("toy1_gga")
    x = np.array([0.3, -0.2, 0.9])
    d2 = effective_second_derivs(func.evaluate(x, 3), x)
    assert np.array_equal(d2, 6.0 * np.eye(3))


def test_slater_mixed_block_vanishes_at_zero_polarization():
    func = get_functional("slater_lsda")
    x = np.array([0.8, 0.0])
    d2 = effective_second_derivs(func.evaluate(x, 3), x[1:])
    assert d2[0, 1] == 0.0 and d2[1, 0] == 0.0


@pytest.mark.parametrize("fid", LOCAL)
def test_effective_derivatives_match_finite_differences(fid, rng):
    func = get_functional(fid)
    assert max(effective_mismatches(func, random_inputs(func, rng))) < FD_REL


@pytest.mark.parametrize("fid", LOCAL)
def test_effective_hessian_symmetric(fid, rng):
    func = get_functional(fid)
    x = random_inputs(func, rng, 20)
    d2 = effective_second_derivs(func.evaluate(x, 3), x[:, func.varset.is_chi])
    assert np.abs(d2 - np.swapaxes(d2, -1, -2)).max() <= 1e-13


@pytest.mark.parametrize("fid,k", sorted(HOMOGENEOUS.items()))
def test_euler_degree_law(fid, k, rng):
    func = get_functional(fid)
    x = random_inputs(func, rng)
    c = func.evaluate(x, 1)
    got = effective_integrand(c, x[:, func.varset.is_chi])
    assert np.abs(got - (k + 1) * c.f).max() <= 1e-13 * max(np.abs(c.f).max(), 1)


@given(st.floats(-3, 3), st.floats(-3, 3))
def test_transform_is_linear(a, b):
    rng = np.random.default_rng(1)
    combo = LinearCombination([(a, "toy2_gga"), (b, "toy1_gga")])
    x = random_inputs(combo, rng, 15)
    chi = x[:, combo.varset.is_chi]
    whole = effective_integrand(combo.evaluate(x, 1), chi)
    t2 = effective_integrand(get_functional("toy2_gga").evaluate(x, 1), chi)
    t1 = effective_integrand(get_functional("toy1_gga").evaluate(x[:, 4:], 1), chi[:, 1:])
    assert np.allclose(whole, a * t2 + b * t1, rtol=0, atol=1e-13)


@given(st.floats(-5, 5))
def test_constant_shift_passes_through(shift):
    rng = np.random.default_rng(2)
    base = get_functional("toy3_mgga")
    shifted = LinearCombination([(1.0, base)], constant=shift)
    x = random_inputs(base, rng, 10)
    a = effective_integrand(shifted.evaluate(x, 1), x)
    b = effective_integrand(base.evaluate(x, 1), x)
    assert np.allclose(a - b, shift, rtol=0, atol=1e-13)


def test_missing_partials_raise():
    func = get_functional("toy1_gga")
    x = np.ones(3)
    with pytest.raises(ValueError, match="order 1"):
        effective_integrand(func.evaluate(x, 0), x)
    with pytest.raises(ValueError, match="order 2"):
        effective_first_derivs(func.evaluate(x, 1), x)
    with pytest.raises(ValueError, match="order 3"):
        effective_second_derivs(func.evaluate(x, 2), x)
    with pytest.raises(ValueError, match="odd values"):
        effective_integrand(func.evaluate(x, 1), np.ones(2))


def test_effective_eval_bundle(rng):
    func = get_functional("toy2_gga")
    x = random_inputs(func, rng, 5)
    chi = x[:, func.varset.is_chi]
    out = effective_eval(func.evaluate(x, 3), chi, order=2)
    assert np.array_equal(out.f, effective_integrand(func.evaluate(x, 1), chi))
    assert out.d2.shape == (5, 7, 7)


@pytest.mark.parametrize("fid,factor", [("toy4_nonlocal", 3), ("toy5_nonlocal", 5)])
def test_nonlocal_effective_factor(fid, factor, rng):
    func = get_functional(fid)
    s, w = rng.normal(size=(20, 4)), rng.uniform(0.1, 1, 20)
    assert np.allclose(func.effective_energy(s, w), factor * func.energy(s, w), rtol=1e-13)


def test_integral_identity(blob):
    from mcxc.engine import integrate
    from mcxc.fields import project
    func = get_functional("toy2_gga")
    x = project(blob, (0.6, 0.0, 0.8)).as_slots()[..., func.varset.slots()]
    chi = x[..., func.varset.is_chi]
    c = func.evaluate(x, 1)
    lhs = integrate(blob.w, effective_integrand(c, chi))
    rhs = integrate(blob.w, c.f) + integrate(blob.w, np.einsum("pj,pj->p", chi, c.d1[:, 3:]))
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-14)
