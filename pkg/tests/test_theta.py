import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from h2moduli import theta as th


def theta_1d_char(a, b, z, tau):
    """1-D theta with characteristic via the shift identity, from the plain series."""
    shift = np.exp(1j * np.pi * a * a * tau / 4 + 1j * np.pi * a * (z + b / 2))
    return shift * th.theta_1d(z + a * tau / 2 + b / 2, tau)


def random_siegel(rng, g=2, lo=0.5, hi=2.0):
    q, _ = np.linalg.qr(rng.normal(size=(g, g)))
    Y = q @ np.diag(rng.uniform(lo, hi, g)) @ q.T
    Xr = rng.uniform(-1, 1, (g, g))
    return th.SiegelPoint(0.5 * (Xr + Xr.T) + 1j * Y)


def test_theta_constant_at_i_identity():
    val = th.theta(th.ThetaCharacteristic((0, 0), (0, 0)), [0, 0], 1j * np.eye(2))
    assert abs(val - 1.1803405990160962) < 1e-12
    assert abs(val - th.theta_1d(0, 1j) ** 2) < 1e-12


def test_siegel_validation():
    with pytest.raises(th.SiegelPointError):
        th.SiegelPoint(np.array([[1j, 0.1], [0.2, 1j]]))
    with pytest.raises(th.SiegelPointError):
        th.SiegelPoint(np.array([[-1j, 0], [0, 1j]]))
    with pytest.raises(th.SiegelPointError):
        th.SiegelPoint(np.array([[1j, np.nan], [np.nan, 1j]]))


def test_input_validation():
    c = th.ThetaCharacteristic((0, 0), (0, 0))
    with pytest.raises(ValueError):
        th.theta(c, [0, 0, 0], 1j * np.eye(2))
    with pytest.raises(ValueError):
        th.theta(c, [0, 0], 1j * np.eye(2), tol=1e-20)
    with pytest.raises(ValueError):
        th.ThetaCharacteristic((0,), (0, 1))


def test_truncation_error_for_degenerate_sigma():
    c = th.ThetaCharacteristic((0, 0), (0, 0))
    with pytest.raises(th.ThetaTruncationError):
        th.theta(c, [0, 0], np.diag([1e-9j, 1j]))


def test_exactly_six_odd_characteristics_vanish(rng):
    sigma = random_siegel(rng)
    vanishing = [c for c in th.half_integer_characteristics(2) if abs(th.theta(c, [0, 0], sigma)) < 1e-12]
    assert len(vanishing) == 6
    assert all(c.parity == 1 for c in vanishing)


def test_diagonal_factorization(rng):
    for _ in range(20):
        t1, t2 = rng.uniform(-1, 1, 2) + 1j * rng.uniform(0.5, 2, 2)
        z = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-1, 1, 2)
        e, ep = rng.integers(0, 2, 2), rng.integers(0, 2, 2)
        got = th.theta(th.ThetaCharacteristic(e, ep), z, np.diag([t1, t2]))
        want = theta_1d_char(e[0], ep[0], z[0], t1) * theta_1d_char(e[1], ep[1], z[1], t2)
        assert abs(got - want) < 1e-11


def test_tail_bound_decreasing():
    vals = [th.tail_bound(r, 0.7, 2) for r in range(8)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_tolerance_is_honoured(rng):
    sigma = random_siegel(rng, lo=0.3, hi=1.0)
    c = th.ThetaCharacteristic((1, 0), (0, 1))
    z = np.array([0.3 + 0.4j, -0.2 + 0.1j])
    rough = th.theta(c, z, sigma, tol=1e-6)
    fine = th.theta(c, z, sigma, tol=1e-14)
    assert abs(rough - fine) < 1e-6


def test_genus_one_matches_oracle():
    for tau in (1j, 0.3 + 0.8j, -0.4 + 1.7j):
        for z in (0, 0.2 + 0.1j):
            got = th.theta(th.ThetaCharacteristic((0,), (0,)), [z], [[tau]])
            assert abs(got - th.theta_1d(z, tau)) < 1e-12


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_transformation_laws(seed):
    rng = np.random.default_rng(seed)
    sigma = random_siegel(rng)
    z = rng.uniform(-2, 2, 2) + 1j * rng.uniform(-2, 2, 2)
    c = th.ThetaCharacteristic(rng.integers(0, 2, 2), rng.integers(0, 2, 2))
    nu, nup = rng.integers(-2, 3, 2), rng.integers(-2, 3, 2)
    for k in range(2):
        res = th.quasiperiodicity_residuals(c, z, sigma, k, nu, nup)
        assert res.max() < 1e-10


def test_absolute_residuals_grow_with_envelope():
    sigma = th.SiegelPoint(np.diag([1j, 1j]))
    c = th.ThetaCharacteristic((0, 0), (0, 0))
    z = np.array([0.1 + 3j, 0.2 - 2j])
    raw = th.quasiperiodicity_residuals(c, z, sigma, 0, absolute=True)
    scaled = th.quasiperiodicity_residuals(c, z, sigma, 0)
    assert th.envelope(z, sigma) > 1e10
    assert scaled.max() < 1e-10
    assert raw.max() >= scaled.max()
