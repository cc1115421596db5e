import numpy as np
import pytest
from scipy import integrate
from scipy.special import ellipk

from h2moduli import hyperelliptic as he


def continued_integrand(cfg, i, j, power, anchor):
    """r z^p sqrt(1-t^2) / w on [lambda_i, lambda_j], w followed by nearest-root continuation.

    The sign is fixed once, at t = 0, from ``anchor``; everything else is independent of the library's branch.
    """
    lam = cfg.finite
    p, q = lam[i - 1], lam[j - 1]
    m, r = (p + q) / 2, (q - p) / 2

    def h2(t):
        z = m + r * t
        others = np.prod([z - x for k, x in enumerate(lam) if k not in (i - 1, j - 1)])
        # (z - p)(z - q) = -r^2 (1 - t^2), so the sqrt(1 - t^2) factors cancel
        return (r * z**power) ** 2 / (-(r**2) * others)

    grid = np.linspace(0, 1, 4001)
    signs = {}
    for direction in (1, -1):
        prev = anchor
        for t in grid * direction:
            v = np.sqrt(h2(t))
            prev = v if abs(v - prev) <= abs(v + prev) else -v
            signs[round(float(t), 6)] = prev

    def f(t):
        v = np.sqrt(h2(t))
        ref = signs[round(float(np.round(t * 4000) / 4000), 6)]
        return v if abs(v - ref) <= abs(v + ref) else -v

    return f


def adaptive_segment(cfg, i, j, power, anchor):
    f = continued_integrand(cfg, i, j, power, anchor)
    kw = dict(weight="alg", wvar=(-0.5, -0.5), limit=200, epsabs=1e-13, epsrel=1e-13)
    re = integrate.quad(lambda t: f(t).real, -1, 1, **kw)[0]
    im = integrate.quad(lambda t: f(t).imag, -1, 1, **kw)[0]
    return re + 1j * im


def test_genus_one_segment_elliptic_oracle():
    cfg = he.BranchConfig((0, 1, -1, "inf"))
    val = he.segment_integral(cfg, 1, 2, 0)
    oracle = np.sqrt(2) * ellipk(0.5)  # int_0^1 dx / sqrt(x (1 - x)(1 + x))
    # w^2 < 0 on (0, 1), so the value is imaginary with the oracle's modulus
    assert abs(abs(val) - oracle) < 1e-9
    assert abs(val.real) < 1e-12


def test_reversal_negates():
    cfg = he.BranchConfig.normalized([2.1, 3.4, 0.5 + 1.2j])
    for i, j in ((1, 2), (2, 3), (4, 5), (3, 4)):
        for p in (0, 1, 3):
            a = he.segment_integral(cfg, i, j, p)
            b = he.segment_integral(cfg, j, i, p)
            assert abs(a + b) < 1e-12 * max(1, abs(a))


@pytest.mark.parametrize("seg", [(2, 3), (4, 5), (1, 2), (3, 4)])
@pytest.mark.parametrize("power", [0, 1, 4])
def test_segment_matches_adaptive_quadrature(seg, power):
    cfg = he.BranchConfig.normalized([2.1 + 0.4j, 3.4 - 0.3j, 0.5 + 1.2j])
    i, j = seg
    val = he.segment_integral(cfg, i, j, power)
    W = he._branch(cfg)
    lam = cfg.finite
    mid = (lam[i - 1] + lam[j - 1]) / 2
    r = (lam[j - 1] - lam[i - 1]) / 2
    cut = he._cut_index(cfg, i - 1, j - 1)
    if cut is None:
        w_mid = W((mid - lam)[:, None])[0]
    else:
        w_mid = he._left_cut_value(cfg, cut, mid)
    anchor = r * mid**power / w_mid
    oracle = adaptive_segment(cfg, i, j, power, anchor)
    assert abs(val - oracle) < 1e-9 * max(1, abs(oracle))


def test_third_branch_point_near_segment_reported():
    cfg = he.BranchConfig((0, 1, 0.5 + 1e-11j, "inf"))
    with pytest.raises(he.QuadratureError):
        he.segment_integral(cfg, 1, 2, 0)


@pytest.mark.parametrize("lam3", [1.5, 2.0, 4.0, 10.0])
def test_genus_one_tau_against_elliptic_integrals(lam3):
    pd = he.period_matrix(he.BranchConfig.normalized([lam3]))
    m = 1 / lam3
    # a runs over [1, lambda_3], b around [0, 1]
    tau = 1j * ellipk(m) / ellipk(1 - m)
    assert abs(pd.matrix[0, 0] - tau) < 1e-9
    assert abs(abs(pd.A[0, 0]) - 4 / np.sqrt(lam3) * ellipk(1 - m)) < 1e-9
    assert abs(abs(pd.B[0, 0]) - 4 / np.sqrt(lam3) * ellipk(m)) < 1e-9


@pytest.mark.parametrize("lam3", [1.5, 2.0, 4.0, 10.0])
def test_genus_one_recovery_from_oracle_tau(lam3):
    m = 1 / lam3
    tau = 1j * ellipk(m) / ellipk(1 - m)
    pd = he.PeriodData(A=np.eye(1), B=np.array([[tau]]), Pi=he.SiegelPoint(np.array([[tau]])))
    assert abs(he.recover_branch_point(pd, 3) - lam3) < 1e-7


def test_genus_one_complex_roundtrip():
    for lam3 in (-1 + 1j, 3 + 0.5j, 0.4 - 2j):
        pd = he.period_matrix(he.BranchConfig.normalized([lam3]))
        assert pd.matrix[0, 0].imag > 0
        assert abs(he.recover_branch_point(pd, 3) - lam3) < 1e-7


def test_riemann_relations_on_corpus():
    for cfg in he.random_corpus(20, seed=7):
        pd = he.period_matrix(cfg)
        assert pd.symmetry_defect < 1e-8
        assert np.all(np.linalg.eigvalsh(pd.matrix.imag) > 0)


def test_real_increasing_roundtrip():
    cfg = he.BranchConfig.normalized([2.1, 3.4, 5.0])
    rec = he.recover_all(he.period_matrix(cfg))
    assert np.max(np.abs(rec.finite - cfg.finite)) < 1e-6


def test_half_period_table_agrees_with_abel_map():
    for cfg in he.random_corpus(5, seed=11):
        pd = he.period_matrix(cfg)
        table = he.half_periods(pd)
        for j in range(1, 6):
            diff = he.abel_map(cfg, pd, j) - table[j - 1].value
            e, p = he.lattice_coordinates(diff, pd.matrix)
            assert np.allclose(e, np.round(e), atol=1e-9)
            assert np.allclose(p, np.round(p), atol=1e-9)


def test_half_period_values():
    pd = he.period_matrix(he.BranchConfig.normalized([2.1, 3.4, 0.5 + 1.2j]))
    hp = he.half_periods(pd)
    assert np.allclose(hp[0].value, 0)
    assert np.allclose(hp[1].value, 0.5 * pd.matrix[:, 0])
    assert np.allclose(hp[5].value, [0.5, 0])
    for point in hp:
        for part in point.coords:
            assert np.all((part >= 0) & (part < 1))


def test_quotient_is_one_at_p2():
    pd = he.period_matrix(he.BranchConfig.normalized([2.1, 3.4, 0.5 + 1.2j]))
    num, den = he.recovery_characteristics(2)
    pts = he.half_periods(pd, reduce=False)
    assert abs(he.theta_quotient(pd, num, den, pts[1].value, pts[1].value) - 1) < 1e-8


def test_degenerate_index():
    pd = he.period_matrix(he.BranchConfig.normalized([2.1, 3.4, 5.0]))
    with pytest.raises(he.DegenerateIndexError):
        he.recover_branch_point(pd, 5)
    with pytest.raises(he.DegenerateIndexError):
        he.recover_branch_point(pd, 2)


def test_lambda5_calibration_still_holds():
    pairs = he.calibrate_last_branch_point(he.random_corpus(12, seed=2024))
    assert he.LAMBDA5_CHARACTERISTICS in pairs


def test_recovery_idempotent():
    cfg = he.random_corpus(1, seed=5)[0]
    once = he.recover_all(he.period_matrix(cfg))
    twice = he.recover_all(he.period_matrix(once))
    assert np.max(np.abs(once.finite - twice.finite)) < 1e-6


def test_continuity_smoke():
    cfg = he.BranchConfig.normalized([2.1, 3.4, 0.5 + 1.2j])
    base = he.period_matrix(cfg).matrix
    for delta in (1e-4, 1e-6):
        moved = he.BranchConfig.normalized([2.1 + delta, 3.4, 0.5 + 1.2j + delta * 1j])
        diff = np.max(np.abs(he.period_matrix(moved).matrix - base))
        assert diff < 50 * delta


def test_config_validation_errors():
    with pytest.raises(he.BranchConfigError):
        he.BranchConfig((0, 1, 1, "inf"))
    with pytest.raises(he.BranchConfigError):
        he.BranchConfig((0, 1, 2))
    with pytest.raises(he.BranchConfigError, match="intersect"):
        he.BranchConfig.normalized([-1 + 1j, -2 + 0.5j, 3 + 2j]).validate_cut_system()
    with pytest.raises(he.BranchConfigError, match="reorder"):
        he.period_matrix(he.BranchConfig((0, 1, -1, "inf")))
    with pytest.raises(he.BranchConfigError):
        he.period_matrix(he.BranchConfig((0, 2, 3, "inf")))


def test_flipped_orientation_is_caught():
    cfg = he.BranchConfig.normalized([2.1, 3.4, 0.5 + 1.2j])
    A, B = he.raw_periods(cfg)
    signs = he.intersection_signs(cfg)
    wrong = np.linalg.solve(A, -B * signs)
    assert np.any(np.linalg.eigvalsh(wrong.imag) < 0)
