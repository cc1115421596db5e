"""Period matrices of hyperelliptic curves and branch-point recovery.

The curve is w^2 = prod_{finite i} (z - lambda_i) with branch points
lambda_1 = 0, lambda_2 = 1, ..., lambda_{2g+1}, lambda_{2g+2} = infinity.

Cuts: s_k = [lambda_{2k-1}, lambda_{2k}] for k <= g, and s_{g+1} the radial
ray from lambda_{2g+1} out to infinity.  On the plane minus the cuts w has a
single-valued branch W, written as a product of explicit square roots (one
per cut), so no path-following is needed to know the sheet.

Cycles (mod-2 classes: b_k ~ {2k-1, 2k}, a_k ~ {2k, ..., 2g+1}):

* b_k is the lift of a loop around s_k; its period is 2 * int_{s_k} using the
  boundary value of W from the left of s_k.
* a_k is the lift of a thin loop around the polyline
  lambda_{2k} -> lambda_{2k+1} -> ... -> lambda_{2g+1}; it crosses s_k and
  s_{g+1} once each.  The contributions of the cuts s_{k+1}, ... that lie on
  the polyline cancel, leaving 2 * sum_{j>=k} int_{[lambda_2j, lambda_2j+1]} W.

The orientation of b_k relative to a_k is read off from the local
coordinate t = w / kappa at P_{2k}, where both loops pass.

Every segment runs between two branch points, so the integrand carries
1/sqrt endpoint singularities that Gauss-Chebyshev nodes absorb.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .theta import SiegelPoint, ThetaCharacteristic, theta

INF = math.inf
SINGULAR_DISTANCE = 1e-9
SYMMETRY_ABORT = 1e-6
MIN_NODES = 16
MAX_NODES = 1 << 16


class BranchConfigError(ValueError):
    """Branch points unusable for the fixed cut system."""


class QuadratureError(ArithmeticError):
    """A segment integral could not be computed reliably."""


class PeriodMatrixError(ArithmeticError):
    """Assembled periods violate the Riemann relations."""


class DegenerateIndexError(ValueError):
    """Both theta quotients vanish at this branch point."""


def _is_inf(x) -> bool:
    return isinstance(x, str) and x.lower() in ("inf", "infinity", "∞") or (
        isinstance(x, (int, float, complex)) and cmath.isinf(complex(x))
    )


def _coerce_point(x):
    if _is_inf(x):
        return INF
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return complex(float(x[0]), float(x[1]))
    return complex(x)


def _seg_point_distance(p: complex, q: complex, x: complex) -> float:
    d = q - p
    t = ((x - p) * d.conjugate()).real / abs(d) ** 2
    t = min(1.0, max(0.0, t))
    return abs(p + t * d - x)


def _ray_point_distance(p: complex, d: complex, x: complex) -> float:
    t = max(0.0, ((x - p) * d.conjugate()).real)
    return abs(p + t * d - x)


def _orient(a: complex, b: complex, c: complex) -> float:
    return ((b - a).conjugate() * (c - a)).imag


def _segments_cross(p1, q1, p2, q2) -> bool:
    """Proper or touching intersection of two closed segments."""
    d1, d2 = _orient(p2, q2, p1), _orient(p2, q2, q1)
    d3, d4 = _orient(p1, q1, p2), _orient(p1, q1, q2)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        return True
    scale = max(abs(p1), abs(q1), abs(p2), abs(q2), 1.0) * 1e-14
    for a, b, c in ((p2, q2, p1), (p2, q2, q1), (p1, q1, p2), (p1, q1, q2)):
        if _seg_point_distance(a, b, c) <= scale:
            return True
    return False


def _ray_hits_segment(p: complex, d: complex, a: complex, b: complex) -> bool:
    # clip the ray to a segment long enough to reach past a and b
    reach = abs(a - p) + abs(b - p) + 1.0
    return _segments_cross(p, p + reach * d, a, b)


@dataclass(frozen=True, eq=False)
class BranchConfig:
    """Ordered branch points lambda_1..lambda_{2g+2}; the last one may be infinity."""

    lambdas: tuple

    def __post_init__(self):
        lam = tuple(_coerce_point(x) for x in self.lambdas)
        if len(lam) % 2 or len(lam) < 4:
            raise BranchConfigError("need 2g+2 branch points with g >= 1")
        finite = [x for x in lam if x is not INF]
        if len(lam) - len(finite) > 1:
            raise BranchConfigError("at most one branch point at infinity")
        for i in range(len(finite)):
            for j in range(i + 1, len(finite)):
                if finite[i] == finite[j]:
                    raise BranchConfigError(f"branch points {i + 1} and {j + 1} coincide")
        object.__setattr__(self, "lambdas", lam)

    @classmethod
    def normalized(cls, interior: Sequence) -> "BranchConfig":
        """{0, 1, *interior, inf}."""
        return cls((0.0, 1.0, *interior, INF))

    @property
    def g(self) -> int:
        return len(self.lambdas) // 2 - 1

    @property
    def is_normalized(self) -> bool:
        lam = self.lambdas
        return lam[0] == 0 and lam[1] == 1 and lam[-1] is INF

    @property
    def finite(self) -> np.ndarray:
        return np.array(self.lambdas[:-1], dtype=complex)

    def cuts(self) -> list:
        """Finite cuts as (p, q) pairs plus the final ray as (start, direction)."""
        lam = self.lambdas
        out = [(lam[2 * k], lam[2 * k + 1]) for k in range(self.g)]
        start = lam[2 * self.g]
        out.append((start, start / abs(start)))
        return out

    def validate_cut_system(self) -> None:
        """Require the chain s_1, [l2, l3], s_2, ..., s_{g+1} to be a simple arc clear of other branch points."""
        if not self.is_normalized:
            raise BranchConfigError("period computations need lambda_1 = 0, lambda_2 = 1, lambda_last = inf")
        lam = self.finite
        n = len(lam)
        start, direction = lam[-1], lam[-1] / abs(lam[-1])
        pieces = [(lam[i], lam[i + 1]) for i in range(n - 1)]
        for i, (p, q) in enumerate(pieces):
            for j, x in enumerate(lam):
                if j in (i, i + 1):
                    continue
                if _seg_point_distance(p, q, x) < SINGULAR_DISTANCE:
                    raise BranchConfigError(
                        f"branch point {j + 1} lies on segment [{i + 1}, {i + 2}]; reorder the branch points"
                    )
        for j, x in enumerate(lam[:-1]):
            if _ray_point_distance(start, direction, x) < SINGULAR_DISTANCE:
                raise BranchConfigError(f"branch point {j + 1} lies on the cut to infinity; reorder")
        for i in range(len(pieces)):
            for j in range(i + 2, len(pieces)):
                if _segments_cross(*pieces[i], *pieces[j]):
                    raise BranchConfigError(
                        f"segments [{i + 1}, {i + 2}] and [{j + 1}, {j + 2}] intersect; reorder the branch points"
                    )
            # adjacent pieces must not fold back onto each other
            if i + 1 < len(pieces):
                p, q = pieces[i]
                r = pieces[i + 1][1]
                if abs(_orient(p, q, r)) <= 1e-14 * abs(q - p) * abs(r - q) and ((q - p) * (r - q).conjugate()).real < 0:
                    raise BranchConfigError(f"segments meeting at branch point {i + 2} overlap")
        for i, (p, q) in enumerate(pieces[:-1]):
            if _ray_hits_segment(start, direction, p, q):
                raise BranchConfigError(f"cut to infinity meets segment [{i + 1}, {i + 2}]; reorder")
        q = pieces[-1][0]
        if abs(_orient(q, start, start + direction)) <= 1e-14 * abs(start - q) and (
            (start - q) * direction.conjugate()
        ).real < 0:
            raise BranchConfigError("cut to infinity doubles back over the last segment")

    def to_json(self):
        return [("inf" if x is INF else [x.real, x.imag]) for x in self.lambdas]


def _branch(cfg: BranchConfig):
    """Closure computing W from the vector of differences z - lambda_i (finite i).

    ``skip`` drops one finite cut factor, used for boundary values on that cut.
    """
    g = cfg.g
    finite = cfg.finite
    start = finite[-1]
    direction = start / abs(start)
    sqrt_d = np.sqrt(direction)

    def W(diffs: np.ndarray, skip: int | None = None) -> np.ndarray:
        out = np.ones(diffs.shape[1], dtype=complex)
        for k in range(g):
            if k == skip:
                continue
            dp, dq = diffs[2 * k], diffs[2 * k + 1]
            dm = 0.5 * (dp + dq)
            out = out * dm * np.sqrt(dp * dq / (dm * dm))
        # sqrt(z - start) with the cut along the outward ray
        out = out * sqrt_d * 1j * np.sqrt(-diffs[2 * g] / direction)
        return out

    return W


def _chebyshev(n: int):
    theta_k = (2 * np.arange(1, n + 1) - 1) * np.pi / (2 * n)
    t = np.cos(theta_k)
    one_plus = 2 * np.cos(theta_k / 2) ** 2
    one_minus = 2 * np.sin(theta_k / 2) ** 2
    return t, one_plus, one_minus


def _segment_nodes(cfg: BranchConfig, i: int, j: int, n: int):
    """Nodes on [lambda_i, lambda_j] (0-based) with accurate differences to every finite branch point."""
    lam = cfg.finite
    p, q = lam[i], lam[j]
    m, r = 0.5 * (p + q), 0.5 * (q - p)
    t, one_plus, one_minus = _chebyshev(n)
    z = m + r * t
    diffs = (m - lam)[:, None] + r * t[None, :]
    diffs[i] = r * one_plus
    diffs[j] = -r * one_minus
    sq = np.sqrt(one_plus * one_minus)  # sqrt(1 - t^2)
    return z, r, diffs, sq


def _check_clearance(cfg: BranchConfig, i: int, j: int) -> None:
    lam = cfg.finite
    for k, x in enumerate(lam):
        if k in (i, j):
            continue
        if _seg_point_distance(lam[i], lam[j], x) < SINGULAR_DISTANCE:
            raise QuadratureError(f"branch point {k + 1} within {SINGULAR_DISTANCE} of segment [{i + 1}, {j + 1}]")


def _integrate(f, tol: float) -> complex:
    """Gauss-Chebyshev rule for int_{-1}^{1} f(t) dt / sqrt(1 - t^2); f maps node count -> values."""
    n = MIN_NODES
    prev = None
    while n <= MAX_NODES:
        val = np.pi / n * np.sum(f(n))
        if prev is not None and abs(val - prev) <= tol / 10 * max(1.0, abs(val)):
            return complex(val)
        prev = val
        n *= 2
    raise QuadratureError(f"no convergence with {MAX_NODES} nodes")


def _cut_index(cfg: BranchConfig, i: int, j: int) -> int | None:
    a, b = min(i, j), max(i, j)
    if a % 2 == 0 and b == a + 1 and a // 2 < cfg.g:
        return a // 2
    return None


def segment_integral(cfg: BranchConfig, i: int, j: int, power: int = 0, tol: float = 1e-13) -> complex:
    """int z^power dz / w along the straight segment from lambda_i to lambda_j (1-based, finite).

    Off the cuts w is the global branch W.  On a finite cut s_k the boundary
    value from the left of lambda_{2k-1} -> lambda_{2k} is used whichever
    direction is requested, so reversing the orientation negates the value.
    """
    if not (1 <= i <= len(cfg.lambdas) and 1 <= j <= len(cfg.lambdas)) or i == j:
        raise ValueError("need two distinct branch-point indices")
    if cfg.lambdas[i - 1] is INF or cfg.lambdas[j - 1] is INF:
        raise ValueError("segment endpoints must be finite")
    i0, j0 = i - 1, j - 1
    _check_clearance(cfg, i0, j0)
    W = _branch(cfg)
    cut = _cut_index(cfg, i0, j0)
    if cut is not None:
        lo, hi = 2 * cut, 2 * cut + 1

        def f(n):
            z, r, diffs, _ = _segment_nodes(cfg, lo, hi, n)
            # W_left = i r sqrt(1 - t^2) * (other factors)
            return z**power / (1j * W(diffs, skip=cut))

        val = _integrate(f, tol)
        return val if i0 == lo else -val

    def f(n):
        z, r, diffs, sq = _segment_nodes(cfg, i0, j0, n)
        return r * z**power * sq / W(diffs)

    return _integrate(f, tol)


def _left_cut_value(cfg: BranchConfig, k: int, z: complex) -> complex:
    """Boundary value of W on s_k from its left side (k 0-based)."""
    lam = cfg.finite
    p, q = lam[2 * k], lam[2 * k + 1]
    m, r = 0.5 * (p + q), 0.5 * (q - p)
    t = ((z - m) / r).real
    diffs = (z - lam)[:, None]
    return complex(1j * r * np.sqrt(1 - t * t) * _branch(cfg)(diffs, skip=k)[0])


def intersection_signs(cfg: BranchConfig) -> np.ndarray:
    """<a_k, b_k> for the raw cycles, read off at P_{2k} in the coordinate t = w / kappa."""
    lam = cfg.finite
    W = _branch(cfg)
    signs = []
    for k in range(cfg.g):
        base = lam[2 * k + 1]
        toward_cut = lam[2 * k] - base
        toward_next = lam[2 * k + 2] - base
        s = 1e-6 * min(abs(toward_cut), abs(toward_next))
        za = base + s * toward_next / abs(toward_next)
        zb = base + s * toward_cut / abs(toward_cut)
        d_a = W((za - lam)[:, None])[0]
        d_b = -_left_cut_value(cfg, k, zb)
        cross = (d_a.conjugate() * d_b).imag
        signs.append(1 if cross > 0 else -1)
    return np.array(signs)


@dataclass(frozen=True, eq=False)
class PeriodData:
    """a- and b-periods of the differentials z^i dz / w, and Pi = A^-1 B.

    ``A[i, k]`` is the a_k-period of z^i dz/w (likewise ``B``).
    """

    A: np.ndarray
    B: np.ndarray
    Pi: SiegelPoint
    config: BranchConfig | None = None
    symmetry_defect: float = 0.0
    signs: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def g(self) -> int:
        return self.Pi.g

    @property
    def matrix(self) -> np.ndarray:
        return self.Pi.sigma


def raw_periods(cfg: BranchConfig, tol: float = 1e-13) -> tuple[np.ndarray, np.ndarray]:
    """(A, B) with a- and b-periods of z^i dz / w, i = 0..g-1, before orientation fixing."""
    g = cfg.g
    A = np.zeros((g, g), dtype=complex)
    B = np.zeros((g, g), dtype=complex)
    for i in range(g):
        connectors = [segment_integral(cfg, 2 * j + 2, 2 * j + 3, i, tol) for j in range(g)]
        for k in range(g):
            B[i, k] = 2 * segment_integral(cfg, 2 * k + 1, 2 * k + 2, i, tol)
            A[i, k] = 2 * sum(connectors[k:])
    return A, B


def period_matrix(cfg, tol: float = 1e-13) -> PeriodData:
    """Periods in the symplectic basis (a, b) and the normalized period matrix Pi = A^-1 B."""
    if not isinstance(cfg, BranchConfig):
        cfg = BranchConfig(tuple(cfg))
    cfg.validate_cut_system()
    A, B = raw_periods(cfg, tol)
    signs = intersection_signs(cfg)
    B = B * signs[None, :]
    Pi = np.linalg.solve(A, B)
    defect = float(np.max(np.abs(Pi - Pi.T)))
    if defect > SYMMETRY_ABORT:
        raise PeriodMatrixError(f"period matrix asymmetric by {defect:.2e}; cycle/sheet bookkeeping is inconsistent")
    Pi = 0.5 * (Pi + Pi.T)
    try:
        sp = SiegelPoint(Pi)
    except ValueError as exc:
        raise PeriodMatrixError(f"Im(Pi) not positive definite: {exc}") from None
    return PeriodData(A=A, B=B, Pi=sp, config=cfg, symmetry_defect=defect, signs=signs)


def half_period_coefficients(g: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """(e-part, pi-part) coefficient vectors in {0, 1/2} for phi(P_1), ..., phi(P_{2g+2})."""
    out = []
    for idx in range(1, 2 * g + 3):
        e = np.zeros(g)
        p = np.zeros(g)
        if idx == 1:
            pass
        elif idx == 2:
            p[0] = 0.5
        elif idx == 2 * g + 2:
            e[0] = 0.5
        elif idx == 2 * g + 1:
            p[:] = 0.5
            e[0] = 0.5
        elif idx % 2 == 1:  # P_{2k+1}, 1 <= k < g
            k = (idx - 1) // 2
            p[:k] = 0.5
            e[: k + 1] = 0.5
        else:  # P_{2k+2}, 1 <= k < g
            k = (idx - 2) // 2
            p[: k + 1] = 0.5
            e[: k + 1] = 0.5
        out.append((e, p))
    return out


@dataclass(frozen=True, eq=False)
class AbelPoint:
    """A point of C^g modulo the lattice spanned by the columns of (Id, Pi).

    ``coords`` are the real lattice coordinates (e-part, pi-part), each in [0, 1).
    """

    value: np.ndarray
    coords: tuple[np.ndarray, np.ndarray]

    @classmethod
    def from_coordinates(cls, e_part, pi_part, Pi: np.ndarray) -> "AbelPoint":
        e = np.mod(np.asarray(e_part, dtype=float), 1.0)
        p = np.mod(np.asarray(pi_part, dtype=float), 1.0)
        return cls(value=e + Pi @ p, coords=(e, p))


def half_periods(pd: PeriodData, reduce: bool = True) -> list[AbelPoint]:
    """Abel images phi(P_1), ..., phi(P_{2g+2}) with base point P_1."""
    Pi = pd.matrix
    out = []
    for e, p in half_period_coefficients(pd.g):
        if reduce:
            out.append(AbelPoint.from_coordinates(e, p, Pi))
        else:
            out.append(AbelPoint(value=e + Pi @ p, coords=(e, p)))
    return out


def abel_map(cfg: BranchConfig, pd: PeriodData, j: int, tol: float = 1e-13) -> np.ndarray:
    """int_{P_1}^{P_j} of the normalized differentials, along the chain of segments lambda_1 -> ... -> lambda_j.

    Independent of the half-period table; reduced against it in tests.
    """
    if cfg.lambdas[j - 1] is INF:
        raise ValueError("use a finite branch point")
    g = cfg.g
    raw = np.zeros(g, dtype=complex)
    for i in range(g):
        raw[i] = sum(segment_integral(cfg, s, s + 1, i, tol) for s in range(1, j))
    return np.linalg.solve(pd.A, raw)


def lattice_coordinates(v: np.ndarray, Pi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Real (e, pi) coordinates of v = e + Pi p."""
    p = np.linalg.solve(Pi.imag, v.imag)
    e = (v - Pi @ p).real
    return e, p


# Characteristics of the branch-point formula: top rows (1, 0, ..., 0), bottom
# rows (1, 1, 0, ...) in the numerator and (0, 1, 0, ...) in the denominator.
def recovery_characteristics(g: int) -> tuple[ThetaCharacteristic, ThetaCharacteristic]:
    top = (1,) + (0,) * (g - 1)
    if g == 1:
        return ThetaCharacteristic(top, (1,)), ThetaCharacteristic(top, (0,))
    return (
        ThetaCharacteristic(top, (1, 1) + (0,) * (g - 2)),
        ThetaCharacteristic(top, (0, 1) + (0,) * (g - 2)),
    )


def valid_recovery_indices(g: int) -> tuple[int, ...]:
    """j = 3, 4, 6, ..., 2g for g >= 2; j = 3 for g = 1."""
    if g == 1:
        return (3,)
    return (3,) + tuple(range(4, 2 * g + 1, 2))


def theta_quotient(pd: PeriodData, num: ThetaCharacteristic, den: ThetaCharacteristic, point: np.ndarray,
                   base: np.ndarray, tol: float = 1e-14) -> complex:
    """theta^2[den](base) theta^2[num](point) / (theta^2[num](base) theta^2[den](point))."""
    sp = pd.Pi
    a = theta(den, base, sp, tol) ** 2 * theta(num, point, sp, tol) ** 2
    b = theta(num, base, sp, tol) ** 2 * theta(den, point, sp, tol) ** 2
    return a / b


def recover_branch_point(pd: PeriodData, j: int, tol: float = 1e-14) -> complex:
    """lambda_j from the theta quotient evaluated at phi(P_j); normalized so the value at P_2 is 1."""
    g = pd.g
    if j not in valid_recovery_indices(g):
        raise DegenerateIndexError(
            f"j = {j}: numerator and denominator both vanish; valid indices are {valid_recovery_indices(g)}"
        )
    num, den = recovery_characteristics(g)
    points = half_periods(pd, reduce=False)
    return theta_quotient(pd, num, den, points[j - 1].value, points[1].value, tol)


# Pair for lambda_5 at g = 2, found by calibrate_last_branch_point over a
# corpus with known lambda_5 and kept under test.  Same normalization at P_2.
LAMBDA5_CHARACTERISTICS = (
    ThetaCharacteristic((1, 0), (1, 0)),
    ThetaCharacteristic((1, 0), (0, 0)),
)


class CalibrationError(RuntimeError):
    """No characteristic pair reproduces lambda_5 on the whole corpus."""


def recover_last_branch_point(pd: PeriodData, tol: float = 1e-14) -> complex:
    """lambda_5 (g = 2) from the calibrated characteristic pair."""
    if pd.g != 2:
        raise ValueError("the calibrated variant is for g = 2")
    num, den = LAMBDA5_CHARACTERISTICS
    points = half_periods(pd, reduce=False)
    return theta_quotient(pd, num, den, points[4].value, points[1].value, tol)


def recover_all(pd: PeriodData, tol: float = 1e-14) -> BranchConfig:
    """Normalized {0, 1, lambda_3, ..., inf} from Pi alone (g = 1 or 2)."""
    if pd.g == 1:
        return BranchConfig.normalized([recover_branch_point(pd, 3, tol)])
    if pd.g != 2:
        raise ValueError("recover_all supports g <= 2")
    l3 = recover_branch_point(pd, 3, tol)
    l4 = recover_branch_point(pd, 4, tol)
    l5 = recover_last_branch_point(pd, tol)
    return BranchConfig.normalized([l3, l4, l5])


def calibrate_last_branch_point(corpus, atol: float = 1e-8) -> list:
    """Characteristic pairs whose quotient at phi(P_5) equals lambda_5 on every config of the corpus."""
    surviving = None
    for cfg in corpus:
        pd = period_matrix(cfg)
        target = cfg.lambdas[4]
        hits = {k for k, v in candidate_quotients(pd, 5).items() if abs(v - target) < atol * max(1.0, abs(target))}
        surviving = hits if surviving is None else surviving & hits
        if not surviving:
            raise CalibrationError("no characteristic pair survives the corpus")
    return sorted(surviving, key=lambda k: (k[0].eps, k[0].eps_prime, k[1].eps, k[1].eps_prime))


def candidate_quotients(pd: PeriodData, j: int, tol: float = 1e-14) -> dict:
    """All ordered pairs (num, den) of half-integer characteristics: quotient at phi(P_j) normalized at P_2.

    Pairs whose value is 0/0 or whose normalizer vanishes are skipped.
    """
    from .theta import half_integer_characteristics

    g = pd.g
    chars = half_integer_characteristics(g)
    points = half_periods(pd, reduce=False)
    at_j = {c: theta(c, points[j - 1].value, pd.Pi, tol) ** 2 for c in chars}
    at_2 = {c: theta(c, points[1].value, pd.Pi, tol) ** 2 for c in chars}
    out = {}
    for num in chars:
        for den in chars:
            if num == den:
                continue
            d = at_2[num] * at_j[den]
            if abs(d) < 1e-10 or abs(at_2[den]) < 1e-10:
                continue
            out[(num, den)] = at_2[den] * at_j[num] / d
    return out


def random_config(rng: np.random.Generator, g: int = 2, radius: float = 5.0, separation: float = 0.3,
                  max_tries: int = 10_000) -> BranchConfig:
    """Normalized config with |lambda| <= radius, pairwise separation, and a valid cut system (rejection sampling)."""
    for _ in range(max_tries):
        r = radius * np.sqrt(rng.uniform(size=2 * g - 1))
        ang = rng.uniform(0, 2 * np.pi, size=2 * g - 1)
        interior = list(r * np.exp(1j * ang))
        pts = [0.0, 1.0] + interior
        if min(abs(a - b) for i, a in enumerate(pts) for b in pts[i + 1:]) < separation:
            continue
        cfg = BranchConfig.normalized(interior)
        try:
            cfg.validate_cut_system()
        except BranchConfigError:
            continue
        return cfg
    raise RuntimeError("could not sample a valid configuration")


def random_corpus(n: int, seed: int = 0, g: int = 2, **kw) -> list[BranchConfig]:
    rng = np.random.default_rng(seed)
    return [random_config(rng, g, **kw) for _ in range(n)]
