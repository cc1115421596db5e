"""First-order theta functions with integer characteristics.

    theta[eps; eps'](z, sigma) =
        sum_N exp(2 pi i [ 1/2 (N + eps/2)^T sigma (N + eps/2) + (N + eps/2)^T (z + eps'/2) ])

The lattice sum is truncated to an integer box around the maximum of the
Gaussian envelope; the box radius is chosen so that a certified bound on
the discarded terms stays below ``tol`` in absolute value.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

SYMMETRY_TOL = 1e-12
MIN_TOL = 1e-14
MAX_BOX_POINTS = 4_000_000


class ThetaTruncationError(ArithmeticError):
    """The tail of the lattice sum could not be certified below tol."""


class SiegelPointError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SiegelPoint:
    """Complex symmetric matrix with positive definite imaginary part."""

    sigma: np.ndarray

    def __post_init__(self):
        s = np.atleast_2d(np.asarray(self.sigma, dtype=complex)).copy()
        if s.ndim != 2 or s.shape[0] != s.shape[1]:
            raise SiegelPointError(f"sigma must be square, got shape {s.shape}")
        if not np.all(np.isfinite(s)):
            raise SiegelPointError("sigma has non-finite entries")
        if np.max(np.abs(s - s.T), initial=0.0) > SYMMETRY_TOL:
            raise SiegelPointError("sigma is not symmetric")
        s = 0.5 * (s + s.T)
        try:
            np.linalg.cholesky(s.imag)
        except np.linalg.LinAlgError:
            raise SiegelPointError("Im(sigma) is not positive definite") from None
        s.setflags(write=False)
        object.__setattr__(self, "sigma", s)

    @property
    def g(self) -> int:
        return self.sigma.shape[0]


@dataclass(frozen=True)
class ThetaCharacteristic:
    eps: tuple[int, ...]
    eps_prime: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(int(x) for x in self.eps))
        object.__setattr__(self, "eps_prime", tuple(int(x) for x in self.eps_prime))
        if len(self.eps) != len(self.eps_prime):
            raise ValueError("eps and eps_prime must have the same length")

    @property
    def g(self) -> int:
        return len(self.eps)

    @property
    def parity(self) -> int:
        """eps . eps' mod 2; odd characteristics give odd functions."""
        return sum(a * b for a, b in zip(self.eps, self.eps_prime)) % 2

    def shifted(self, nu, nu_prime) -> "ThetaCharacteristic":
        return ThetaCharacteristic(
            tuple(a + 2 * int(b) for a, b in zip(self.eps, nu)),
            tuple(a + 2 * int(b) for a, b in zip(self.eps_prime, nu_prime)),
        )


def half_integer_characteristics(g: int) -> list[ThetaCharacteristic]:
    """The 4**g characteristics with entries in {0, 1}."""
    out = []
    for bits in itertools.product((0, 1), repeat=2 * g):
        out.append(ThetaCharacteristic(bits[:g], bits[g:]))
    return out


def _as_siegel(sigma) -> SiegelPoint:
    return sigma if isinstance(sigma, SiegelPoint) else SiegelPoint(np.asarray(sigma))


def tail_bound(radius: int, lam_min: float, g: int) -> float:
    """Bound on sum of exp(-pi lam |N - c|^2) over N outside the box |N_i - round(c_i)| <= radius.

    A point outside the box has some coordinate with |N_i - c_i| >= radius + 1/2;
    the one-dimensional tails and full sums then bound the product.
    """
    a = radius + 0.5
    q = math.exp(-math.pi * lam_min * (2 * a + 1))
    one_tail = 2.0 * math.exp(-math.pi * lam_min * a * a) / (1.0 - q)
    full = 2.0 + 1.0 / math.sqrt(lam_min)
    return g * one_tail * full ** (g - 1)


def _box_radius(lam_min: float, g: int, log_scale: float, tol: float) -> int:
    target = math.log(tol) - log_scale
    r = 0
    while math.log(tail_bound(r, lam_min, g)) > target:
        r += 1
        if (2 * r + 1) ** g > MAX_BOX_POINTS:
            raise ThetaTruncationError(
                f"tail bound needs box radius > {r} (lambda_min(Im sigma) = {lam_min:.3e})"
            )
    return r


def theta(chr: ThetaCharacteristic, z, sigma, tol: float = 1e-12) -> complex:
    """Evaluate theta[eps; eps'](z, sigma) with absolute truncation error below tol."""
    if tol < MIN_TOL:
        raise ValueError(f"tol must be >= {MIN_TOL}")
    sp = _as_siegel(sigma)
    g = sp.g
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if z.shape != (g,):
        raise ValueError(f"z must have length {g}")
    if not np.all(np.isfinite(z)):
        raise ValueError("z has non-finite entries")
    if chr.g != g:
        raise ValueError("characteristic genus does not match sigma")
    eps = np.asarray(chr.eps, dtype=float) / 2.0
    epsp = np.asarray(chr.eps_prime, dtype=float) / 2.0

    Y = sp.sigma.imag
    lam_min = float(np.linalg.eigvalsh(Y)[0])
    if lam_min <= 0:
        raise ThetaTruncationError("Im(sigma) is not positive definite")
    y = z.imag
    yinv = np.linalg.solve(Y, y)
    # |term| <= exp(pi y^T Y^-1 y) exp(-pi (n - c)^T Y (n - c)), n = N + eps/2
    log_scale = math.pi * float(y @ yinv)
    center = -yinv - eps
    radius = _box_radius(lam_min, g, log_scale, tol)

    base = np.round(center).astype(np.int64)
    axis = np.arange(-radius, radius + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([axis] * g), indexing="ij"), axis=-1).reshape(-1, g)
    n = (grid + base) + eps
    quad = np.einsum("ki,ij,kj->k", n, sp.sigma, n)
    lin = n @ (z + epsp)
    terms = np.exp(2j * np.pi * (0.5 * quad + lin))
    return complex(np.sum(terms))


def theta_1d(z: complex, tau: complex, tol: float = 1e-15) -> complex:
    """Genus-one theta(z, tau) = sum_n exp(pi i n^2 tau + 2 pi i n z), summed outward until terms vanish.

    Independent of :func:`theta`; used as a reference in tests.
    """
    total = 0.0 + 0.0j
    n = 0
    while True:
        ns = (n,) if n == 0 else (n, -n)
        part = sum(np.exp(1j * np.pi * k * k * tau + 2j * np.pi * k * z) for k in ns)
        total += part
        if n > 3 and abs(part) < tol * max(1.0, abs(total)):
            return complex(total)
        n += 1
        if n > 10_000:
            raise ThetaTruncationError("1-D series did not converge")


def envelope(z, sigma) -> float:
    """exp(pi y^T Y^-1 y): the size of the largest term of the lattice sum, up to a factor <= 1."""
    sp = _as_siegel(sigma)
    y = np.atleast_1d(np.asarray(z, dtype=complex)).imag
    return math.exp(math.pi * float(y @ np.linalg.solve(sp.sigma.imag, y)))


def quasiperiodicity_residuals(chr: ThetaCharacteristic, z, sigma, k: int, nu=None, nu_prime=None,
                               tol: float = 1e-12, absolute: bool = False) -> np.ndarray:
    """Residuals of the four transformation laws, index k 0-based.

    (i) shift by the k-th unit vector, (ii) shift by the k-th column of sigma,
    (iii) z -> -z, (iv) characteristic shifted by (2 nu, 2 nu').

    Each residual |LHS - RHS| is divided by max(1, envelope) over the points
    involved, since double-precision roundoff scales with that envelope;
    pass ``absolute=True`` for the raw differences.
    """
    sp = _as_siegel(sigma)
    g = sp.g
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    nu = np.ones(g, dtype=int) if nu is None else np.asarray(nu, dtype=int)
    nu_prime = np.ones(g, dtype=int) if nu_prime is None else np.asarray(nu_prime, dtype=int)
    eps = np.asarray(chr.eps)
    epsp = np.asarray(chr.eps_prime)
    th = theta(chr, z, sp, tol)
    e_k = np.eye(g)[k]

    lhs1 = theta(chr, z + e_k, sp, tol)
    rhs1 = np.exp(2j * np.pi * eps[k] / 2) * th

    lhs2 = theta(chr, z + sp.sigma[:, k], sp, tol)
    rhs2 = np.exp(2j * np.pi * (-z[k] - sp.sigma[k, k] / 2 - epsp[k] / 2)) * th

    lhs3 = theta(chr, -z, sp, tol)
    rhs3 = np.exp(2j * np.pi * (eps @ epsp) / 2) * th

    lhs4 = theta(chr.shifted(nu, nu_prime), z, sp, tol)
    rhs4 = np.exp(2j * np.pi * (eps @ nu_prime) / 2) * th

    res = np.abs(np.array([lhs1 - rhs1, lhs2 - rhs2, lhs3 - rhs3, lhs4 - rhs4]))
    if absolute:
        return res
    env = envelope(z, sp)
    scales = np.maximum(1.0, [max(env, envelope(z + e_k, sp)), max(env, envelope(z + sp.sigma[:, k], sp)), env, env])
    return res / scales
