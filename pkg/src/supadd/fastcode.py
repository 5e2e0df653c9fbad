"""Closed-form channel profiles for the even-weight [[n, n-1, 2]] family and
the simplex [[2**r - 1, r, 2**(r-1)]] family, without building any
2**n-dimensional object.

The block structure of the even-weight family's Gram matrix makes the
scaled Hadamard matrix its eigenbasis; the spectrum is carried by four
coefficient arrays (a, b, c, d) that double in length per added letter, and
the square root of the Gram matrix has only two distinct entries per
4x4 block, recovered by a length-2**(n-3) Hadamard transform.
"""

from typing import NamedTuple

import numpy as np

from ._kernels import fwht
from .errors import InvalidInput, LinearDependence, NoRoot
from .information import binary_flip_probability, c1_binary, _h2


class CoefficientTable(NamedTuple):
    n: int
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray


class SpectralProfile(NamedTuple):
    alpha: np.ndarray
    beta: np.ndarray
    mu: np.ndarray
    nu: np.ndarray
    u: np.ndarray
    v: np.ndarray


class SimplexProfile(NamedTuple):
    u: float
    v: float
    info_bits: float
    error_probability: float


def _check_kappa(kappa: float):
    if kappa == 1.0:
        raise LinearDependence("kappa = 1 collapses the codeword states")
    if not 0.0 <= kappa < 1.0:
        raise InvalidInput(f"kappa must lie in [0, 1), got {kappa}")


def _xlog2x(x: np.ndarray) -> np.ndarray:
    safe = np.where(x > 0.0, x, 1.0)
    return x * np.log2(safe)


def nn12_coefficients(n: int, kappa: float) -> CoefficientTable:
    """Spectral coefficient arrays of length 2**(n-3), doubling from the
    length-2 seed a=(1,1), b=(k2,-k2), c=(1,1), d=(1,-1)."""
    if n < 4:
        raise InvalidInput(f"coefficient recursion starts at n=4, got {n}")
    k2 = kappa * kappa
    a = np.array([1.0, 1.0])
    b = np.array([k2, -k2])
    c = np.array([1.0, 1.0])
    d = np.array([1.0, -1.0])
    for _ in range(5, n + 1):
        a, b, c, d = (
            np.concatenate([a + k2 * c, a - k2 * c]),
            np.concatenate([b + k2 * d, b - k2 * d]),
            np.concatenate([a + c, a - c]),
            np.concatenate([b + d, b - d]),
        )
    return CoefficientTable(n=n, a=a, b=b, c=c, d=d)


def nn12_profile(n: int, kappa: float) -> SpectralProfile:
    """Eigenvalue arrays (alpha, beta), square-root block entries (mu, nu),
    and the channel row profile (u, v) of the [[n, n-1, 2]] code."""
    if n < 3:
        raise InvalidInput(f"block length must be at least 3, got {n}")
    _check_kappa(kappa)
    k2 = kappa * kappa
    if n == 3:
        a = np.array([1.0])
        b = np.array([0.0])
    else:
        table = nn12_coefficients(n, kappa)
        a, b = table.a, table.b
    alpha = np.sqrt(np.clip((1.0 + 3.0 * k2) * a + (3.0 + k2) * b, 0.0, None))
    beta = np.sqrt(np.clip((1.0 - k2) * (a - b), 0.0, None))
    mu = (alpha + 3.0 * beta) / 4.0
    nu = (alpha - beta) / 4.0
    m = 2 ** (n - 3)
    u = fwht(mu) / m
    v = fwht(nu) / m
    return SpectralProfile(alpha=alpha, beta=beta, mu=mu, nu=nu, u=u, v=v)


def nn12_mutual_information(n: int, kappa: float) -> float:
    """n - 1 + sum_k [u_k^2 log2 u_k^2 + 3 v_k^2 log2 v_k^2] bits."""
    prof = nn12_profile(n, kappa)
    u2 = prof.u**2
    v2 = prof.v**2
    return float(n - 1 + np.sum(_xlog2x(u2) + 3.0 * _xlog2x(v2)))


def nn12_error_probability(n: int, kappa: float) -> float:
    """1 - u(n,1)^2: every diagonal entry of the square-root Gram equals
    the first Hadamard component of mu."""
    prof = nn12_profile(n, kappa)
    return float(1.0 - prof.u[0] ** 2)


def simplex_profile(r: int, kappa: float) -> SimplexProfile:
    """Closed form for the equidistant [[2**r - 1, r, 2**(r-1)]] family."""
    if r < 2:
        raise InvalidInput(f"rank must be at least 2, got {r}")
    _check_kappa(kappa)
    m = 2**r
    kd = kappa ** (m // 2)
    alpha = np.sqrt(1.0 + (m - 1) * kd)
    beta = np.sqrt(1.0 - kd)
    u = (alpha + (m - 1) * beta) / m
    v = (alpha - beta) / m
    info = float(np.log2(m) + _xlog2x(np.array(u * u)) + (m - 1) * _xlog2x(np.array(v * v)))
    return SimplexProfile(u=float(u), v=float(v), info_bits=info, error_probability=float(1.0 - u * u))


def pair_block_information(kappa: float) -> float:
    """Information of the two-codeword length-2 block {00, 11} under its
    minimum-error measurement (a binary symmetric channel on overlap
    kappa**2)."""
    _check_kappa(kappa)
    q = binary_flip_probability(kappa * kappa)
    return 1.0 - _h2(q)


def block_gain(n: int, kappa: float) -> float:
    """Per-letter information of the length-n reference code minus the
    single-use optimum (n=2 is the two-codeword block, n>=3 the
    even-weight family)."""
    if n < 2:
        raise InvalidInput(f"block gain needs n >= 2, got {n}")
    if n == 2:
        return pair_block_information(kappa) / 2.0 - c1_binary(kappa)
    return nn12_mutual_information(n, kappa) / n - c1_binary(kappa)


def find_kappa_star(n: int, tol: float = 1e-6) -> float:
    """Zero crossing of the per-letter gain: scans a 99-point grid for the
    first sign change, then bisects to width tol."""
    if n < 2:
        raise InvalidInput(f"crossing search needs n >= 2, got {n}")
    grid = np.linspace(0.01, 0.99, 99)
    values = np.array([block_gain(n, k) for k in grid])
    change = np.flatnonzero((values[:-1] <= 0.0) & (values[1:] > 0.0))
    if change.size == 0:
        raise NoRoot(f"gain has no negative-to-positive crossing for n={n}")
    lo, hi = grid[change[0]], grid[change[0] + 1]
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if block_gain(n, mid) > 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
