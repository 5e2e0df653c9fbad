"""Measurements over a codeword span: square-root measurement, minimum-error
optimality certification, pairwise-rotation optimization, product
measurements, and the threshold-point certificate.

Index conventions: measurement vectors are rows; for a measurement matrix
X[i, j] = <omega_i | rho_j>, the channel is P(j|i) = X[j, i]**2 / Gram[i, i]
(the denominator is 1 for unit-diagonal Grams and the prior for weighted
ones, so the same formula serves both conventions).
"""

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ._kernels import bayes_sweeps
from .ensembles import Code, codeword_states, embed_binary_letters
from .errors import InvalidInput, LinearDependence, ResourceLimit, Unconverged

_SINGULAR_EIG = 1e-12


@dataclass(eq=False)
class Measurement:
    """Orthonormal rank-1 measurement vectors, one per row.

    frame is 'embedding' when the rows are coordinates in the same explicit
    tensor space as the states, or 'span' when they are coordinates relative
    to the measurement's own orthonormal basis of the codeword span (the
    states then have coordinate rows sqrt_psd(gram)).
    """

    vectors: np.ndarray
    kind: str = "square_root"
    frame: str = "embedding"


@dataclass(eq=False)
class OptimalityReport:
    """Minimum-error certification data for a measurement.

    cond_i_residual is the largest violation of the pairwise balance
    xi_i X_ii X_ji = xi_j X_ij X_jj; cond_ii_min_eig is the smallest
    eigenvalue of the symmetrized matrix (xi_i X_ii X_ji).
    """

    cond_i_residual: float
    cond_ii_min_eig: float
    is_optimal: bool
    error_probability: float
    error_history: tuple = field(default=())


class ThresholdCertificate(NamedTuple):
    cond_i_residual: float
    tm_min_eig: float
    error_probability: float
    expected_error: float
    passes: bool


def _eigh_checked(gram):
    g = np.asarray(gram, dtype=np.float64)
    w, q = np.linalg.eigh(g)
    if w[0] <= _SINGULAR_EIG:
        raise LinearDependence(
            f"gram matrix is numerically singular (min eigenvalue {w[0]:.3e})"
        )
    return g, w, q


def square_root_measurement(gram, states=None):
    """Measurement with vectors rho_hat**(-1/2) |rho_i> and its channel.

    `gram` may be the unweighted or the prior-weighted Gram matrix; when
    `states` is given its rows must carry the same weighting and the
    returned vectors are explicit embedding coordinates. Without `states`
    the vectors are the identity in the measurement's own span frame.
    """
    g, w, q = _eigh_checked(gram)
    root = (q * np.sqrt(w)) @ q.T
    root = (root + root.T) / 2.0
    channel = root**2 / np.diag(g)[:, None]
    if states is None:
        meas = Measurement(np.eye(g.shape[0]), kind="square_root", frame="span")
    else:
        inv_root = (q / np.sqrt(w)) @ q.T
        meas = Measurement(inv_root @ np.asarray(states), kind="square_root")
    return meas, channel


def verify_sqm_orthonormal(gram) -> float:
    """Largest deviation of the square-root measurement's Gram matrix from
    the identity (linear independence makes the vectors orthonormal)."""
    g, w, q = _eigh_checked(gram)
    root = (q * np.sqrt(w)) @ q.T
    m1 = np.linalg.solve(root, g)
    m2 = np.linalg.solve(root, m1.T).T
    return float(np.abs(m2 - np.eye(g.shape[0])).max())


def overlap_matrix(measurement, states) -> np.ndarray:
    """X[i, j] = <omega_i | rho_j> for measurement rows and state rows."""
    vectors = measurement.vectors if isinstance(measurement, Measurement) else measurement
    vectors = np.asarray(vectors, dtype=np.float64)
    states = np.asarray(states, dtype=np.float64)
    if vectors.shape[1] != states.shape[1]:
        raise InvalidInput(
            f"measurement dim {vectors.shape[1]} != state dim {states.shape[1]}"
        )
    return vectors @ states.T


def _cond_i_residual(x, priors):
    lhs = (priors * np.diag(x))[:, None] * x.T
    res = np.abs(lhs - lhs.T)
    np.fill_diagonal(res, 0.0)
    return float(res.max())


def check_optimality(measurement, states, priors, tol: float = 1e-10) -> OptimalityReport:
    """Certify a measurement against the minimum-error conditions.

    Checks the pairwise balance residual and positive semidefiniteness of
    the symmetrized (xi_i X_ii X_ji) matrix; reports the average error
    1 - sum_i xi_i X_ii**2.
    """
    x = overlap_matrix(measurement, states)
    priors = np.asarray(priors, dtype=np.float64)
    if priors.shape[0] != x.shape[0]:
        raise InvalidInput("priors length does not match measurement size")
    residual = _cond_i_residual(x, priors)
    ups = (priors * np.diag(x))[:, None] * x.T
    min_eig = float(np.linalg.eigvalsh((ups + ups.T) / 2.0)[0])
    error = 1.0 - float(np.sum(priors * np.diag(x) ** 2))
    return OptimalityReport(
        cond_i_residual=residual,
        cond_ii_min_eig=min_eig,
        is_optimal=bool(residual <= tol and min_eig >= -tol),
        error_probability=error,
    )


def tm_family_min_eig(measurement, states, priors) -> float:
    """Smallest eigenvalue over the exhaustive risk-comparison family
    T(m)[i, j] = xi_i X_ii X_ji - xi_m X_im X_jm (all m)."""
    x = overlap_matrix(measurement, states)
    priors = np.asarray(priors, dtype=np.float64)
    base = (priors * np.diag(x))[:, None] * x.T
    worst = np.inf
    for m in range(x.shape[0]):
        tm = base - priors[m] * np.outer(x[:, m], x[:, m])
        tm = (tm + tm.T) / 2.0
        worst = min(worst, float(np.linalg.eigvalsh(tm)[0]))
    return worst


def helstrom_binary(kappa: float, xi1: float):
    """Optimal binary projective measurement for the letter pair and its
    minimum error (1 - sqrt(1 - 4 xi1 xi2 kappa**2)) / 2."""
    if not 0.0 <= kappa < 1.0:
        raise InvalidInput(f"kappa must lie in [0, 1), got {kappa}")
    if not 0.0 < xi1 < 1.0:
        raise InvalidInput(f"xi1 must lie in (0, 1), got {xi1}")
    xi2 = 1.0 - xi1
    v1, v2 = embed_binary_letters(kappa)
    w = xi1 * np.outer(v1, v1) - xi2 * np.outer(v2, v2)
    _, q = np.linalg.eigh(w)
    omega1 = q[:, 1] * np.sign(q[:, 1] @ v1)
    omega2 = q[:, 0] * np.sign(q[:, 0] @ v2)
    error = 0.5 * (1.0 - np.sqrt(1.0 - 4.0 * xi1 * xi2 * kappa * kappa))
    meas = Measurement(np.vstack([omega1, omega2]), kind="optimized")
    return meas, float(error)


def bayes_cost_reduction(
    states,
    priors,
    init: Measurement | None = None,
    tol: float = 1e-10,
    max_sweeps: int = 500,
):
    """Drive a measurement basis to the minimum-error optimum by exact
    pairwise plane rotations (lexicographic pair order, repeated).

    Each step solves the two-state subproblem on the plane of one vector
    pair in closed form, so the average error never increases. Returns the
    optimized measurement and a report whose error_history holds the
    average error after each sweep. Raises Unconverged (carrying the best
    iterate) if the residual tolerance is not met within max_sweeps.
    """
    states = np.asarray(states, dtype=np.float64)
    priors = np.asarray(priors, dtype=np.float64)
    if states.shape[0] != priors.shape[0]:
        raise InvalidInput("states and priors disagree on the ensemble size")
    if init is None:
        weighted = np.sqrt(priors)[:, None] * states
        gram_w = weighted @ weighted.T
        init, _ = square_root_measurement(gram_w, states=weighted)
    x = overlap_matrix(init, states)
    v, history, residual, _ = bayes_sweeps(x, priors, tol, max_sweeps)
    vectors = v @ init.vectors
    meas = Measurement(vectors, kind="optimized", frame=init.frame)
    # x holds the final overlap matrix; certify it directly
    resid = _cond_i_residual(x, priors)
    ups = (priors * np.diag(x))[:, None] * x.T
    min_eig = float(np.linalg.eigvalsh((ups + ups.T) / 2.0)[0])
    error = 1.0 - float(np.sum(priors * np.diag(x) ** 2))
    report = OptimalityReport(
        cond_i_residual=resid,
        cond_ii_min_eig=min_eig,
        is_optimal=bool(resid <= tol and min_eig >= -tol),
        error_probability=error,
        error_history=tuple(history.tolist()),
    )
    if residual > tol:
        raise Unconverged(
            f"residual {residual:.3e} > tol {tol:.1e} after {max_sweeps} sweeps",
            measurement=meas,
            report=report,
        )
    return meas, report


def product_pom(base: Measurement, n: int) -> Measurement:
    """Tensor-power measurement: outcome (i_1..i_n) gets the Kronecker
    product of the base vectors, first factor most significant."""
    base_vectors = np.asarray(base.vectors, dtype=np.float64)
    dim = base_vectors.shape[1] ** n
    if dim > 2**20:
        raise ResourceLimit(f"product measurement dimension {dim} exceeds the guard")
    vectors = np.array([[1.0]])
    for _ in range(n):
        vectors = np.kron(vectors, base_vectors)
    return Measurement(vectors, kind="product", frame=base.frame)


def full_product_code(n: int, xi1: float = 0.5) -> Code:
    """All 2**n sequences as codewords with product priors from (xi1, 1-xi1)."""
    bits = np.array(
        [[(v >> (n - 1 - t)) & 1 for t in range(n)] for v in range(2**n)],
        dtype=np.uint8,
    )
    ones = bits.sum(axis=1)
    priors = xi1 ** (n - ones) * (1.0 - xi1) ** ones
    return Code(n=n, codewords=bits, priors=priors)


def threshold_certificate(
    kappa: float, n: int, xi1: float = 0.5, tol: float = 1e-12
) -> ThresholdCertificate:
    """Certify that the product of single-letter optimal measurements is the
    minimum-error measurement for all 2**n sequences under product priors,
    with error 1 - (1-p)**n."""
    code = full_product_code(n, xi1)
    states = codeword_states(code, kappa)
    base, p = helstrom_binary(kappa, xi1)
    pom = product_pom(base, n)
    x = overlap_matrix(pom, states)
    residual = _cond_i_residual(x, code.priors)
    tm_min = tm_family_min_eig(pom, states, code.priors)
    error = 1.0 - float(np.sum(code.priors * np.diag(x) ** 2))
    expected = 1.0 - (1.0 - p) ** n
    passes = bool(residual <= tol and tm_min >= -tol and abs(error - expected) <= tol)
    return ThresholdCertificate(residual, tm_min, error, expected, passes)
