"""Decoder synthesis: extend the collective measurement basis to the full
product space, build the adapting orthogonal matrix that maps it onto a
separate letter-by-letter measurement, verify its error, and factor it into
a schedule of two-dimensional plane rotations.

The letter frame produced by symmetric orthonormalization of the letter
pair coincides with the coordinate axes of the embedding, so the product
measurement basis is the standard basis e_label, labels counting bits with
the first letter most significant.
"""

from dataclasses import dataclass

import math

import numpy as np

from ._kernels import apply_rotations
from .detection import Measurement, square_root_measurement
from .ensembles import Code, codeword_states, extend_code_sequences, gram
from .errors import InvalidInput, LinearDependence, ResourceLimit

_RESIDUAL_FLOOR = 1e-8
_MAX_SYNTH_N = 12


@dataclass(eq=False)
class SynthesizedUnitary:
    """Orthogonal adaptor U with the basis labels assigned to codewords and
    the separate-measurement error it realizes."""

    U: np.ndarray
    target_outcomes: tuple
    error_probability: float


@dataclass(eq=False)
class RotationSchedule:
    """Ordered plane rotations (j, i, gamma) with 1-based axis indices;
    flip_last records a trailing sign flip of the last axis (determinant
    -1), serialized as a (dim, dim, pi) line."""

    dim: int
    rotations: list
    flip_last: bool


def letter_frame(kappa: float):
    """Orthonormal pair from symmetric orthonormalization of the letters:
    the sum direction and the difference direction, unit normalized."""
    from .ensembles import embed_binary_letters

    plus, minus = embed_binary_letters(kappa)
    a = plus + minus
    b = plus - minus
    return a / np.linalg.norm(a), b / np.linalg.norm(b)


def schmidt_extend(codeword_basis, all_sequences) -> np.ndarray:
    """Complete an orthonormal basis of the codeword span to the full space
    by orthonormalizing the remaining sequence states in index order.

    The first rows of the output are the input basis unchanged; each later
    sequence is projected off everything accepted so far (twice, for
    orthogonality at working precision) and normalized.
    """
    basis = np.array(codeword_basis, dtype=np.float64)
    sequences = np.asarray(all_sequences, dtype=np.float64)
    m, dim = basis.shape
    total = sequences.shape[0]
    if total != dim:
        raise InvalidInput("need exactly dim sequences to complete the basis")
    out = np.empty((dim, dim))
    out[:m] = basis
    k = m
    for idx in range(m, total):
        r = sequences[idx].copy()
        for _ in range(2):
            r -= out[:k].T @ (out[:k] @ r)
        norm = np.linalg.norm(r)
        if norm < _RESIDUAL_FLOOR:
            raise LinearDependence(
                f"sequence {idx} lies in the span of the accepted basis "
                f"(residual {norm:.3e})"
            )
        out[k] = r / norm
        k += 1
    return out


def synthesize_unitary(
    code: Code,
    kappa: float,
    measurement: Measurement | None = None,
    outcome_assignment=None,
) -> SynthesizedUnitary:
    """Build the orthogonal adaptor that maps the collective measurement
    basis onto product-basis outcomes.

    Codeword m is assigned the product-basis label outcome_assignment[m]
    (default: labels 0..M-1); unassigned labels absorb the non-codeword
    basis vectors in increasing order. The returned error probability is
    computed from the adapted states at their assigned labels and matches
    the collective measurement's own error.
    """
    if code.n > _MAX_SYNTH_N:
        raise ResourceLimit(f"synthesis guarded at n <= {_MAX_SYNTH_N}, got {code.n}")
    m = code.num_codewords
    dim = 2**code.n
    all_bits = extend_code_sequences(code)
    sequences = codeword_states(Code(n=code.n, codewords=all_bits), kappa)
    if measurement is None:
        g = gram(code, kappa)
        measurement, _ = square_root_measurement(g, states=sequences[:m])
    vectors = np.asarray(measurement.vectors, dtype=np.float64)
    if vectors.shape == (m, dim):
        omega = schmidt_extend(vectors, sequences)
    elif vectors.shape == (dim, dim):
        omega = vectors
    else:
        raise InvalidInput(f"measurement shape {vectors.shape} fits neither M nor 2**n")

    if outcome_assignment is None:
        labels = list(range(m))
    else:
        labels = [int(x) for x in outcome_assignment]
    if len(labels) != m or len(set(labels)) != m:
        raise InvalidInput("outcome assignment must be M distinct labels")
    if min(labels) < 0 or max(labels) >= dim:
        raise InvalidInput("outcome labels must lie in [0, 2**n)")
    rest = [x for x in range(dim) if x not in set(labels)]
    labels_ext = labels + rest

    b = sequences @ omega.T
    # The letter frame coincides with the embedding axes, so the product
    # basis is the standard basis and target coordinates are the sequence
    # state coordinates themselves.
    c = sequences
    try:
        x = np.linalg.solve(b, c)
    except np.linalg.LinAlgError as exc:
        raise LinearDependence(f"expansion matrix is singular: {exc}") from exc
    u = np.empty((dim, dim))
    u[np.asarray(labels_ext)] = x
    amps = sequences[:m] @ u.T
    correct = amps[np.arange(m), np.asarray(labels)]
    error = 1.0 - float(np.sum(code.priors * correct**2))
    return SynthesizedUnitary(U=u, target_outcomes=tuple(labels), error_probability=error)


def reck_decompose(u, tol: float = 1e-8) -> RotationSchedule:
    """Factor an orthogonal matrix into plane rotations by column-major
    elimination of below-diagonal entries; a leftover determinant of -1
    becomes the flip_last flag."""
    w = np.array(u, dtype=np.float64)
    dim = w.shape[0]
    if w.shape != (dim, dim) or np.abs(w @ w.T - np.eye(dim)).max() > tol:
        raise InvalidInput("input is not orthogonal within tolerance")
    rotations = []
    for i in range(dim - 1):
        for j in range(i + 1, dim):
            gamma = math.atan2(w[j, i], w[i, i])
            if abs(gamma) <= 1e-15:
                continue
            cg = math.cos(gamma)
            sg = math.sin(gamma)
            ri = w[i].copy()
            rj = w[j].copy()
            w[i] = cg * ri + sg * rj
            w[j] = -sg * ri + cg * rj
            rotations.append((j + 1, i + 1, gamma))
    flip_last = bool(w[dim - 1, dim - 1] < 0.0)
    return RotationSchedule(dim=dim, rotations=rotations, flip_last=flip_last)


def reconstruct_unitary(schedule: RotationSchedule) -> np.ndarray:
    """Multiply the schedule back out (rotations in order, then the
    optional trailing axis flip)."""
    k = len(schedule.rotations)
    js = np.empty(k, dtype=np.int64)
    iss = np.empty(k, dtype=np.int64)
    gammas = np.empty(k, dtype=np.float64)
    for t, (j, i, g) in enumerate(schedule.rotations):
        js[t] = j - 1
        iss[t] = i - 1
        gammas[t] = g
    return apply_rotations(js, iss, gammas, schedule.dim, schedule.flip_last)


def schedule_to_csv(schedule: RotationSchedule) -> str:
    """One "j,i,gamma" line per rotation (1-based); a line with j == i ==
    dim and gamma = pi records the trailing axis flip."""
    lines = ["j,i,gamma"]
    lines += [f"{j},{i},{g:.17g}" for j, i, g in schedule.rotations]
    if schedule.flip_last:
        lines.append(f"{schedule.dim},{schedule.dim},{math.pi:.17g}")
    return "\n".join(lines) + "\n"


def schedule_from_csv(text: str, dim: int | None = None) -> RotationSchedule:
    rotations = []
    flip_last = False
    flip_dim = None
    for line in text.strip().splitlines():
        line = line.strip()
        if not line or line[0].isalpha():
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise InvalidInput(f"bad schedule line: {line!r}")
        j, i, g = int(parts[0]), int(parts[1]), float(parts[2])
        if j == i:
            flip_last = True
            flip_dim = j
        else:
            rotations.append((j, i, g))
    if dim is None:
        candidates = [flip_dim] if flip_dim else []
        candidates += [j for j, _, _ in rotations]
        if not candidates:
            raise InvalidInput("cannot infer dimension from an empty schedule")
        dim = max(candidates)
    return RotationSchedule(dim=dim, rotations=rotations, flip_last=flip_last)


def unitary_to_text(u: np.ndarray) -> str:
    """Row-major numeric text, one row per line."""
    return "\n".join(" ".join(f"{x:.17g}" for x in row) for row in np.asarray(u)) + "\n"
