"""Mutual information, first-order capacity, entropy bound, threshold-point
quantities, superadditivity gain, and channel-memory diagnostics.

All logarithms are base 2; every information quantity is in bits.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._kernels import mi_bits
from .detection import helstrom_binary, square_root_measurement
from .ensembles import (
    Code,
    LetterEnsemble,
    build_nn12_code,
    embed_binary_letters,
    extend_code_sequences,
    gram,
)
from .errors import InvalidInput, ResourceLimit


class InfoResult(NamedTuple):
    mutual_information_bits: float
    per_letter: float
    inputs: str


@dataclass(eq=False)
class CapacityPoint:
    """Per-kappa comparison of block-coded information against the
    single-use and entropy-bound references."""

    kappa: float
    c1: float
    holevo: float
    in_per_letter: float
    gain: float


def _h2(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return float(-p * np.log2(p) - (1.0 - p) * np.log2(1.0 - p))


def binary_flip_probability(kappa: float) -> float:
    """Minimum-error flip probability of the equiprobable letter pair."""
    return 0.5 * (1.0 - np.sqrt(1.0 - kappa * kappa))


def mutual_information(priors, channel, block_length: int = 1) -> InfoResult:
    """I = sum_i xi_i sum_j P(j|i) log2[P(j|i) / sum_k xi_k P(j|k)],
    with 0 log 0 = 0."""
    priors = np.asarray(priors, dtype=np.float64)
    channel = np.asarray(channel, dtype=np.float64)
    if channel.ndim != 2 or priors.shape[0] != channel.shape[0]:
        raise InvalidInput("priors and channel dimensions disagree")
    if channel.min() < -1e-12 or np.abs(channel.sum(axis=1) - 1.0).max() > 1e-8:
        raise InvalidInput("channel must be row-stochastic")
    bits = mi_bits(priors, channel)
    return InfoResult(
        mutual_information_bits=bits,
        per_letter=bits / block_length,
        inputs=f"M={channel.shape[0]}, outcomes={channel.shape[1]}",
    )


def c1_binary(kappa: float) -> float:
    """Best single-use information of the binary letter pair: the symmetric
    channel at the minimum-error measurement, 1 - h2(p)."""
    if not 0.0 <= kappa < 1.0:
        raise InvalidInput(f"kappa must lie in [0, 1), got {kappa}")
    return 1.0 - _h2(binary_flip_probability(kappa))


def holevo_binary(kappa: float) -> float:
    """Entropy bound of the equiprobable binary ensemble: h2((1+kappa)/2)."""
    if not 0.0 <= kappa < 1.0:
        raise InvalidInput(f"kappa must lie in [0, 1), got {kappa}")
    return _h2((1.0 + kappa) / 2.0)


def holevo_general(ensemble: LetterEnsemble) -> float:
    """Entropy of the prior-weighted mixture for fixed priors: the spectrum
    of (sqrt(xi_i) sqrt(xi_j) overlap_ij) is the mixture spectrum."""
    w = np.sqrt(ensemble.priors)
    mat = ensemble.overlaps * np.outer(w, w)
    lam = np.clip(np.linalg.eigvalsh(mat), 0.0, None)
    lam = lam[lam > 0.0]
    return float(-(lam * np.log2(lam)).sum())


def threshold_quantities(kappa: float, n: int):
    """Accessible information and minimum error at the threshold point:
    (n * C1, 1 - (1-p)**n)."""
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    p = binary_flip_probability(kappa)
    return n * c1_binary(kappa), 1.0 - (1.0 - p) ** n


def _is_nn12(code: Code) -> bool:
    if code.n < 3 or code.num_codewords != 2 ** (code.n - 1):
        return False
    if np.abs(code.priors - 1.0 / code.num_codewords).max() > 1e-12:
        return False
    mine = {tuple(r) for r in code.codewords.tolist()}
    ref = {tuple(r) for r in build_nn12_code(code.n).codewords.tolist()}
    return mine == ref


def code_information(code: Code, kappa: float) -> float:
    """Mutual information of the code under square-root collective
    decoding, using the closed-form route for the even-weight family and
    the explicit Gram route otherwise."""
    if _is_nn12(code):
        from .fastcode import nn12_mutual_information

        return nn12_mutual_information(code.n, kappa)
    g = gram(code, kappa)
    _, channel = square_root_measurement(g)
    return mutual_information(code.priors, channel).mutual_information_bits


def superadditivity_gain(code: Code, kappa: float) -> CapacityPoint:
    """Per-letter block-coding information minus the single-use optimum."""
    bits = code_information(code, kappa)
    c1 = c1_binary(kappa)
    per_letter = bits / code.n
    return CapacityPoint(
        kappa=kappa,
        c1=c1,
        holevo=holevo_binary(kappa),
        in_per_letter=per_letter,
        gain=per_letter - c1,
    )


def memory_effect_residual(code: Code, kappa: float) -> float:
    """Largest deviation between the collective square-root channel and the
    product of its per-position letter marginals.

    Outcome labels run over all 2**n sequences; the complement of the code
    carries zero-prior outcomes, which the collective decoder never fires.
    A vanishing residual means the channel factorizes letter by letter.
    """
    if code.n > 12:
        raise ResourceLimit(f"memory diagnostic guarded at n <= 12, got {code.n}")
    full_bits = extend_code_sequences(code)
    m = code.num_codewords
    _, channel = square_root_measurement(gram(code, kappa))
    p_code = np.zeros((m, full_bits.shape[0]))
    p_code[:, :m] = channel
    zeta = code.priors
    prod = np.ones_like(p_code)
    for k in range(code.n):
        sent = code.codewords[:, k]
        got = full_bits[:, k]
        marg = np.zeros((2, 2))
        denom = np.zeros(2)
        for a in (0, 1):
            rows = sent == a
            denom[a] = zeta[rows].sum()
            if denom[a] > 0.0:
                mass = zeta[rows] @ p_code[rows]
                for b in (0, 1):
                    marg[a, b] = mass[got == b].sum() / denom[a]
        prod *= marg[sent][:, got]
    return float(np.abs(p_code - prod).max())


def separable_pair_info(kappa_a: float, kappa_b: float):
    """Information of two letter pairs read by the product of their optimal
    single-use measurements, with the additive reference C1(a) + C1(b)."""
    va = embed_binary_letters(kappa_a)
    vb = embed_binary_letters(kappa_b)
    states = np.array([np.kron(x, y) for x in va for y in vb])
    ma, _ = helstrom_binary(kappa_a, 0.5)
    mb, _ = helstrom_binary(kappa_b, 0.5)
    vectors = np.kron(ma.vectors, mb.vectors)
    x = vectors @ states.T
    channel = (x.T) ** 2
    priors = np.full(4, 0.25)
    info = mutual_information(priors, channel).mutual_information_bits
    return info, c1_binary(kappa_a) + c1_binary(kappa_b)


def random_collective_max_info(
    kappa_a: float, kappa_b: float, trials: int = 10000, seed: int = 20240817
) -> float:
    """Largest information over random orthonormal collective measurements
    of the two-pair ensemble (Haar bases via QR of Gaussian matrices)."""
    va = embed_binary_letters(kappa_a)
    vb = embed_binary_letters(kappa_b)
    states = np.array([np.kron(x, y) for x in va for y in vb])
    priors = np.full(4, 0.25)
    rng = np.random.default_rng(seed)
    best = 0.0
    for _ in range(trials):
        q, r = np.linalg.qr(rng.standard_normal((4, 4)))
        q = q * np.sign(np.diag(r))
        channel = (q @ states.T).T ** 2
        best = max(best, mi_bits(priors, channel))
    return best
