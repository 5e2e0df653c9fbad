"""Time the compiled kernels against their pure-numpy fallbacks.

Run as `python3 benchmarks/bench_kernels.py`. With SUPADD_NO_NUMBA set the
public names already point at the numpy variants, so the script reports that
and times the numpy path only.
"""

import time

import numpy as np

from supadd import _kernels as K


def best_of(func, repeats: int = 5) -> float:
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        func()
        times.append(time.perf_counter() - start)
    return min(times)


def build_cases(rng: np.random.Generator) -> list:
    n = 12
    code = rng.integers(0, 2, size=(2**(n - 1), n)).astype(np.int64)
    xi = rng.random(512) + 0.05
    xi /= xi.sum()
    channel = rng.random((512, 512)) + 1e-9
    channel /= channel.sum(axis=1)[:, None]
    signal = rng.normal(size=2**14)

    m = 48
    states = rng.normal(size=(m, m))
    states /= np.linalg.norm(states, axis=1)[:, None]
    init, _ = np.linalg.qr(rng.normal(size=(m, m)))
    overlaps = (states @ init.T).T  # far from stationary, so sweeps run
    priors = np.full(m, 1.0 / m)

    dim = 128
    pairs = [(j, i) for i in range(dim - 1) for j in range(i + 1, dim)]
    js = np.array([j for j, _ in pairs], dtype=np.int64)
    iss = np.array([i for _, i in pairs], dtype=np.int64)
    gammas = rng.uniform(-np.pi, np.pi, size=js.size)

    return [
        ("hamming_matrix", lambda: K.hamming_matrix(code),
         lambda: K.hamming_matrix_numpy(code)),
        ("mi_bits", lambda: K.mi_bits(xi, channel),
         lambda: K.mi_bits_numpy(xi, channel)),
        ("fwht", lambda: K.fwht(signal),
         lambda: K.fwht_numpy(signal.copy())),
        ("bayes_sweeps",
         lambda: K.bayes_sweeps(overlaps.copy(), priors, 1e-10, 50),
         lambda: K.bayes_sweeps_numpy(overlaps.copy(), priors, 1e-10, 50)),
        ("apply_rotations",
         lambda: K.apply_rotations(js, iss, gammas, dim, False),
         lambda: K.apply_rotations_numpy(js, iss, gammas, dim, False)),
    ]


def main() -> None:
    rng = np.random.default_rng(7)
    cases = build_cases(rng)
    if K.HAS_NUMBA:
        print("numba available: timing compiled kernels against numpy fallbacks")
        for _, fast, _ in cases:
            fast()  # trigger compilation outside the timed region
    else:
        print("numba unavailable or disabled: public names already use numpy")
    print(f"{'kernel':<18}{'accelerated':>14}{'numpy':>14}{'speedup':>10}")
    for name, fast, plain in cases:
        t_fast = best_of(fast)
        t_plain = best_of(plain)
        ratio = t_plain / t_fast if t_fast > 0 else float("inf")
        print(f"{name:<18}{t_fast * 1e3:>12.3f}ms{t_plain * 1e3:>12.3f}ms{ratio:>9.1f}x")


if __name__ == "__main__":
    main()
