import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supadd.detection import square_root_measurement
from supadd.ensembles import (
    Code,
    LetterEnsemble,
    build_nn12_code,
    build_simplex_code,
    gram,
)
from supadd.errors import InvalidInput
from supadd.information import (
    binary_flip_probability,
    c1_binary,
    code_information,
    holevo_binary,
    holevo_general,
    memory_effect_residual,
    mutual_information,
    random_collective_max_info,
    separable_pair_info,
    superadditivity_gain,
    threshold_quantities,
)


def entropy(p):
    p = p[p > 0]
    return float(-(p * np.log2(p)).sum())


class TestMutualInformation:
    def test_identity_channel(self):
        res = mutual_information(np.full(4, 0.25), np.eye(4))
        assert abs(res.mutual_information_bits - 2.0) < 1e-12

    def test_binary_symmetric_channel(self):
        p = 0.11
        channel = np.array([[1 - p, p], [p, 1 - p]])
        res = mutual_information(np.array([0.5, 0.5]), channel)
        h2 = -p * np.log2(p) - (1 - p) * np.log2(1 - p)
        assert abs(res.mutual_information_bits - (1.0 - h2)) < 1e-12

    def test_distance_two_code_value(self):
        g = gram(build_nn12_code(3), 0.5)
        _, channel = square_root_measurement(g)
        res = mutual_information(np.full(4, 0.25), channel, block_length=3)
        assert abs(res.mutual_information_bits - 1.699661) < 1e-5
        assert abs(res.per_letter - res.mutual_information_bits / 3.0) < 1e-15

    def test_permutation_invariance(self):
        rng = np.random.default_rng(9)
        channel = rng.random((5, 5))
        channel /= channel.sum(axis=1)[:, None]
        priors = rng.random(5)
        priors /= priors.sum()
        base = mutual_information(priors, channel).mutual_information_bits
        perm = rng.permutation(5)
        shuffled = mutual_information(
            priors[perm], channel[perm][:, perm]
        ).mutual_information_bits
        assert abs(base - shuffled) < 1e-12

    @settings(max_examples=30, deadline=None)
    @given(
        st.integers(min_value=2, max_value=6),
        st.integers(min_value=0, max_value=2**31 - 1),
    )
    def test_bounds(self, m, seed):
        rng = np.random.default_rng(seed)
        channel = rng.random((m, m))
        channel /= channel.sum(axis=1)[:, None]
        priors = rng.random(m) + 0.05
        priors /= priors.sum()
        bits = mutual_information(priors, channel).mutual_information_bits
        assert -1e-12 <= bits <= min(entropy(priors), np.log2(m)) + 1e-10

    def test_bad_channel_rejected(self):
        with pytest.raises(InvalidInput):
            mutual_information(np.array([0.5, 0.5]), np.array([[0.9, 0.2], [0.5, 0.5]]))


class TestSingleUseCapacity:
    def test_orthogonal_letters(self):
        assert abs(c1_binary(0.0) - 1.0) < 1e-15

    def test_reference_value(self):
        assert abs(c1_binary(0.5) - 0.645423) < 1e-5

    def test_near_full_overlap_vanishes(self):
        assert c1_binary(0.999999) < 1e-3

    def test_matches_maximized_single_angle_information(self):
        # C1 equals the best projective information over the measurement
        # angle at uniform priors; scan then refine by golden section.
        from supadd.ensembles import embed_binary_letters

        kappa = 0.5
        states = np.vstack(embed_binary_letters(kappa))
        priors = np.array([0.5, 0.5])

        def info(theta):
            basis = np.array(
                [
                    [np.cos(theta), np.sin(theta)],
                    [-np.sin(theta), np.cos(theta)],
                ]
            )
            channel = (basis @ states.T).T ** 2
            return mutual_information(priors, channel).mutual_information_bits

        grid = np.linspace(0.0, np.pi, 721)
        values = [info(t) for t in grid]
        lo = grid[int(np.argmax(values)) - 1]
        hi = grid[int(np.argmax(values)) + 1]
        ratio = (np.sqrt(5) - 1) / 2
        for _ in range(60):
            m1 = hi - ratio * (hi - lo)
            m2 = lo + ratio * (hi - lo)
            if info(m1) < info(m2):
                lo = m1
            else:
                hi = m2
        assert abs(info(0.5 * (lo + hi)) - c1_binary(kappa)) < 1e-6


class TestEntropyBound:
    def test_orthogonal_letters(self):
        assert abs(holevo_binary(0.0) - 1.0) < 1e-15

    def test_reference_value(self):
        assert abs(holevo_binary(0.5) - 0.811278) < 1e-5

    def test_dominates_single_use_capacity(self):
        for kappa in np.linspace(0.01, 0.99, 99):
            assert holevo_binary(kappa) > c1_binary(kappa)

    def test_general_matches_binary(self):
        ens = LetterEnsemble(
            overlaps=np.array([[1.0, 0.5], [0.5, 1.0]]), priors=np.array([0.5, 0.5])
        )
        assert abs(holevo_general(ens) - holevo_binary(0.5)) < 1e-12

    def test_general_orthogonal_uniform(self):
        ens = LetterEnsemble(overlaps=np.eye(4), priors=np.full(4, 0.25))
        assert abs(holevo_general(ens) - 2.0) < 1e-12

    def test_general_degenerate_prior(self):
        ens = LetterEnsemble(
            overlaps=np.array([[1.0, 0.5], [0.5, 1.0]]), priors=np.array([1.0, 0.0])
        )
        assert abs(holevo_general(ens)) < 1e-12


class TestThresholdQuantities:
    def test_orthogonal(self):
        info, err = threshold_quantities(0.0, 5)
        assert abs(info - 5.0) < 1e-12
        assert err == 0.0

    def test_reference_point(self):
        info, err = threshold_quantities(0.5, 3)
        assert abs(info - 1.936268) < 1e-5
        assert abs(err - 0.187796) < 1e-5

    def test_single_use_reduction(self):
        info, err = threshold_quantities(0.5, 1)
        assert abs(info - c1_binary(0.5)) < 1e-15
        assert abs(err - binary_flip_probability(0.5)) < 1e-15

    def test_threshold_error_at_least_single_letter(self):
        for kappa in (0.1, 0.5, 0.9):
            p = binary_flip_probability(kappa)
            for n in (1, 2, 5):
                assert threshold_quantities(kappa, n)[1] >= p - 1e-15


class TestSuperadditivityGain:
    def test_orthogonal_rate_limit(self):
        code = build_nn12_code(4)
        point = superadditivity_gain(code, 0.0)
        assert abs(point.gain - (3.0 / 4.0 - 1.0)) < 1e-12

    def test_negative_at_moderate_overlap(self):
        point = superadditivity_gain(build_nn12_code(3), 0.5)
        assert abs(point.gain - (-0.078869)) < 1e-4
        assert point.gain < 0

    def test_positive_at_strong_overlap(self):
        point = superadditivity_gain(build_nn12_code(3), 0.9)
        assert point.gain > 0

    def test_fields_consistent(self):
        point = superadditivity_gain(build_nn12_code(5), 0.7)
        assert abs(point.gain - (point.in_per_letter - point.c1)) < 1e-15
        assert point.holevo >= point.in_per_letter - 1e-12

    def test_fast_route_matches_explicit_route(self):
        code = build_nn12_code(4)
        fast = code_information(code, 0.6)
        _, channel = square_root_measurement(gram(code, 0.6))
        explicit = mutual_information(code.priors, channel).mutual_information_bits
        assert abs(fast - explicit) < 1e-9

    def test_simplex_route(self):
        bits = code_information(build_simplex_code(3), 0.8)
        assert 0.0 < bits < 3.0


class TestMemoryEffect:
    def test_orthogonal_factorizes(self):
        assert memory_effect_residual(build_nn12_code(3), 0.0) < 1e-12

    def test_single_letter_factorizes(self):
        code = Code(n=1, codewords=np.array([[0], [1]], dtype=np.uint8))
        assert memory_effect_residual(code, 0.7) < 1e-12

    def test_collective_decoding_does_not_factorize(self):
        assert memory_effect_residual(build_nn12_code(3), 0.8) > 1e-3


class TestPairAdditivity:
    def test_product_measurement_achieves_sum(self):
        info, reference = separable_pair_info(0.3, 0.7)
        assert abs(info - reference) < 1e-9

    def test_random_collective_measurements_do_not_exceed(self):
        _, reference = separable_pair_info(0.3, 0.7)
        best = random_collective_max_info(0.3, 0.7, trials=300, seed=5)
        assert best <= reference + 1e-9
